//! The permissible set: geodesic factorisations whose facing 2-generator
//! divisors are permissible in every dihedral parabolic.

use super::ArtinGroup;
use crate::dihedral::is_permissible_dihedral;
use crate::error::Result;
use crate::word::Letter;

impl ArtinGroup {
    /// Whether `(g1, g2)` is a permissible factorisation of `g1 g2`.
    pub fn is_permissible(&self, g1: &[Letter], g2: &[Letter]) -> Result<bool> {
        let u = self.nf(g1);
        let v = self.nf(g2);
        if self.length(&[u.letters(), v.letters()].concat()) != u.len() + v.len() {
            return Ok(false);
        }
        if u.is_empty() || v.is_empty() {
            return Ok(true);
        }
        for (i, j) in self.pres.pairs() {
            let r = self.rd_ij(&u, i, j)?;
            let l = self.ld_ij(&v, i, j)?;
            if r.is_empty() || l.is_empty() {
                continue;
            }
            if !is_permissible_dihedral(&self.parabolic(i, j)?, &r, &l)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
