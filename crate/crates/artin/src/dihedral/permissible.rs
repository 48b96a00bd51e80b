//! Permissible geodesic factorisations in DA(m).

use super::DihedralContext;
use crate::error::Result;
use crate::word::{sign_class, syllable_count, Letter, SignClass};

/// Whether `(g1, g2)` is a permissible factorisation of `g1 g2`.
///
/// The factorisation must be geodesic. It is then permissible when the label is
/// infinite, when the product is unsigned, when either factor has at most two
/// syllables, or when `d(g1) + d(g2) = d(g1 g2)`.
pub fn is_permissible_dihedral(ctx: &DihedralContext, g1: &[Letter], g2: &[Letter]) -> Result<bool> {
    let u = ctx.geodesic(g1)?;
    let v = ctx.geodesic(g2)?;
    let g = ctx.multiply(&u, &v)?;
    if g.len() != u.len() + v.len() {
        return Ok(false);
    }
    if !ctx.label().is_finite() || sign_class(&g) == SignClass::Unsigned {
        return Ok(true);
    }
    // Two syllables or fewer pin down the only geodesic spelling.
    if syllable_count(&ctx.nf(&u)?) <= 2 || syllable_count(&ctx.nf(&v)?) <= 2 {
        return Ok(true);
    }
    Ok(ctx.delta_power(&u)? + ctx.delta_power(&v)? == ctx.delta_power(&g)?)
}
