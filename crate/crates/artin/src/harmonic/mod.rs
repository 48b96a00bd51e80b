//! Functions on the group: norms, convolution, sphere projections and
//! numeric probes of the convolution inequalities.

pub mod estimates;
pub mod function;

pub use estimates::{check_condition_star_star, operator_norm_estimate, ratio_table, OperatorNormEstimate, RatioRow};
pub use function::{projection, GroupFunction, Projection, ProjectionPlan, ProjectionSide, TOLERANCE};

use crate::large_type::ArtinGroup;
use crate::word::Letter;

/// Word length `ℓ(g)` of elements of a group.
#[derive(Debug, Clone, Copy)]
pub struct LengthFunction<'a> {
    group: &'a ArtinGroup,
}

impl<'a> LengthFunction<'a> {
    pub fn new(group: &'a ArtinGroup) -> Self {
        LengthFunction { group }
    }

    pub fn of(&self, w: &[Letter]) -> usize {
        self.group.length(w)
    }
}
