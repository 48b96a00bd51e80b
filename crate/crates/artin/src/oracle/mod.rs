//! Brute-force ground truth, independent of the normal form engine.

pub mod ball;
pub mod braid_action;
pub mod burau;
pub mod cache;
pub mod closure;
pub mod facts;
pub mod relator;

pub use ball::Ball;
pub use braid_action::BraidAction;
pub use burau::LinearModel;
pub use closure::ClosureOracle;
pub use facts::{fact_set, left_divisors, pair_left_divisors, pair_right_divisors, FactSet};
pub use relator::relator_equal;

use crate::error::Result;

impl ClosureOracle {
    /// Ball of radius `radius` with oracle-canonical words.
    pub fn ball(&self, radius: usize, max_elements: usize) -> Result<Ball> {
        let order = crate::order::LetterOrder::default_for(self.presentation().n());
        Ball::build(self.presentation(), radius, order, max_elements, |w| self.canonical(w))
    }
}
