use num_rational::Rational64;

use super::{q, Family, OrbitBasis};
use crate::rootsys::Weight;

/// S^S-functions: antisymmetric under reflections in short roots only.
///
/// `(0, M/2)` is left out: its samples on `F_M` vanish identically.
#[derive(Debug, Clone, Copy, Default)]
pub struct ShortBasis;

impl OrbitBasis for ShortBasis {
    fn family(&self) -> Family {
        Family::SS
    }

    fn name(&self) -> &'static str {
        "SS"
    }

    fn norm_factor(&self, lambda: Weight, level: u32) -> Option<Rational64> {
        let (a, b) = (lambda.a, lambda.b);
        if a < 0 || b <= 0 || 3 * a + 2 * b >= i64::from(level) {
            return None;
        }
        Some(if a == 0 { q(1, 2) } else { q(1, 1) })
    }
}
