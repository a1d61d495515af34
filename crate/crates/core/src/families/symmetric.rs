use num_rational::Rational64;

use super::{q, Family, OrbitBasis};
use crate::rootsys::Weight;

/// C-functions: symmetric under the whole Weyl group.
#[derive(Debug, Clone, Copy, Default)]
pub struct SymmetricBasis;

impl OrbitBasis for SymmetricBasis {
    fn family(&self) -> Family {
        Family::C
    }

    fn name(&self) -> &'static str {
        "C"
    }

    fn norm_factor(&self, lambda: Weight, level: u32) -> Option<Rational64> {
        let (a, b) = (lambda.a, lambda.b);
        let m = i64::from(level);
        if a < 0 || b < 0 || 3 * a + 2 * b > m {
            return None;
        }
        let h = match (a, b) {
            (0, 0) => q(1, 12),
            (0, b) if 2 * b == m => q(1, 1),
            (0, _) => q(1, 2),
            (a, 0) if 3 * a == m => q(3, 2),
            (_, 0) => q(1, 2),
            _ if 3 * a + 2 * b == m => q(2, 1),
            _ => q(1, 1),
        };
        Some(h)
    }
}
