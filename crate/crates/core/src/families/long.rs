use num_rational::Rational64;

use super::{q, Family, OrbitBasis};
use crate::rootsys::Weight;

/// S^L-functions: antisymmetric under reflections in long roots only.
///
/// They vanish on the `r1` wall and on the affine wall; the `r2` wall
/// survives, so weights `(a, 0)` stay in the spectrum. The slant edge
/// `3a + 2b = M` is kept as well and picks up the doubled norm.
#[derive(Debug, Clone, Copy, Default)]
pub struct LongBasis;

impl OrbitBasis for LongBasis {
    fn family(&self) -> Family {
        Family::SL
    }

    fn name(&self) -> &'static str {
        "SL"
    }

    fn norm_factor(&self, lambda: Weight, level: u32) -> Option<Rational64> {
        let (a, b) = (lambda.a, lambda.b);
        let m = i64::from(level);
        if a <= 0 || b < 0 || 3 * a + 2 * b > m {
            return None;
        }
        let h = match b {
            0 if 3 * a == m => q(3, 2),
            0 => q(1, 2),
            _ if 3 * a + 2 * b == m => q(2, 1),
            _ => q(1, 1),
        };
        Some(h)
    }
}
