use num_rational::Rational64;

use super::{q, Family, OrbitBasis};
use crate::rootsys::Weight;

/// S-functions: sign `det w`, vanishing on the whole boundary of F.
#[derive(Debug, Clone, Copy, Default)]
pub struct AntisymmetricBasis;

impl OrbitBasis for AntisymmetricBasis {
    fn family(&self) -> Family {
        Family::S
    }

    fn name(&self) -> &'static str {
        "S"
    }

    fn norm_factor(&self, lambda: Weight, level: u32) -> Option<Rational64> {
        let (a, b) = (lambda.a, lambda.b);
        (a > 0 && b > 0 && 3 * a + 2 * b < i64::from(level)).then(|| q(1, 1))
    }
}
