use thiserror::Error;

use crate::rootsys::Weight;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("generator index must be 1 or 2, got {0}")]
    BadGenerator(u8),

    #[error("weight ({}, {}) is not dominant", .0.a, .0.b)]
    NotDominant(Weight),

    #[error("weight ({}, {}) is not in the orbit of ({}, {})", .mu.a, .mu.b, .lambda.a, .lambda.b)]
    NotInOrbit { mu: Weight, lambda: Weight },

    #[error("weight ({}, {}) is not admissible for family {family}", .weight.a, .weight.b)]
    Inadmissible { family: String, weight: Weight },

    #[error("level M must be positive")]
    ZeroLevel,

    #[error("invalid Kac coordinates [{s0},{s1},{s2}] for level {level}")]
    BadKac {
        s0: u32,
        s1: u32,
        s2: u32,
        level: u32,
    },

    #[error("denominator |{0:e}| is below the singularity guard")]
    Singular(f64),

    #[error("grid mismatch: level {left} vs level {right}")]
    GridMismatch { left: u32, right: u32 },

    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight set is not downward closed: ({}, {}) needs ({}, {})", .needed_by.a, .needed_by.b, .missing.a, .missing.b)]
    NotDownwardClosed { missing: Weight, needed_by: Weight },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown character variant `{0}`")]
    UnknownVariant(String),

    #[error("quadrature order must be at least 1")]
    BadOrder,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
