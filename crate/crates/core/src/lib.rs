//! Orbit functions of the exceptional Lie group G2 and the discrete
//! transforms built on them.
//!
//! Four families are provided: the symmetric C-functions, the
//! antisymmetric S-functions, and the mixed S^L and S^S functions that are
//! antisymmetric only with respect to reflections in long or short roots.
//! Each family is exposed through the [`OrbitBasis`] trait and can be
//! looked up by name in the [`Registry`].

#![allow(non_snake_case)]

pub mod algebra;
pub mod arith;
pub mod error;
pub mod families;
pub mod io;
pub mod lattice;
pub mod orbitfn;
pub mod quadrature;
pub mod rootsys;
pub mod transforms;

pub use error::{Error, Result};
pub use families::{basis, registry, Family, OrbitBasis, Parity, Registry, Wall};
pub use lattice::{grid_points, grid_size, spectrum, Grid, Spectrum};
pub use orbitfn::{
    character, dimension, evaluate, evaluate_exact, evaluate_real, CharVariant, FunctionValue,
};
pub use rootsys::{KacPoint, Point, QPoint, Weight};
pub use transforms::{
    continuous_inner, discrete_inner, forward, inverse, CoefficientVector, SampledField,
    TransformPlan,
};
