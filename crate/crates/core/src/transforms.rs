//! Discrete scalar product on `F_M`, the forward and inverse orbit-function
//! transforms, and the quadrature harness for the continuous scalar
//! product on F.
//!
//! All four families are handled through their real view (S^L and S^S
//! divided by `i`), so real data stays real. The forward transform of a
//! sampled field `f` is
//!
//! ```text
//! d_λ = Σ_s c_s f(s) X_λ(s) / (12 M² h_λ)
//! ```
//!
//! and the inverse is the synthesis `f(s) = Σ_λ d_λ X_λ(s)` over the
//! family's spectrum.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{Family, OrbitBasis};
use crate::lattice::{grid_points, spectrum, Grid, Spectrum};
use crate::orbitfn::{evaluate_exact, evaluate_real};
use crate::quadrature::triangle_rule;
use crate::rootsys::{Point, Weight};

/// Default Gauss–Legendre order for the continuous scalar product.
pub const DEFAULT_QUAD_ORDER: usize = 40;

/// Values on the grid `F_M`, in grid enumeration order.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    pub level: u32,
    /// Family the samples were drawn from, when known.
    pub family: Option<Family>,
    pub values: Vec<Complex64>,
}

impl SampledField {
    pub fn new(level: u32, values: Vec<Complex64>) -> Result<Self> {
        check_len(grid_points(level)?.len(), values.len())?;
        Ok(SampledField {
            level,
            family: None,
            values,
        })
    }

    pub fn from_real(level: u32, values: &[f64]) -> Result<Self> {
        Self::new(
            level,
            values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        )
    }

    pub fn constant(level: u32, value: f64) -> Result<Self> {
        let n = grid_points(level)?.len();
        Self::from_real(level, &vec![value; n])
    }

    /// Samples of the real view of `X_λ` on `F_M`.
    pub fn sample(family: Family, lambda: Weight, level: u32) -> Result<Self> {
        let grid = grid_points(level)?;
        let values = sample_basis(family, lambda, &grid)
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect();
        Ok(SampledField {
            level,
            family: Some(family),
            values,
        })
    }

    /// Samples of an arbitrary function of the point `(x1, x2)`.
    pub fn from_fn(level: u32, f: impl Fn(Point<f64>) -> Complex64) -> Result<Self> {
        let grid = grid_points(level)?;
        let values = grid
            .points()
            .iter()
            .map(|k| f(k.point().to_real()))
            .collect();
        Ok(SampledField {
            level,
            family: None,
            values,
        })
    }

    pub fn max_abs_diff(&self, other: &SampledField) -> Result<f64> {
        if self.level != other.level {
            return Err(Error::GridMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(max_diff(&self.values, &other.values))
    }
}

/// Transform coefficients indexed by the family's spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    pub family: Family,
    pub level: u32,
    pub values: Vec<Complex64>,
}

impl CoefficientVector {
    pub fn new(family: Family, level: u32, values: Vec<Complex64>) -> Result<Self> {
        let spec = spectrum(crate::families::basis(family), level)?;
        check_len(spec.len(), values.len())?;
        Ok(CoefficientVector {
            family,
            level,
            values,
        })
    }

    pub fn max_abs_diff(&self, other: &CoefficientVector) -> Result<f64> {
        if self.level != other.level {
            return Err(Error::GridMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(max_diff(&self.values, &other.values))
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, got })
    }
}

fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

fn sample_basis(family: Family, lambda: Weight, grid: &Grid) -> Vec<f64> {
    grid.points()
        .iter()
        .map(|k| evaluate_exact(family, lambda, &k.point()).real())
        .collect()
}

/// `⟨f, g⟩_M = Σ_s c_s f(s) conj(g(s))`.
pub fn discrete_inner(f: &SampledField, g: &SampledField) -> Result<Complex64> {
    if f.level != g.level {
        return Err(Error::GridMismatch {
            left: f.level,
            right: g.level,
        });
    }
    let grid = grid_points(f.level)?;
    check_len(grid.len(), f.values.len())?;
    check_len(grid.len(), g.values.len())?;
    Ok(grid
        .weights()
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .map(|(&c, (x, y))| x * y.conj() * f64::from(c))
        .sum())
}

/// Everything needed to transform on one grid for one family.
///
/// Matrix-free by default; [`TransformPlan::with_matrix`] precomputes the
/// basis samples `X_λ(s)` once for repeated use.
pub struct TransformPlan<'a> {
    basis: &'a dyn OrbitBasis,
    grid: Grid,
    spectrum: Spectrum,
    norms: Vec<f64>,
    matrix: Option<Vec<Vec<f64>>>,
}

impl<'a> TransformPlan<'a> {
    pub fn new(basis: &'a dyn OrbitBasis, level: u32) -> Result<Self> {
        let grid = grid_points(level)?;
        let spectrum = spectrum(basis, level)?;
        let norms = spectrum.norms();
        Ok(TransformPlan {
            basis,
            grid,
            spectrum,
            norms,
            matrix: None,
        })
    }

    pub fn with_matrix(mut self) -> Self {
        let family = self.basis.family();
        let rows = self
            .spectrum
            .entries
            .par_iter()
            .map(|&(w, _)| sample_basis(family, w, &self.grid))
            .collect();
        self.matrix = Some(rows);
        self
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn family(&self) -> Family {
        self.basis.family()
    }

    fn row(&self, i: usize) -> std::borrow::Cow<'_, [f64]> {
        match &self.matrix {
            Some(m) => std::borrow::Cow::Borrowed(&m[i]),
            None => std::borrow::Cow::Owned(sample_basis(
                self.basis.family(),
                self.spectrum.entries[i].0,
                &self.grid,
            )),
        }
    }

    pub fn forward(&self, f: &SampledField) -> Result<CoefficientVector> {
        if f.level != self.grid.level() {
            return Err(Error::GridMismatch {
                left: f.level,
                right: self.grid.level(),
            });
        }
        check_len(self.grid.len(), f.values.len())?;
        let weights = self.grid.weights();
        let values = (0..self.spectrum.len())
            .into_par_iter()
            .map(|i| {
                let row = self.row(i);
                let s: Complex64 = row
                    .iter()
                    .zip(weights)
                    .zip(&f.values)
                    .map(|((&x, &c), v)| v * (x * f64::from(c)))
                    .sum();
                s / self.norms[i]
            })
            .collect();
        Ok(CoefficientVector {
            family: self.family(),
            level: self.grid.level(),
            values,
        })
    }

    pub fn inverse(&self, d: &CoefficientVector) -> Result<SampledField> {
        if d.level != self.grid.level() {
            return Err(Error::GridMismatch {
                left: d.level,
                right: self.grid.level(),
            });
        }
        check_len(self.spectrum.len(), d.values.len())?;
        let rows: Vec<_> = (0..self.spectrum.len())
            .into_par_iter()
            .map(|i| self.row(i))
            .collect();
        let values = (0..self.grid.len())
            .into_par_iter()
            .map(|s| rows.iter().zip(&d.values).map(|(row, c)| c * row[s]).sum())
            .collect();
        Ok(SampledField {
            level: self.grid.level(),
            family: Some(self.family()),
            values,
        })
    }
}

pub fn forward(basis: &dyn OrbitBasis, level: u32, f: &SampledField) -> Result<CoefficientVector> {
    TransformPlan::new(basis, level)?.forward(f)
}

pub fn inverse(basis: &dyn OrbitBasis, level: u32, d: &CoefficientVector) -> Result<SampledField> {
    TransformPlan::new(basis, level)?.inverse(d)
}

/// `√3 ∫_F X_λ(x) Y_μ(x) dx` over the real views, by an `order × order`
/// Gauss–Legendre rule on the triangle.
pub fn continuous_inner(
    family_a: Family,
    lambda_a: Weight,
    family_b: Family,
    lambda_b: Weight,
    order: usize,
) -> Result<f64> {
    if order == 0 {
        return Err(Error::BadOrder);
    }
    let sum: f64 = triangle_rule(order)
        .into_iter()
        .map(|((x1, x2), w)| {
            let p = Point::new(x1, x2);
            w * evaluate_real(family_a, lambda_a, &p) * evaluate_real(family_b, lambda_b, &p)
        })
        .sum();
    Ok(3f64.sqrt() * sum)
}
