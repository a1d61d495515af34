//! Numeric evaluation of orbit functions and of the character-like ratios
//! built from them.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::{Family, Parity, Wall};
use crate::rootsys::{dominantize, pairing, r1, r2, Point, QPoint, Weight};

/// Default guard below which a character denominator counts as singular.
pub const SINGULAR_GUARD: f64 = 1e-12;

/// Value of an orbit function at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionValue {
    pub value: Complex64,
    pub family: Family,
    /// False when the weight sits on a wall that cancels the whole orbit
    /// sum; the value is then exactly zero.
    pub admissible: bool,
}

impl FunctionValue {
    /// Real view: the value itself for C and S, the value divided by `i`
    /// for S^L and S^S.
    pub fn real(&self) -> f64 {
        if self.family.is_imaginary() {
            self.value.im
        } else {
            self.value.re
        }
    }
}

/// Orbit points of `lambda` with the family's sign on each term.
///
/// Empty when the family does not admit `lambda`.
pub fn signed_orbit(family: Family, lambda: Weight) -> Vec<(Weight, i8)> {
    if !family.admits(lambda) {
        return Vec::new();
    }
    let (s1, s2) = family.sigmas();
    let mut orbit = vec![(lambda, 1i8)];
    let mut next = 0;
    while next < orbit.len() {
        let (w, s) = orbit[next];
        next += 1;
        for (v, sv) in [(r1(w), s * s1), (r2(w), s * s2)] {
            if !orbit.iter().any(|&(u, _)| u == v) {
                orbit.push((v, sv));
            }
        }
    }
    orbit
}

fn phase(w: Weight, p: &Point<f64>) -> Complex64 {
    let t = pairing(w, p);
    // reduce before scaling so large weights keep their accuracy
    let t = t - t.round();
    Complex64::from_polar(1.0, TAU * t)
}

fn phase_exact(w: Weight, p: &QPoint) -> Complex64 {
    let t = pairing(w, p);
    let t = t - t.round();
    Complex64::from_polar(1.0, TAU * (*t.numer() as f64) / (*t.denom() as f64))
}

fn orbit_sum(family: Family, lambda: Weight, phase: impl Fn(Weight) -> Complex64) -> FunctionValue {
    let d = dominantize(family, lambda);
    if d.sign == 0 {
        return FunctionValue {
            value: Complex64::new(0.0, 0.0),
            family,
            admissible: false,
        };
    }
    let sum: Complex64 = signed_orbit(family, d.weight)
        .into_iter()
        .map(|(mu, s)| phase(mu) * f64::from(s))
        .sum();
    FunctionValue {
        value: sum * f64::from(d.sign),
        family,
        admissible: true,
    }
}

/// `Σ_{μ ∈ W λ} σ(μ) e^{2πi⟨μ, p⟩}`.
///
/// A non-dominant `lambda` is first moved to its dominant representative,
/// picking up the sign of the Weyl element used.
pub fn evaluate(family: Family, lambda: Weight, p: &Point<f64>) -> FunctionValue {
    orbit_sum(family, lambda, |mu| phase(mu, p))
}

/// Same as [`evaluate`] at an exact point; the pairings are reduced modulo
/// 1 in rational arithmetic before the exponential is taken.
pub fn evaluate_exact(family: Family, lambda: Weight, p: &QPoint) -> FunctionValue {
    orbit_sum(family, lambda, |mu| phase_exact(mu, p))
}

pub fn evaluate_real(family: Family, lambda: Weight, p: &Point<f64>) -> f64 {
    evaluate(family, lambda, p).real()
}

/// Which of the three character-like ratios.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharVariant {
    /// `χ_λ = S_{λ+ρ} / S_ρ`, the Weyl character.
    Full,
    /// `χ^L_λ = S^L_{λ+ρ^L} / S^L_{ρ^L}`.
    Long,
    /// `χ^S_λ = S^S_{λ+ρ^S} / S^S_{ρ^S}`.
    Short,
}

impl CharVariant {
    pub const ALL: [CharVariant; 3] = [CharVariant::Full, CharVariant::Long, CharVariant::Short];

    pub fn denominator_family(self) -> Family {
        match self {
            CharVariant::Full => Family::S,
            CharVariant::Long => Family::SL,
            CharVariant::Short => Family::SS,
        }
    }

    pub fn rho(self) -> Weight {
        match self {
            CharVariant::Full => Weight::RHO,
            CharVariant::Long => Weight::RHO_LONG,
            CharVariant::Short => Weight::RHO_SHORT,
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            CharVariant::Full => "\\chi",
            CharVariant::Long => "\\chi^L",
            CharVariant::Short => "\\chi^S",
        }
    }
}

impl fmt::Display for CharVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CharVariant::Full => "full",
            CharVariant::Long => "L",
            CharVariant::Short => "S",
        })
    }
}

impl FromStr for CharVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "full" | "Full" | "chi" => Ok(CharVariant::Full),
            "L" | "l" | "long" => Ok(CharVariant::Long),
            "S" | "s" | "short" => Ok(CharVariant::Short),
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

/// Ratio `X_{λ+ρ}(p) / X_ρ(p)` for the variant's family `X`.
///
/// Fails with [`Error::Singular`] when `|X_ρ(p)| <= guard`, which happens
/// on the walls where `X` is antisymmetric.
pub fn character(variant: CharVariant, lambda: Weight, p: &Point<f64>, guard: f64) -> Result<f64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let fam = variant.denominator_family();
    let den = evaluate_real(fam, variant.rho(), p);
    if den.abs() <= guard {
        return Err(Error::Singular(den));
    }
    Ok(evaluate_real(fam, lambda + variant.rho(), p) / den)
}

/// Dimension of the irreducible representation with highest weight
/// `lambda`.
pub fn dimension(lambda: Weight) -> Result<u64> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let (a, b) = (lambda.a as u128, lambda.b as u128);
    let n =
        (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) * (3 * a + b + 4) * (3 * a + 2 * b + 5);
    debug_assert_eq!(n % 120, 0);
    Ok((n / 120) as u64)
}

pub fn boundary_parity(family: Family, wall: Wall) -> Parity {
    family.parity(wall)
}
