//! The four families of orbit functions and their per-family behaviour.
//!
//! A family is fixed by a sign homomorphism `σ: W → {±1}`, which is in turn
//! fixed by its values on the two generating reflections. Everything that
//! depends only on the signs (evaluation, dominantization, product rules)
//! works off [`Family`]. What differs in shape from family to family, the
//! discrete norm tables that define each spectrum, lives behind the
//! [`OrbitBasis`] trait, one implementation per family, collected in a
//! [`Registry`] keyed by name.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::Weight;

mod antisymmetric;
mod long;
mod short;
mod symmetric;

pub use antisymmetric::AntisymmetricBasis;
pub use long::LongBasis;
pub use short::ShortBasis;
pub use symmetric::SymmetricBasis;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    C,
    S,
    SL,
    SS,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::C, Family::S, Family::SL, Family::SS];

    /// `(σ(r1), σ(r2))`.
    pub const fn sigmas(self) -> (i8, i8) {
        match self {
            Family::C => (1, 1),
            Family::S => (-1, -1),
            Family::SL => (-1, 1),
            Family::SS => (1, -1),
        }
    }

    pub fn from_sigmas(s1: i8, s2: i8) -> Family {
        match (s1 > 0, s2 > 0) {
            (true, true) => Family::C,
            (false, false) => Family::S,
            (false, true) => Family::SL,
            (true, false) => Family::SS,
        }
    }

    /// Family of the product of two orbit functions: the signs multiply.
    pub fn product(self, other: Family) -> Family {
        let (a1, a2) = self.sigmas();
        let (b1, b2) = other.sigmas();
        Family::from_sigmas(a1 * b1, a2 * b2)
    }

    /// A dominant weight is admissible when no reflection fixing it carries
    /// sign -1; otherwise the orbit sum cancels identically.
    pub fn admits(self, lambda: Weight) -> bool {
        let (s1, s2) = self.sigmas();
        lambda.is_dominant() && !(lambda.a == 0 && s1 < 0) && !(lambda.b == 0 && s2 < 0)
    }

    /// Whether values are purely imaginary, so that the real view divides
    /// by `i`.
    pub fn is_imaginary(self) -> bool {
        matches!(self, Family::SL | Family::SS)
    }

    pub fn parity(self, wall: Wall) -> Parity {
        let (s1, s2) = self.sigmas();
        // the affine mirror is orthogonal to the highest root, a long root
        let s = match wall {
            Wall::R1 | Wall::Affine => s1,
            Wall::R2 => s2,
        };
        if s > 0 {
            Parity::Symmetric
        } else {
            Parity::Antisymmetric
        }
    }

    /// LaTeX symbol of the family.
    pub fn latex(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::S => "S",
            Family::SL => "S^L",
            Family::SS => "S^S",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::C => "C",
            Family::S => "S",
            Family::SL => "SL",
            Family::SS => "SS",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "C" => Ok(Family::C),
            "S" => Ok(Family::S),
            "SL" | "S^L" => Ok(Family::SL),
            "SS" | "S^S" => Ok(Family::SS),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// The three sides of the fundamental triangle F, named by their mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Wall {
    /// `x1 = 0`, the side from 0 to ω̌2/3.
    R1,
    /// `x2 = 0`, the side from 0 to ω̌1/2.
    R2,
    /// `2 x1 + 3 x2 = 1`, the side from ω̌1/2 to ω̌2/3.
    Affine,
}

impl Wall {
    pub const ALL: [Wall; 3] = [Wall::R1, Wall::R2, Wall::Affine];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Symmetric,
    Antisymmetric,
}

/// Per-family discrete structure on the grids `F_M`.
pub trait OrbitBasis: Send + Sync {
    fn family(&self) -> Family;

    /// Name the basis is registered under.
    fn name(&self) -> &'static str;

    /// Factor `h` with `⟨X_λ, X_λ⟩_M = 12 M² h`, or `None` when `λ` is not
    /// in the spectrum at level `level`.
    fn norm_factor(&self, lambda: Weight, level: u32) -> Option<Rational64>;

    fn boundary_parity(&self, wall: Wall) -> Parity {
        self.family().parity(wall)
    }
}

pub type BoxedBasis = Box<dyn OrbitBasis>;

/// Bases known to the library, looked up by name.
pub struct Registry {
    bases: BTreeMap<&'static str, BoxedBasis>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            bases: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, basis: BoxedBasis) {
        self.bases.insert(basis.name(), basis);
    }

    pub fn get(&self, name: &str) -> Result<&dyn OrbitBasis> {
        let family: Family = name.parse()?;
        self.bases
            .get(family.to_string().as_str())
            .map(|b| b.as_ref())
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn for_family(&self, family: Family) -> &dyn OrbitBasis {
        self.bases
            .get(family.to_string().as_str())
            .map(|b| b.as_ref())
            .expect("every family is registered in the default registry")
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.bases.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn OrbitBasis> {
        self.bases.values().map(|b| b.as_ref())
    }
}

impl Default for Registry {
    fn default() -> Self {
        let mut r = Registry::empty();
        r.register(Box::new(SymmetricBasis));
        r.register(Box::new(AntisymmetricBasis));
        r.register(Box::new(LongBasis));
        r.register(Box::new(ShortBasis));
        r
    }
}

/// Shared registry with the four standard bases.
pub fn registry() -> &'static Registry {
    use std::sync::OnceLock;
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::default)
}

pub fn basis(family: Family) -> &'static dyn OrbitBasis {
    registry().for_family(family)
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}
