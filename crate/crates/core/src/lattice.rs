//! The grids `F_M`, their point weights, and the per-family spectra.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{Family, OrbitBasis, Parity, Wall};
use crate::rootsys::{KacPoint, Weight};

/// The points of `(1/M) P̌ ∩ F` in Kac coordinates with their weights `c_s`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    level: u32,
    points: Vec<KacPoint>,
    weights: Vec<u32>,
}

impl Grid {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn points(&self) -> &[KacPoint] {
        &self.points
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (KacPoint, u32)> + '_ {
        self.points
            .iter()
            .copied()
            .zip(self.weights.iter().copied())
    }

    pub fn to_json(&self) -> GridJson {
        GridJson {
            level: self.level,
            points: self.points.iter().map(|k| k.coords()).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Rebuild from the JSON form, checking it against the enumeration.
    pub fn from_json(json: &GridJson) -> Result<Grid> {
        let grid = grid_points(json.level)?;
        let points: Vec<[u32; 3]> = grid.points.iter().map(|k| k.coords()).collect();
        if points != json.points || grid.weights != json.weights {
            return Err(Error::Parse(format!(
                "grid data does not match level {}",
                json.level
            )));
        }
        Ok(grid)
    }
}

/// `{"M": int, "points": [[s0,s1,s2], ...], "weights": [int, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridJson {
    #[serde(rename = "M")]
    pub level: u32,
    pub points: Vec<[u32; 3]>,
    pub weights: Vec<u32>,
}

/// Enumerate `F_M`, ordered by `(s2, s1)` ascending.
pub fn grid_points(level: u32) -> Result<Grid> {
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    let mut points = Vec::with_capacity(grid_size(level)? as usize);
    for s2 in 0..=level / 3 {
        for s1 in 0..=(level - 3 * s2) / 2 {
            points.push(KacPoint::new(level - 2 * s1 - 3 * s2, s1, s2));
        }
    }
    let weights = points.iter().map(c_weight).collect();
    Ok(Grid {
        level,
        points,
        weights,
    })
}

/// Closed-form count of `F_M`.
pub fn grid_size(level: u32) -> Result<u64> {
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    let m = u64::from(level);
    Ok(m / 3 + 1 + (0..=m / 3).map(|i| (m - 3 * i) / 2).sum::<u64>())
}

/// Number of torus points conjugate to `s`: `|W| / |Stab_W(s)|`.
pub fn c_weight(s: &KacPoint) -> u32 {
    match (s.s0 > 0, s.s1 > 0, s.s2 > 0) {
        (true, true, true) => 12,
        (true, true, false) | (true, false, true) | (false, true, true) => 6,
        (true, false, false) => 1,
        (false, true, false) => 3,
        (false, false, true) => 2,
        (false, false, false) => 0,
    }
}

/// True when `s` lies on a wall where `family` is antisymmetric, so every
/// function of the family vanishes there.
pub fn forced_zero(family: Family, s: &KacPoint) -> bool {
    let on = |wall| match wall {
        Wall::R1 => s.s1 == 0,
        Wall::R2 => s.s2 == 0,
        Wall::Affine => s.s0 == 0,
    };
    Wall::ALL
        .into_iter()
        .any(|wall| family.parity(wall) == Parity::Antisymmetric && on(wall))
}

/// Dominant weights with nonzero discrete norm at level `M`, with their
/// norm factors `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub family: Family,
    pub level: u32,
    pub entries: Vec<(Weight, Rational64)>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.entries.iter().map(|&(w, _)| w)
    }

    pub fn position(&self, lambda: Weight) -> Option<usize> {
        self.entries.iter().position(|&(w, _)| w == lambda)
    }

    /// `12 M² h` for every entry.
    pub fn norms(&self) -> Vec<f64> {
        let scale = 12.0 * f64::from(self.level).powi(2);
        self.entries
            .iter()
            .map(|(_, h)| scale * (*h.numer() as f64) / (*h.denom() as f64))
            .collect()
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            level: self.level,
            family: self.family.to_string(),
            weights: self.entries.iter().map(|(w, _)| [w.a, w.b]).collect(),
            norms: self.entries.iter().map(|(_, h)| h.to_string()).collect(),
        }
    }
}

/// `{"M": int, "family": "C|S|SL|SS", "weights": [[a,b], ...], "norms": ["1/2", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    #[serde(rename = "M")]
    pub level: u32,
    pub family: String,
    pub weights: Vec<[i64; 2]>,
    pub norms: Vec<String>,
}

/// Spectrum of `basis` at level `M`, ordered like the grid: by `(b, a)`
/// ascending.
pub fn spectrum(basis: &dyn OrbitBasis, level: u32) -> Result<Spectrum> {
    if level == 0 {
        return Err(Error::ZeroLevel);
    }
    let m = i64::from(level);
    let mut entries = Vec::new();
    for b in 0..=m / 2 {
        for a in 0..=(m - 2 * b) / 3 {
            let w = Weight::new(a, b);
            if let Some(h) = basis.norm_factor(w, level) {
                entries.push((w, h));
            }
        }
    }
    Ok(Spectrum {
        family: basis.family(),
        level,
        entries,
    })
}
