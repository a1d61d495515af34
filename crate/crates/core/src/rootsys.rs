//! Exact G2 root-system data.
//!
//! Weights carry integer coordinates in the basis of fundamental weights
//! `(ω1, ω2)`; evaluation points carry coordinates in the dual basis of
//! fundamental co-weights `(ω̌1, ω̌2)`. The two are paired through the
//! simple roots, `⟨αj, ω̌k⟩ = δjk`, so a weight is first rewritten in the
//! root basis with the inverse Cartan matrix.
//!
//! The Weyl group has twelve elements and is generated by the two simple
//! reflections `r1` (long root) and `r2` (short root). The affine Weyl group
//! adds the reflection in the highest root `ξ = ω̌1` and the translations by
//! the co-root lattice, which for G2 coincides with the co-weight lattice.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;

/// Cartan matrix of G2, rows are the simple roots in the ω-basis.
pub const CARTAN: [[i64; 2]; 2] = [[2, -3], [-1, 2]];

/// Inverse Cartan matrix, rows are the fundamental weights in the α-basis.
pub const INVERSE_CARTAN: [[i64; 2]; 2] = [[2, 3], [1, 2]];

/// Order of the Weyl group W(G2).
pub const WEYL_ORDER: usize = 12;

/// Integer weight in the ω-basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };
    /// Half sum of the positive roots.
    pub const RHO: Weight = Weight { a: 1, b: 1 };
    /// Half sum of the positive long roots.
    pub const RHO_LONG: Weight = Weight { a: 1, b: 0 };
    /// Half sum of the positive short roots.
    pub const RHO_SHORT: Weight = Weight { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    /// Coordinates in the simple-root basis.
    pub fn to_alpha(self) -> (i64, i64) {
        omega_to_alpha(self)
    }

    /// Sum of the α-coordinates. Strictly decreases along `λ → λ - α` for
    /// any positive root `α`, so it refines the dominance order.
    pub fn height(self) -> i64 {
        let (p, q) = self.to_alpha();
        p + q
    }

    /// Sort key for the dominance-compatible total order.
    pub fn order_key(self) -> (i64, i64, i64) {
        (self.height(), self.a, self.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

/// A weight together with the sign accumulated while moving it to the
/// dominant chamber. Sign 0 marks a weight fixed by a reflection on which
/// the family's sign homomorphism is `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedWeight {
    pub weight: Weight,
    pub sign: i8,
}

/// Scalar type usable as a point coordinate: `f64` for evaluation,
/// `Rational64` for exact folding on grids.
pub trait Coord:
    Copy
    + PartialOrd
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + std::ops::Mul<Output = Self>
    + Zero
    + One
{
    fn from_i64(v: i64) -> Self;
    fn floor(self) -> Self;
    fn to_f64(self) -> f64;
}

impl Coord for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn floor(self) -> Self {
        f64::floor(self)
    }
    fn to_f64(self) -> f64 {
        self
    }
}

impl Coord for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }
    fn floor(self) -> Self {
        Rational64::floor(&self)
    }
    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
}

/// Point of the torus in the ω̌-basis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point<T = f64> {
    pub x1: T,
    pub x2: T,
}

/// Exact rational point.
pub type QPoint = Point<Rational64>;

impl<T: Coord> Point<T> {
    pub fn new(x1: T, x2: T) -> Self {
        Point { x1, x2 }
    }

    pub fn origin() -> Self {
        Point::new(T::zero(), T::zero())
    }

    /// Membership in the closed fundamental triangle F.
    pub fn in_fundamental_domain(&self) -> bool {
        let two = T::from_i64(2);
        let three = T::from_i64(3);
        self.x1 >= T::zero() && self.x2 >= T::zero() && two * self.x1 + three * self.x2 <= T::one()
    }

    pub fn to_real(&self) -> Point<f64> {
        Point::new(self.x1.to_f64(), self.x2.to_f64())
    }

    pub fn translate(&self, t1: i64, t2: i64) -> Self {
        Point::new(self.x1 + T::from_i64(t1), self.x2 + T::from_i64(t2))
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = T::from_i64(k);
        Point::new(k * self.x1, k * self.x2)
    }
}

impl QPoint {
    pub fn from_fraction(n1: i64, d1: i64, n2: i64, d2: i64) -> Self {
        Point::new(Rational64::new(n1, d1), Rational64::new(n2, d2))
    }
}

/// Kac coordinates `[s0, s1, s2]` of a point at level `M = s0 + 2 s1 + 3 s2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct KacPoint {
    pub s0: u32,
    pub s1: u32,
    pub s2: u32,
}

impl KacPoint {
    pub const fn new(s0: u32, s1: u32, s2: u32) -> Self {
        KacPoint { s0, s1, s2 }
    }

    /// `M = s0 + 2 s1 + 3 s2`.
    pub fn level(&self) -> u32 {
        self.s0 + 2 * self.s1 + 3 * self.s2
    }

    pub fn coords(&self) -> [u32; 3] {
        [self.s0, self.s1, self.s2]
    }

    pub fn gcd(&self) -> u32 {
        self.s0.gcd(&self.s1).gcd(&self.s2)
    }

    pub fn point(&self) -> QPoint {
        let m = self.level() as i64;
        Point::new(
            Rational64::new(self.s1 as i64, m),
            Rational64::new(self.s2 as i64, m),
        )
    }

    /// Kac coordinates of an exact point of F, at the smallest level on
    /// which it lies. Returns `None` for points outside F.
    pub fn from_point(p: &QPoint) -> Option<KacPoint> {
        if !p.in_fundamental_domain() {
            return None;
        }
        let m = p.x1.denom().lcm(p.x2.denom());
        let s1 = (p.x1 * Rational64::from_integer(m)).to_integer();
        let s2 = (p.x2 * Rational64::from_integer(m)).to_integer();
        let s0 = m - 2 * s1 - 3 * s2;
        Some(KacPoint::new(s0 as u32, s1 as u32, s2 as u32))
    }
}

impl fmt::Display for KacPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.s0, self.s1, self.s2)
    }
}

pub fn omega_to_alpha(w: Weight) -> (i64, i64) {
    let [[p1, q1], [p2, q2]] = INVERSE_CARTAN;
    (w.a * p1 + w.b * p2, w.a * q1 + w.b * q2)
}

/// `⟨w, p⟩ = (2a+b) x1 + (3a+2b) x2`.
pub fn pairing<T: Coord>(w: Weight, p: &Point<T>) -> T {
    let (u, v) = omega_to_alpha(w);
    T::from_i64(u) * p.x1 + T::from_i64(v) * p.x2
}

pub fn r1(w: Weight) -> Weight {
    Weight::new(-w.a, 3 * w.a + w.b)
}

pub fn r2(w: Weight) -> Weight {
    Weight::new(w.a + w.b, -w.b)
}

pub fn reflect_weight(k: u8, w: Weight) -> Result<Weight> {
    match k {
        1 => Ok(r1(w)),
        2 => Ok(r2(w)),
        _ => Err(Error::BadGenerator(k)),
    }
}

fn r1_point<T: Coord>(p: &Point<T>) -> Point<T> {
    Point::new(-p.x1, p.x1 + p.x2)
}

fn r2_point<T: Coord>(p: &Point<T>) -> Point<T> {
    Point::new(p.x1 + T::from_i64(3) * p.x2, -p.x2)
}

pub fn reflect_point<T: Coord>(k: u8, p: &Point<T>) -> Result<Point<T>> {
    match k {
        1 => Ok(r1_point(p)),
        2 => Ok(r2_point(p)),
        _ => Err(Error::BadGenerator(k)),
    }
}

/// Reflection in the affine mirror `2 x1 + 3 x2 = 1`.
pub fn affine_reflect<T: Coord>(p: &Point<T>) -> Point<T> {
    Point::new(T::one() - p.x1 - T::from_i64(3) * p.x2, p.x2)
}

/// All distinct points of the Weyl orbit of `lambda`, generated by closure
/// under `r1` and `r2`. The seed comes first.
pub fn weyl_orbit(lambda: Weight) -> Vec<Weight> {
    let mut orbit = vec![lambda];
    let mut next = 0;
    while next < orbit.len() {
        let w = orbit[next];
        next += 1;
        for v in [r1(w), r2(w)] {
            if !orbit.contains(&v) {
                orbit.push(v);
            }
        }
    }
    orbit
}

pub fn orbit_size(lambda: Weight) -> usize {
    match (lambda.a == 0, lambda.b == 0) {
        (true, true) => 1,
        (false, false) => 12,
        _ => 6,
    }
}

/// Move `w` into the dominant chamber, testing `r1` before `r2`, and
/// multiply the family's sign for every reflection applied.
pub fn dominantize(family: Family, w: Weight) -> SignedWeight {
    let (s1, s2) = family.sigmas();
    let mut w = w;
    let mut sign = 1i8;
    loop {
        if w.a < 0 {
            w = r1(w);
            sign *= s1;
        } else if w.b < 0 {
            w = r2(w);
            sign *= s2;
        } else {
            break;
        }
    }
    if (w.a == 0 && s1 < 0) || (w.b == 0 && s2 < 0) {
        sign = 0;
    }
    SignedWeight { weight: w, sign }
}

/// Sign `σ(μ)` carried by the term `e^{2πi⟨μ,x⟩}` in the orbit function of
/// `lambda`.
pub fn orbit_sign(family: Family, lambda: Weight, mu: Weight) -> Result<i8> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let d = dominantize(family, mu);
    if d.weight != lambda {
        return Err(Error::NotInOrbit { mu, lambda });
    }
    if d.sign == 0 {
        return Err(Error::Inadmissible {
            family: family.to_string(),
            weight: lambda,
        });
    }
    Ok(d.sign)
}

/// The unique point of F in the affine Weyl orbit of `p`.
#[allow(non_snake_case)]
pub fn fold_to_F<T: Coord>(p: &Point<T>) -> Point<T> {
    // co-root lattice = integer lattice in the ω̌-basis
    let mut q = Point::new(p.x1 - p.x1.floor(), p.x2 - p.x2.floor());
    let two = T::from_i64(2);
    let three = T::from_i64(3);
    // bounded: an f64 point can sit an ulp off a wall and bounce between mirrors
    for _ in 0..64 {
        if q.x1 < T::zero() {
            q = r1_point(&q);
        } else if q.x2 < T::zero() {
            q = r2_point(&q);
        } else if two * q.x1 + three * q.x2 > T::one() {
            q = affine_reflect(&q);
        } else {
            return q;
        }
    }
    q
}
