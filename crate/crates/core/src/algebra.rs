//! Exact symbolic algebra of orbit functions.
//!
//! A product of two orbit functions is a sum of at most 144 exponentials.
//! Moving each exponential into the dominant chamber under the sign rule of
//! the target family and collecting terms rewrites the product as a finite
//! integer combination of orbit functions of that single family. The same
//! machinery drives the triangular solve that expands the character-like
//! ratios in C-functions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::orbitfn::{evaluate, signed_orbit, CharVariant};
use crate::rootsys::{dominantize, orbit_size, Point, Weight};

/// Integer combination of orbit functions of one family, keyed by dominant
/// weight. Zero coefficients and inadmissible weights are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSum {
    pub family: Family,
    terms: BTreeMap<Weight, BigInt>,
}

impl OrbitSum {
    pub fn zero(family: Family) -> Self {
        OrbitSum {
            family,
            terms: BTreeMap::new(),
        }
    }

    /// The single function `X_λ`, or zero if `λ` is inadmissible.
    pub fn single(family: Family, lambda: Weight) -> Self {
        let mut s = Self::zero(family);
        s.add_term(lambda, BigInt::one());
        s
    }

    /// Build from `(a, b, coeff)` triples, moving weights to the dominant
    /// chamber and summing repeats.
    pub fn from_terms<I, C>(family: Family, terms: I) -> Self
    where
        I: IntoIterator<Item = (Weight, C)>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(family);
        for (w, c) in terms {
            s.add_term(w, c.into());
        }
        s
    }

    /// Add `c · X_w`; a non-dominant `w` is replaced by its signed dominant
    /// representative.
    pub fn add_term(&mut self, w: Weight, c: BigInt) {
        let d = dominantize(self.family, w);
        if d.sign == 0 || c.is_zero() {
            return;
        }
        let c = if d.sign < 0 { -c } else { c };
        let entry = self.terms.entry(d.weight).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&d.weight);
        }
    }

    pub fn coeff(&self, w: Weight) -> BigInt {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_empty()
    }

    /// Highest term by `(height, a, b)`.
    pub fn leading(&self) -> Option<(Weight, &BigInt)> {
        self.terms
            .iter()
            .max_by_key(|(w, _)| w.order_key())
            .map(|(w, c)| (*w, c))
    }

    /// Terms in printing order: `a` descending, then `b` descending.
    pub fn ordered_terms(&self) -> Vec<(Weight, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(w, c)| (*w, c)).collect();
        v.sort_by_key(|(w, _)| std::cmp::Reverse((w.a, w.b)));
        v
    }

    pub fn add_scaled(&mut self, other: &OrbitSum, k: &BigInt) {
        assert_eq!(
            self.family, other.family,
            "adding orbit sums of different families"
        );
        for (w, c) in &other.terms {
            self.add_term(*w, c * k);
        }
    }

    pub fn evaluate(&self, p: &Point<f64>) -> Complex64 {
        self.terms
            .iter()
            .map(|(w, c)| evaluate(self.family, *w, p).value * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }

    /// Value at the origin, where `C_λ(0) = |Wλ|` and every other family
    /// vanishes.
    pub fn value_at_origin(&self) -> BigInt {
        if self.family != Family::C {
            return BigInt::zero();
        }
        self.terms
            .iter()
            .map(|(w, c)| c * BigInt::from(orbit_size(*w)))
            .sum()
    }

    /// `Σ |coeff| · |Wλ|`, the number of exponentials the sum expands to
    /// before cancellation.
    pub fn mass(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(w, c)| c.abs() * BigInt::from(orbit_size(*w)))
            .sum()
    }

    pub fn to_latex(&self) -> String {
        self.render(|w| format!("{}_{{({},{})}}", self.family.latex(), w.a, w.b))
    }

    /// `{"family": "C", "terms": [[a, b, coeff], ...]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .ordered_terms()
            .into_iter()
            .map(|(w, c)| {
                let c = match c.to_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!([w.a, w.b, c])
            })
            .collect();
        json!({ "family": self.family.to_string(), "terms": terms })
    }

    fn render(&self, name: impl Fn(Weight) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.ordered_terms().into_iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let m = c.abs();
            if !m.is_one() {
                out.push_str(&m.to_string());
            }
            out.push_str(&name(w));
        }
        out
    }
}

impl fmt::Display for OrbitSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|w| format!("{}({},{})", self.family, w.a, w.b)))
    }
}

/// Parses the plain-text form, e.g. `C(2,0)+2C(1,0)-6C(0,0)`. All terms
/// must share one family; `0` alone is not accepted since it has none.
impl FromStr for OrbitSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot read orbit sum `{s}`"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut family = None;
        let mut terms = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if terms.is_empty() => (1, rest),
                _ => return Err(bad()),
            };
            let digits = body.bytes().take_while(u8::is_ascii_digit).count();
            let coeff: BigInt = if digits == 0 {
                BigInt::one()
            } else {
                body[..digits].parse().map_err(|_| bad())?
            };
            let body = &body[digits..];
            let open = body.find('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let fam: Family = body[..open].parse()?;
            if *family.get_or_insert(fam) != fam {
                return Err(Error::Parse(format!("mixed families in `{s}`")));
            }
            let (a, b) = body[open + 1..close].split_once(',').ok_or_else(bad)?;
            let w = Weight::new(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            terms.push((w, coeff * sign));
            rest = &body[close + 1..];
        }
        let family = family.ok_or_else(bad)?;
        Ok(OrbitSum::from_terms(family, terms))
    }
}

/// Multiset of exponentials `e^{2πi⟨μ,x⟩}` with signed multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExponentialBag {
    pub terms: BTreeMap<Weight, i64>,
}

impl ExponentialBag {
    /// Pairwise sums of the two signed orbits.
    pub fn product(fa: Family, la: Weight, fb: Family, lb: Weight) -> Self {
        let left = signed_orbit(fa, la);
        let right = signed_orbit(fb, lb);
        let mut terms = BTreeMap::new();
        for &(mu, s) in &left {
            for &(nu, t) in &right {
                *terms.entry(mu + nu).or_insert(0) += i64::from(s * t);
            }
        }
        terms.retain(|_, c| *c != 0);
        ExponentialBag { terms }
    }

    /// Sum of the multiplicities.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Sum of the absolute multiplicities.
    pub fn count(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Collect into orbit functions of `family`: every exponential is moved
    /// to the dominant chamber with its sign, and each collected total is
    /// divided by the size of the orbit it stands for.
    pub fn collect(&self, family: Family) -> OrbitSum {
        let mut totals: BTreeMap<Weight, i64> = BTreeMap::new();
        for (&w, &c) in &self.terms {
            let d = dominantize(family, w);
            if d.sign != 0 {
                *totals.entry(d.weight).or_insert(0) += c * i64::from(d.sign);
            }
        }
        let mut out = OrbitSum::zero(family);
        for (w, t) in totals {
            let n = orbit_size(w) as i64;
            let (q, r) = t.div_rem(&n);
            debug_assert_eq!(r, 0, "collected total {t} at {w} is not a multiple of {n}");
            out.add_term(w, BigInt::from(q));
        }
        out
    }
}

/// Family of a product: the componentwise product of the sign pairs.
pub fn target_family(fa: Family, fb: Family) -> Family {
    fa.product(fb)
}

/// `X_{λA} · Y_{λB}` as a sum of orbit functions of the target family.
///
/// Non-dominant inputs are moved to their signed dominant representatives;
/// an inadmissible input gives the zero sum.
pub fn expand_product(fa: Family, la: Weight, fb: Family, lb: Weight) -> OrbitSum {
    let target = target_family(fa, fb);
    let (da, db) = (dominantize(fa, la), dominantize(fb, lb));
    if da.sign == 0 || db.sign == 0 {
        return OrbitSum::zero(target);
    }
    let mut out = ExponentialBag::product(fa, da.weight, fb, db.weight).collect(target);
    if da.sign * db.sign < 0 {
        out = -out;
    }
    out
}

impl std::ops::Neg for OrbitSum {
    type Output = OrbitSum;

    fn neg(mut self) -> OrbitSum {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

/// The ratio `X_{λ+ρ}/X_ρ` of the variant as an integer sum of
/// C-functions.
///
/// Triangular solve: the highest remaining term `ν` of the numerator is
/// matched by `X_ρ · C_{ν-ρ}`, whose leading term is `X_ν`, and the rest of
/// that product is subtracted from what is left.
pub fn expand_char_in_C(variant: CharVariant, lambda: Weight) -> Result<OrbitSum> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let fam = variant.denominator_family();
    let rho = variant.rho();
    let mut residual = OrbitSum::single(fam, lambda + rho);
    let mut out = OrbitSum::zero(Family::C);
    while let Some((nu, c)) = residual.leading() {
        let c = c.clone();
        let mu = nu - rho;
        debug_assert!(mu.is_dominant());
        out.add_term(mu, c.clone());
        residual.add_scaled(&expand_product(fam, rho, Family::C, mu), &-c);
    }
    Ok(out)
}

/// Multiplicity matrix of a weight set and its exact inverse.
///
/// Rows and columns follow `weights`, sorted by `(height, a, b)`;
/// `forward[i][j]` is the coefficient of `C_{w_j}` in the ratio for `w_i`,
/// and `inverse[i][j]` the coefficient of the ratio for `w_j` in `C_{w_i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CharMatrix {
    pub variant: CharVariant,
    pub weights: Vec<Weight>,
    pub forward: Vec<Vec<BigInt>>,
    pub inverse: Vec<Vec<BigInt>>,
}

impl CharMatrix {
    /// `C_μ` as a combination of ratios, keyed by weight.
    pub fn c_in_chars(&self, mu: Weight) -> Option<BTreeMap<Weight, BigInt>> {
        let i = self.weights.iter().position(|&w| w == mu)?;
        Some(
            self.weights
                .iter()
                .zip(&self.inverse[i])
                .filter(|(_, c)| !c.is_zero())
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        )
    }

    /// Render one row of the inverse as text, e.g.
    /// `chi(1,2)-chi(2,0)+chi(1,0)`, highest weight first.
    pub fn format_row(&self, mu: Weight) -> Option<String> {
        let mut row: Vec<_> = self.c_in_chars(mu)?.into_iter().collect();
        row.sort_by_key(|(w, _)| std::cmp::Reverse(w.order_key()));
        let name = match self.variant {
            CharVariant::Full => "chi",
            CharVariant::Long => "chiL",
            CharVariant::Short => "chiS",
        };
        let mut out = String::new();
        for (w, c) in &row {
            out.push_str(if c.is_negative() {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            });
            if !c.abs().is_one() {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("{name}({},{})", w.a, w.b));
        }
        Some(out)
    }
}

/// Invert the multiplicity matrix on `set`, which must contain every
/// weight that appears in the expansion of each of its members.
pub fn invert_char_matrix(variant: CharVariant, set: &[Weight]) -> Result<CharMatrix> {
    let mut weights: Vec<Weight> = set.to_vec();
    weights.sort_by_key(|w| w.order_key());
    weights.dedup();
    if let Some(&w) = weights.iter().find(|w| !w.is_dominant()) {
        return Err(Error::NotDominant(w));
    }
    let n = weights.len();
    let mut forward = vec![vec![BigInt::zero(); n]; n];
    for (i, &lam) in weights.iter().enumerate() {
        for (mu, c) in expand_char_in_C(variant, lam)?.terms() {
            let j = weights
                .iter()
                .position(|w| w == mu)
                .ok_or(Error::NotDownwardClosed {
                    missing: *mu,
                    needed_by: lam,
                })?;
            forward[i][j] = c.clone();
        }
    }
    // forward is unitriangular, so C_{w_i} = χ_{w_i} - Σ_{j<i} forward[i][j] C_{w_j}
    let mut inverse = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        inverse[i][i] = BigInt::one();
        for j in 0..i {
            if forward[i][j].is_zero() {
                continue;
            }
            let k = forward[i][j].clone();
            let (done, rest) = inverse.split_at_mut(i);
            for (dst, src) in rest[0].iter_mut().zip(&done[j]).take(j + 1) {
                *dst -= &k * src;
            }
        }
    }
    Ok(CharMatrix {
        variant,
        weights,
        forward,
        inverse,
    })
}

/// Dominant weights with `3a + 2b <= bound`, a downward-closed set.
pub fn weights_up_to(bound: i64) -> Vec<Weight> {
    let mut v = Vec::new();
    for b in 0..=bound / 2 {
        for a in 0..=(bound - 2 * b) / 3 {
            v.push(Weight::new(a, b));
        }
    }
    v
}

/// `X_g · Y_λ` written as its highest term plus the lower ones, which is
/// how higher functions are built up from lower ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub generator: (Family, Weight),
    pub factor: (Family, Weight),
    pub product: OrbitSum,
}

impl Recurrence {
    /// Highest term of the product and its coefficient.
    pub fn top(&self) -> Option<(Weight, BigInt)> {
        self.product.leading().map(|(w, c)| (w, c.clone()))
    }

    /// The product with its highest term removed.
    pub fn lower(&self) -> OrbitSum {
        let mut rest = self.product.clone();
        if let Some((w, c)) = self.top() {
            rest.add_term(w, -c);
        }
        rest
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ((fg, g), (fl, l)) = (self.generator, self.factor);
        write!(
            f,
            "{fg}({},{})*{fl}({},{}) = {}",
            g.a, g.b, l.a, l.b, self.product
        )
    }
}

pub fn recurrence(fg: Family, g: Weight, fl: Family, lambda: Weight) -> Recurrence {
    Recurrence {
        generator: (fg, g),
        factor: (fl, lambda),
        product: expand_product(fg, g, fl, lambda),
    }
}
