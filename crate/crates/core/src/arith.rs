//! Elements of finite order, their power maps, the rational classes, and
//! the table of integer function values at those classes.

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::algebra::expand_char_in_C;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::lattice::grid_points;
use crate::orbitfn::{evaluate_exact, CharVariant};
use crate::rootsys::{fold_to_F, KacPoint, QPoint, Weight};

/// How far a value may sit from an integer and still count as one.
pub const INTEGER_TOL: f64 = 1e-8;

/// Conjugacy class of an element of order `M`, given by coprime Kac
/// coordinates at level `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteOrderElement {
    pub kac: KacPoint,
}

impl FiniteOrderElement {
    pub fn new(kac: KacPoint) -> Result<Self> {
        let level = kac.level();
        if level == 0 || kac.gcd() != 1 {
            return Err(Error::BadKac {
                s0: kac.s0,
                s1: kac.s1,
                s2: kac.s2,
                level,
            });
        }
        Ok(FiniteOrderElement { kac })
    }

    pub fn order(&self) -> u32 {
        self.kac.level()
    }

    pub fn point(&self) -> QPoint {
        self.kac.point()
    }
}

/// All classes of order exactly `M`.
pub fn enumerate_efo(level: u32) -> Result<Vec<FiniteOrderElement>> {
    Ok(grid_points(level)?
        .points()
        .iter()
        .filter(|k| k.gcd() == 1)
        .map(|&kac| FiniteOrderElement { kac })
        .collect())
}

/// Class of the `k`-th power: `k·x` folded back into F.
pub fn power_class(e: &FiniteOrderElement, k: u32) -> KacPoint {
    let p = fold_to_F(&e.point().scale(i64::from(k)));
    KacPoint::from_point(&p).expect("fold_to_F lands in F")
}

/// Every power coprime to the order is conjugate to the element itself.
pub fn is_rational(e: &FiniteOrderElement) -> bool {
    let m = e.order();
    (1..m)
        .filter(|k| k.gcd(&m) == 1)
        .all(|k| power_class(e, k) == e.kac)
}

/// Rational classes of order `M` in `orders`, sorted by order and then by
/// Kac coordinates descending.
pub fn rational_classes(orders: impl IntoIterator<Item = u32>) -> Result<Vec<FiniteOrderElement>> {
    let mut out = Vec::new();
    for m in orders {
        let mut found: Vec<_> = enumerate_efo(m)?.into_iter().filter(is_rational).collect();
        found.sort_by_key(|e| std::cmp::Reverse(e.kac));
        out.extend(found);
    }
    Ok(out)
}

/// One function evaluated at the rational classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFunction {
    C(Weight),
    Char(CharVariant, Weight),
}

impl TableFunction {
    pub fn label(&self) -> String {
        match self {
            TableFunction::C(w) => format!("C{w}"),
            TableFunction::Char(CharVariant::Full, w) => format!("chi{w}"),
            TableFunction::Char(CharVariant::Long, w) => format!("chiL{w}"),
            TableFunction::Char(CharVariant::Short, w) => format!("chiS{w}"),
        }
    }

    /// The fifteen rows of the classical table, in its order.
    pub fn standard_rows() -> Vec<TableFunction> {
        let low = [Weight::new(1, 0), Weight::new(0, 1), Weight::new(1, 1)];
        let mut rows: Vec<_> = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (0, 3)]
            .into_iter()
            .map(|(a, b)| TableFunction::C(Weight::new(a, b)))
            .collect();
        for v in CharVariant::ALL {
            rows.extend(low.iter().map(|&w| TableFunction::Char(v, w)));
        }
        rows
    }

    /// Exact value at a rational point, rounded to the nearest integer,
    /// with the distance to that integer. Ratios are taken through their
    /// C-expansion, which stays finite on the walls of F.
    pub fn value_at(&self, p: &QPoint) -> Result<(i64, f64)> {
        let v = match *self {
            TableFunction::C(w) => evaluate_exact(Family::C, w, p).real(),
            TableFunction::Char(variant, w) => expand_char_in_C(variant, w)?
                .terms()
                .iter()
                .map(|(mu, c)| {
                    evaluate_exact(Family::C, *mu, p).real() * c.to_f64().unwrap_or(f64::NAN)
                })
                .sum(),
        };
        let r = v.round();
        Ok((r as i64, (v - r).abs()))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RationalTable {
    pub columns: Vec<FiniteOrderElement>,
    pub rows: Vec<(TableFunction, Vec<i64>)>,
    /// Largest distance from an integer seen while rounding.
    pub max_rounding_error: f64,
}

impl RationalTable {
    pub fn value(&self, f: TableFunction, kac: KacPoint) -> Option<i64> {
        let j = self.columns.iter().position(|c| c.kac == kac)?;
        self.rows.iter().find(|(g, _)| *g == f).map(|(_, v)| v[j])
    }

    /// Rows are functions, columns the classes, preceded by rows for the
    /// order and the point.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        let header: Vec<String> = std::iter::once("kac".to_string())
            .chain(self.columns.iter().map(|c| c.kac.to_string()))
            .collect();
        out.write_record(&header).map_err(io)?;
        let orders: Vec<String> = std::iter::once("M".to_string())
            .chain(self.columns.iter().map(|c| c.order().to_string()))
            .collect();
        out.write_record(&orders).map_err(io)?;
        let points: Vec<String> = std::iter::once("x".to_string())
            .chain(self.columns.iter().map(|c| {
                let p = c.point();
                format!("({},{})", p.x1, p.x2)
            }))
            .collect();
        out.write_record(&points).map_err(io)?;
        for (f, values) in &self.rows {
            let rec: Vec<String> = std::iter::once(f.label())
                .chain(values.iter().map(i64::to_string))
                .collect();
            out.write_record(&rec).map_err(io)?;
        }
        let bytes = out.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// The standard rows at the rational classes of order at most 12.
pub fn rational_table() -> Result<RationalTable> {
    table_for(rational_classes(1..=12)?, TableFunction::standard_rows())
}

pub fn table_for(
    columns: Vec<FiniteOrderElement>,
    functions: Vec<TableFunction>,
) -> Result<RationalTable> {
    let mut max_err: f64 = 0.0;
    let mut rows = Vec::with_capacity(functions.len());
    for f in functions {
        let mut values = Vec::with_capacity(columns.len());
        for c in &columns {
            let (v, err) = f.value_at(&c.point())?;
            max_err = max_err.max(err);
            values.push(v);
        }
        rows.push((f, values));
    }
    Ok(RationalTable {
        columns,
        rows,
        max_rounding_error: max_err,
    })
}

/// Points of F with denominator at most `bound` where every listed function
/// of `family` is an integer, after dividing S^L and S^S by `i`. Each point
/// is reported once, at its own level.
pub fn search_integer_points(
    family: Family,
    weights: &[Weight],
    bound: u32,
) -> Result<Vec<KacPoint>> {
    let mut out = Vec::new();
    for m in 1..=bound {
        for e in enumerate_efo(m)? {
            let p = e.point();
            let ok = weights.iter().all(|&w| {
                let v = evaluate_exact(family, w, &p).real();
                (v - v.round()).abs() <= INTEGER_TOL
            });
            if ok {
                out.push(e.kac);
            }
        }
    }
    Ok(out)
}
