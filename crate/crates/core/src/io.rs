//! JSON and CSV forms of sampled fields and coefficient vectors.
//!
//! JSON values are plain numbers when the imaginary part is zero and
//! `[re, im]` pairs otherwise. CSV always carries both parts, written with
//! 17 significant digits.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::lattice::{grid_points, spectrum};
use crate::transforms::{CoefficientVector, SampledField};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonValue {
    Real(f64),
    Complex([f64; 2]),
}

impl From<Complex64> for JsonValue {
    fn from(z: Complex64) -> Self {
        if z.im == 0.0 {
            JsonValue::Real(z.re)
        } else {
            JsonValue::Complex([z.re, z.im])
        }
    }
}

impl From<JsonValue> for Complex64 {
    fn from(v: JsonValue) -> Self {
        match v {
            JsonValue::Real(re) => Complex64::new(re, 0.0),
            JsonValue::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

/// `{"M", "family"?, "points": [[s0,s1,s2]], "values": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FieldJson {
    #[serde(rename = "M")]
    pub level: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[u32; 3]>>,
    pub values: Vec<JsonValue>,
}

/// `{"M", "family", "weights": [[a,b]], "values": [...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientJson {
    #[serde(rename = "M")]
    pub level: u32,
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<[i64; 2]>>,
    pub values: Vec<JsonValue>,
}

pub fn field_to_json(f: &SampledField) -> Result<FieldJson> {
    let grid = grid_points(f.level)?;
    Ok(FieldJson {
        level: f.level,
        family: f.family.map(|fam| fam.to_string()),
        points: Some(grid.points().iter().map(|k| k.coords()).collect()),
        values: f.values.iter().map(|&z| z.into()).collect(),
    })
}

pub fn field_from_json(j: &FieldJson) -> Result<SampledField> {
    let grid = grid_points(j.level)?;
    if let Some(points) = &j.points {
        let expected: Vec<[u32; 3]> = grid.points().iter().map(|k| k.coords()).collect();
        if *points != expected {
            return Err(Error::Parse(format!(
                "field points do not match the level {} grid",
                j.level
            )));
        }
    }
    let mut f = SampledField::new(j.level, j.values.iter().map(|&v| v.into()).collect())?;
    f.family = j.family.as_deref().map(str::parse).transpose()?;
    Ok(f)
}

pub fn coefficients_to_json(d: &CoefficientVector) -> Result<CoefficientJson> {
    let spec = spectrum(crate::families::basis(d.family), d.level)?;
    Ok(CoefficientJson {
        level: d.level,
        family: d.family.to_string(),
        weights: Some(spec.weights().map(|w| [w.a, w.b]).collect()),
        values: d.values.iter().map(|&z| z.into()).collect(),
    })
}

pub fn coefficients_from_json(j: &CoefficientJson) -> Result<CoefficientVector> {
    let family: Family = j.family.parse()?;
    let spec = spectrum(crate::families::basis(family), j.level)?;
    if let Some(weights) = &j.weights {
        let expected: Vec<[i64; 2]> = spec.weights().map(|w| [w.a, w.b]).collect();
        if *weights != expected {
            return Err(Error::Parse(format!(
                "weights do not match the {family} spectrum at level {}",
                j.level
            )));
        }
    }
    CoefficientVector::new(
        family,
        j.level,
        j.values.iter().map(|&v| v.into()).collect(),
    )
}

pub fn write_field_json(f: &SampledField, w: impl Write) -> Result<()> {
    serde_json::to_writer(w, &field_to_json(f)?).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_field_json(r: impl Read) -> Result<SampledField> {
    let j: FieldJson = serde_json::from_reader(r).map_err(|e| Error::Parse(e.to_string()))?;
    field_from_json(&j)
}

pub fn write_coefficients_json(d: &CoefficientVector, w: impl Write) -> Result<()> {
    serde_json::to_writer(w, &coefficients_to_json(d)?).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_coefficients_json(r: impl Read) -> Result<CoefficientVector> {
    let j: CoefficientJson = serde_json::from_reader(r).map_err(|e| Error::Parse(e.to_string()))?;
    coefficients_from_json(&j)
}

/// Float with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn parse_num<T: std::str::FromStr>(field: Option<&str>, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse(format!("missing column {what}")))?
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad value in column {what}")))
}

/// Columns `family,s0,s1,s2,x1,x2,re,im`.
pub fn write_field_csv(f: &SampledField, w: impl Write) -> Result<()> {
    let grid = grid_points(f.level)?;
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["family", "s0", "s1", "s2", "x1", "x2", "re", "im"])
        .map_err(csv_err)?;
    let fam = f.family.map(|x| x.to_string()).unwrap_or_default();
    for (k, z) in grid.points().iter().zip(&f.values) {
        let p = k.point().to_real();
        out.write_record([
            fam.clone(),
            k.s0.to_string(),
            k.s1.to_string(),
            k.s2.to_string(),
            fmt_f64(p.x1),
            fmt_f64(p.x2),
            fmt_f64(z.re),
            fmt_f64(z.im),
        ])
        .map_err(csv_err)?;
    }
    out.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_field_csv(r: impl Read) -> Result<SampledField> {
    let mut rdr = csv::Reader::from_reader(r);
    let mut level = None;
    let mut family = None;
    let mut values = Vec::new();
    let mut points = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let s: [u32; 3] = [
            parse_num(rec.get(1), "s0")?,
            parse_num(rec.get(2), "s1")?,
            parse_num(rec.get(3), "s2")?,
        ];
        let m = s[0] + 2 * s[1] + 3 * s[2];
        if *level.get_or_insert(m) != m {
            return Err(Error::Parse("rows belong to different levels".into()));
        }
        if family.is_none() {
            let name = rec.get(0).unwrap_or("").trim();
            if !name.is_empty() {
                family = Some(name.parse::<Family>()?);
            }
        }
        points.push(s);
        values.push(Complex64::new(
            parse_num(rec.get(6), "re")?,
            parse_num(rec.get(7), "im")?,
        ));
    }
    let level = level.ok_or_else(|| Error::Parse("no rows".into()))?;
    let expected: Vec<[u32; 3]> = grid_points(level)?
        .points()
        .iter()
        .map(|k| k.coords())
        .collect();
    if points != expected {
        return Err(Error::Parse(format!(
            "rows do not match the level {level} grid"
        )));
    }
    let mut f = SampledField::new(level, values)?;
    f.family = family;
    Ok(f)
}

/// Columns `family,M,a,b,h,re,im`.
pub fn write_coefficients_csv(d: &CoefficientVector, w: impl Write) -> Result<()> {
    let spec = spectrum(crate::families::basis(d.family), d.level)?;
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["family", "M", "a", "b", "h", "re", "im"])
        .map_err(csv_err)?;
    for ((wt, h), z) in spec.entries.iter().zip(&d.values) {
        out.write_record([
            d.family.to_string(),
            d.level.to_string(),
            wt.a.to_string(),
            wt.b.to_string(),
            h.to_string(),
            fmt_f64(z.re),
            fmt_f64(z.im),
        ])
        .map_err(csv_err)?;
    }
    out.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_coefficients_csv(r: impl Read) -> Result<CoefficientVector> {
    let mut rdr = csv::Reader::from_reader(r);
    let mut head: Option<(Family, u32)> = None;
    let mut weights = Vec::new();
    let mut values = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let fam: Family = rec.get(0).unwrap_or("").parse()?;
        let m: u32 = parse_num(rec.get(1), "M")?;
        if *head.get_or_insert((fam, m)) != (fam, m) {
            return Err(Error::Parse("rows mix families or levels".into()));
        }
        weights.push([
            parse_num::<i64>(rec.get(2), "a")?,
            parse_num::<i64>(rec.get(3), "b")?,
        ]);
        values.push(Complex64::new(
            parse_num(rec.get(5), "re")?,
            parse_num(rec.get(6), "im")?,
        ));
    }
    let (family, level) = head.ok_or_else(|| Error::Parse("no rows".into()))?;
    coefficients_from_json(&CoefficientJson {
        level,
        family: family.to_string(),
        weights: Some(weights),
        values: values.into_iter().map(JsonValue::from).collect(),
    })
}
