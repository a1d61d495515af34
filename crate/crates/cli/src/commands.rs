use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::Path;

use num_complex::Complex64;
use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use g2orbit::algebra::{
    expand_char_in_C, expand_product, invert_char_matrix, weights_up_to, OrbitSum,
};
use g2orbit::arith::{
    enumerate_efo, is_rational, rational_classes, rational_table, FiniteOrderElement,
};
use g2orbit::io::{self as gio, fmt_f64};
use g2orbit::lattice::forced_zero;
use g2orbit::rootsys::orbit_size;
use g2orbit::{
    continuous_inner, evaluate, evaluate_exact, grid_points, registry, spectrum, CharVariant,
    Family, FunctionValue, OrbitBasis, Point, QPoint, SampledField, TransformPlan, Weight,
};

use crate::{Cli, Command, DecomposeArgs, EfoArgs, EvalArgs, Format, TablesArgs, TransformArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<g2orbit::Error> for CliError {
    fn from(e: g2orbit::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn internal(msg: impl Into<String>) -> CliError {
    CliError::Internal(msg.into())
}

pub fn run(cli: &Cli) -> Result<()> {
    let out = match &cli.command {
        Command::Eval(args) => eval(cli, args)?,
        Command::Transform(args) => return transform(cli, args),
        Command::Decompose(args) => decompose(cli, args)?,
        Command::Tables(args) => tables(cli, args)?,
        Command::Efo(args) => efo(cli, args)?,
    };
    emit(&out, None)
}

fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    let res = match path {
        Some(p) => std::fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| internal(format!("cannot write output: {e}")))
}

fn basis(name: &str) -> Result<&'static dyn OrbitBasis> {
    Ok(registry().get(name)?)
}

fn dominant(a: i64, b: i64) -> Result<Weight> {
    let w = Weight::new(a, b);
    if w.is_dominant() {
        Ok(w)
    } else {
        Err(g2orbit::Error::NotDominant(w).into())
    }
}

fn admissible(family: Family, a: i64, b: i64) -> Result<Weight> {
    let w = dominant(a, b)?;
    if family.admits(w) {
        Ok(w)
    } else {
        Err(g2orbit::Error::Inadmissible {
            family: family.to_string(),
            weight: w,
        }
        .into())
    }
}

fn to_json(v: &impl serde::Serialize) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| internal(e.to_string()))
}

fn complex_text(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

enum Coord {
    Exact(Rational64),
    Float(f64),
}

fn parse_coord(s: &str) -> Result<Coord> {
    let bad = || usage(format!("cannot read coordinate `{s}`"));
    let t = s.trim();
    if let Some((n, d)) = t.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Coord::Exact(Rational64::new(n, d)));
    }
    if let Ok(n) = t.parse::<i64>() {
        return Ok(Coord::Exact(Rational64::from_integer(n)));
    }
    let v: f64 = t.parse().map_err(|_| bad())?;
    if v.is_finite() {
        Ok(Coord::Float(v))
    } else {
        Err(bad())
    }
}

fn as_f64(c: &Coord) -> f64 {
    match c {
        Coord::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
        Coord::Float(v) => *v,
    }
}

fn eval(cli: &Cli, args: &EvalArgs) -> Result<String> {
    let family = basis(&args.family)?.family();
    let lambda = dominant(args.a, args.b)?;

    if let Some(m) = args.grid {
        let field = SampledField::sample(family, lambda, m)?;
        return match cli.format {
            Format::Json => to_json(&gio::field_to_json(&field)?),
            Format::Text | Format::Csv => {
                let mut buf = Vec::new();
                gio::write_field_csv(&field, &mut buf)?;
                String::from_utf8(buf).map_err(|e| internal(e.to_string()))
            }
            Format::Latex => Err(usage("latex output is not available for sampled fields")),
        };
    }

    if let Some(v) = &args.inner {
        let other = basis(&v[0])?.family();
        let mu = dominant(parse_i64(&v[1])?, parse_i64(&v[2])?)?;
        let value = continuous_inner(family, lambda, other, mu, cli.quad_order as usize)?;
        return Ok(match cli.format {
            Format::Json => to_json(&json!({ "inner": value, "quad_order": cli.quad_order }))?,
            Format::Csv => format!("inner\n{}\n", fmt_f64(value)),
            _ => format!("{value}\n"),
        });
    }

    let (x1, x2) = match (&args.x1, &args.x2) {
        (Some(x1), Some(x2)) => (parse_coord(x1)?, parse_coord(x2)?),
        _ => return Err(usage("give a point x1 x2 or --grid M")),
    };
    let value: FunctionValue = match (&x1, &x2) {
        (Coord::Exact(p), Coord::Exact(q)) => evaluate_exact(family, lambda, &QPoint::new(*p, *q)),
        _ => evaluate(family, lambda, &Point::new(as_f64(&x1), as_f64(&x2))),
    };
    let (z, real) = (value.value, value.real());
    Ok(match cli.format {
        Format::Text => format!("value: {}\nreal: {}\n", complex_text(z), real),
        Format::Json => to_json(&json!({
            "family": family.to_string(),
            "weight": [lambda.a, lambda.b],
            "point": [args.x1, args.x2],
            "value": [z.re, z.im],
            "real": real,
            "admissible": value.admissible,
        }))?,
        Format::Csv => format!(
            "family,a,b,x1,x2,re,im,real\n{family},{},{},{},{},{},{},{}\n",
            lambda.a,
            lambda.b,
            fmt_f64(as_f64(&x1)),
            fmt_f64(as_f64(&x2)),
            fmt_f64(z.re),
            fmt_f64(z.im),
            fmt_f64(real)
        ),
        Format::Latex => format!(
            "{}_{{({},{})}}(x) = {}\n",
            family.latex(),
            lambda.a,
            lambda.b,
            real
        ),
    })
}

fn is_csv(path: &Path) -> bool {
    path.extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

fn open(path: &Path) -> Result<Box<dyn Read>> {
    if path == Path::new("-") {
        return Ok(Box::new(io::stdin()));
    }
    let f = File::open(path).map_err(|e| usage(format!("cannot open {}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(f)))
}

fn transform(cli: &Cli, args: &TransformArgs) -> Result<()> {
    let basis = basis(&args.family)?;
    let family = basis.family();
    let m = args.level;
    let plan = TransformPlan::new(basis, m)?.with_matrix();
    let out = args.output.as_deref();

    if let Some(path) = &args.inverse {
        let d = if is_csv(path) {
            gio::read_coefficients_csv(open(path)?)?
        } else {
            gio::read_coefficients_json(open(path)?)?
        };
        if d.family != family || d.level != m {
            return Err(usage(format!(
                "file holds {} coefficients at level {}, expected {family} at level {m}",
                d.family, d.level
            )));
        }
        let f = plan.inverse(&d)?;
        if args.roundtrip {
            let err = d.max_abs_diff(&plan.forward(&f)?)?;
            return emit(&roundtrip_report(cli, err)?, out);
        }
        let text = match cli.format {
            Format::Csv => {
                let mut buf = Vec::new();
                gio::write_field_csv(&f, &mut buf)?;
                String::from_utf8(buf).map_err(|e| internal(e.to_string()))?
            }
            Format::Json | Format::Text => to_json(&gio::field_to_json(&f)?)?,
            Format::Latex => return Err(usage("latex output is not available for transforms")),
        };
        return emit(&text, out);
    }

    let (field, random) = match &args.forward {
        Some(path) => (
            if is_csv(path) {
                gio::read_field_csv(open(path)?)?
            } else {
                gio::read_field_json(open(path)?)?
            },
            false,
        ),
        None => (random_field(family, m, cli.seed)?, true),
    };
    if field.level != m {
        return Err(g2orbit::Error::GridMismatch {
            left: field.level,
            right: m,
        }
        .into());
    }
    let d = plan.forward(&field)?;
    if args.roundtrip {
        let err = field.max_abs_diff(&plan.inverse(&d)?)?;
        if random && err > cli.tol {
            return Err(internal(format!(
                "round trip error {err:e} exceeds tolerance {:e}",
                cli.tol
            )));
        }
        return emit(&roundtrip_report(cli, err)?, out);
    }
    let text = match cli.format {
        Format::Csv => {
            let mut buf = Vec::new();
            gio::write_coefficients_csv(&d, &mut buf)?;
            String::from_utf8(buf).map_err(|e| internal(e.to_string()))?
        }
        Format::Json | Format::Text => to_json(&gio::coefficients_to_json(&d)?)?,
        Format::Latex => return Err(usage("latex output is not available for transforms")),
    };
    emit(&text, out)
}

/// Random complex field that the family can represent: zero wherever all
/// of its functions vanish.
fn random_field(family: Family, m: u32, seed: u64) -> Result<SampledField> {
    let grid = grid_points(m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = grid
        .points()
        .iter()
        .map(|k| {
            let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            if forced_zero(family, k) {
                Complex64::new(0.0, 0.0)
            } else {
                z
            }
        })
        .collect();
    Ok(SampledField::new(m, values)?)
}

fn roundtrip_report(cli: &Cli, err: f64) -> Result<String> {
    Ok(match cli.format {
        Format::Json => to_json(&json!({ "roundtrip_error": err }))?,
        Format::Csv => format!("roundtrip_error\n{}\n", fmt_f64(err)),
        _ => format!("max reconstruction error: {}\n", fmt_f64(err)),
    })
}

fn sum_csv(s: &OrbitSum) -> String {
    let mut out = String::from("family,a,b,coeff\n");
    for (w, c) in s.ordered_terms() {
        out.push_str(&format!("{},{},{},{}\n", s.family, w.a, w.b, c));
    }
    out
}

fn render_sum(cli: &Cli, s: &OrbitSum) -> Result<String> {
    Ok(match cli.format {
        Format::Text => format!("{s}\n"),
        Format::Latex => format!("{}\n", s.to_latex()),
        Format::Json => to_json(&s.to_json())?,
        Format::Csv => sum_csv(s),
    })
}

fn decompose(cli: &Cli, args: &DecomposeArgs) -> Result<String> {
    let fa = basis(&args.family_a)?.family();
    let fb = basis(&args.family_b)?.family();
    let la = admissible(fa, args.a1, args.b1)?;
    let lb = admissible(fb, args.a2, args.b2)?;
    let sum = expand_product(fa, la, fb, lb);
    let text = render_sum(cli, &sum)?;

    if let Some(n) = args.check {
        let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
        let scale = (orbit_size(la) * orbit_size(lb)) as f64;
        let mut worst: f64 = 0.0;
        for _ in 0..n {
            let p = Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let lhs = evaluate(fa, la, &p).value * evaluate(fb, lb, &p).value;
            worst = worst.max((lhs - sum.evaluate(&p)).norm() / scale);
        }
        if worst > cli.tol {
            return Err(internal(format!(
                "numerical check failed: relative deviation {worst:e}"
            )));
        }
        eprintln!(
            "checked at {n} points, max relative deviation {}",
            fmt_f64(worst)
        );
    }
    Ok(text)
}

fn parse_i64(s: &str) -> Result<i64> {
    s.parse()
        .map_err(|_| usage(format!("`{s}` is not an integer")))
}

fn tables(cli: &Cli, args: &TablesArgs) -> Result<String> {
    if args.rational {
        return rational(cli);
    }
    if let Some(m) = args.grid {
        let grid = grid_points(m)?;
        return match cli.format {
            Format::Json => to_json(&grid.to_json()),
            Format::Latex => Err(usage("latex output is not available for grids")),
            _ => {
                let mut out = String::from("s0,s1,s2,x1,x2,c\n");
                for (k, c) in grid.iter() {
                    let p = k.point().to_real();
                    out.push_str(&format!(
                        "{},{},{},{},{},{}\n",
                        k.s0,
                        k.s1,
                        k.s2,
                        fmt_f64(p.x1),
                        fmt_f64(p.x2),
                        c
                    ));
                }
                Ok(out)
            }
        };
    }
    if let Some(v) = &args.spectrum {
        let basis = basis(&v[0])?;
        let m: u32 = v[1]
            .parse()
            .map_err(|_| usage(format!("`{}` is not a level", v[1])))?;
        let spec = spectrum(basis, m)?;
        return match cli.format {
            Format::Json => to_json(&spec.to_json()),
            Format::Latex => Err(usage("latex output is not available for spectra")),
            _ => {
                let mut out = String::from("a,b,h,norm\n");
                for ((w, h), n) in spec.entries.iter().zip(spec.norms()) {
                    out.push_str(&format!("{},{},{},{}\n", w.a, w.b, h, fmt_f64(n)));
                }
                Ok(out)
            }
        };
    }
    if let Some(v) = &args.char {
        let variant: CharVariant = v[0].parse()?;
        let lambda = dominant(parse_i64(&v[1])?, parse_i64(&v[2])?)?;
        return render_sum(cli, &expand_char_in_C(variant, lambda)?);
    }
    if let Some(v) = &args.inverse_char {
        let mu = dominant(parse_i64(&v[0])?, parse_i64(&v[1])?)?;
        let matrix = invert_char_matrix(CharVariant::Full, &weights_up_to(3 * mu.a + 2 * mu.b))?;
        let row = matrix
            .c_in_chars(mu)
            .ok_or_else(|| internal("weight missing from its own closure"))?;
        return match cli.format {
            Format::Json => {
                let terms: Vec<Value> = row
                    .iter()
                    .rev()
                    .map(|(w, c)| json!([w.a, w.b, c.to_string()]))
                    .collect();
                to_json(&json!({ "C": [mu.a, mu.b], "chars": terms }))
            }
            Format::Csv => {
                let mut out = String::from("a,b,coeff\n");
                for (w, c) in row.iter().rev() {
                    out.push_str(&format!("{},{},{}\n", w.a, w.b, c));
                }
                Ok(out)
            }
            _ => Ok(format!("{}\n", matrix.format_row(mu).unwrap_or_default())),
        };
    }
    Err(usage("choose a table"))
}

fn rational(cli: &Cli) -> Result<String> {
    let table = rational_table()?;
    match cli.format {
        Format::Csv => Ok(table.to_csv()?),
        Format::Json => {
            let columns: Vec<Value> = table
                .columns
                .iter()
                .map(|c| {
                    let p = c.point();
                    json!({ "kac": c.kac.coords(), "M": c.order(), "x": [p.x1.to_string(), p.x2.to_string()] })
                })
                .collect();
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|(f, v)| json!({ "function": f.label(), "values": v }))
                .collect();
            to_json(&json!({ "columns": columns, "rows": rows }))
        }
        Format::Latex => Err(usage("latex output is not available for this table")),
        Format::Text => {
            let mut out = format!("{:<10}", "");
            for c in &table.columns {
                out.push_str(&format!("{:>10}", c.kac.to_string()));
            }
            out.push('\n');
            for (f, values) in &table.rows {
                out.push_str(&format!("{:<10}", f.label()));
                for v in values {
                    out.push_str(&format!("{v:>10}"));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

fn efo(cli: &Cli, args: &EfoArgs) -> Result<String> {
    let elems: Vec<(FiniteOrderElement, bool)> = match (args.level, args.rational_up_to) {
        (Some(m), _) => enumerate_efo(m)?
            .into_iter()
            .map(|e| (e, is_rational(&e)))
            .collect(),
        (None, Some(n)) => rational_classes(1..=n)?
            .into_iter()
            .map(|e| (e, true))
            .collect(),
        (None, None) => return Err(usage("give an order M or --rational-up-to N")),
    };
    Ok(match cli.format {
        Format::Json => {
            let v: Vec<Value> = elems
                .iter()
                .map(|(e, r)| {
                    let p = e.point();
                    json!({ "kac": e.kac.coords(), "M": e.order(), "x": [p.x1.to_string(), p.x2.to_string()], "rational": r })
                })
                .collect();
            to_json(&v)?
        }
        Format::Csv => {
            let mut out = String::from("s0,s1,s2,M,x1,x2,rational\n");
            for (e, r) in &elems {
                let p = e.point();
                let k = e.kac;
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    k.s0,
                    k.s1,
                    k.s2,
                    e.order(),
                    p.x1,
                    p.x2,
                    r
                ));
            }
            out
        }
        Format::Latex => return Err(usage("latex output is not available for efo")),
        Format::Text => {
            let mut out = String::new();
            for (e, r) in &elems {
                let p = e.point();
                let tag = if *r { "  rational" } else { "" };
                out.push_str(&format!(
                    "{}  M={}  ({},{}){tag}\n",
                    e.kac,
                    e.order(),
                    p.x1,
                    p.x2
                ));
            }
            out
        }
    })
}
