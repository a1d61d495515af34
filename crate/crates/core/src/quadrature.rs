//! Gauss–Legendre rules on `[-1, 1]` and a tensor rule collapsed onto the
//! fundamental triangle.

use std::f64::consts::PI;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, refined by Newton on P_n
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Points `(x1, x2)` and weights of an `n × n` rule for
/// `∫_0^{1/2} ∫_0^{(1 - 2 x1)/3} g dx2 dx1`, built by scaling `x2` on each
/// `x1` line.
pub fn triangle_rule(n: usize) -> Vec<((f64, f64), f64)> {
    let (nodes, weights) = gauss_legendre(n);
    let mut rule = Vec::with_capacity(n * n);
    for (&u, &wu) in nodes.iter().zip(&weights) {
        let x1 = 0.25 * (u + 1.0);
        let top = (1.0 - 2.0 * x1) / 3.0;
        for (&v, &wv) in nodes.iter().zip(&weights) {
            let x2 = 0.5 * top * (v + 1.0);
            rule.push(((x1, x2), 0.25 * wu * 0.5 * top * wv));
        }
    }
    rule
}
