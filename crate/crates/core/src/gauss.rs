//! Gauss-Legendre rules and Legendre interpolation helpers shared by the
//! panel machinery.

use crate::{Error, Result};

/// Standard Gauss-Legendre rule on [-1, 1].
///
/// Nodes are returned in increasing order. Exact for polynomials of degree
/// <= 2n - 1.
pub fn gauss_legendre(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || n > 64 {
        return Err(Error::parameter(format!(
            "gauss_legendre: n must be in 1..=64, got {n}"
        )));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    // Newton iteration on P_n, starting from the Chebyshev-like estimate.
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_pd(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_pd(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x computed near +1 end; mirror to fill both halves.
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_pd(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    Ok((nodes, weights))
}

/// Value and derivative of the Legendre polynomial P_n at x.
fn legendre_pd(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
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

/// Values of P_0..P_{m-1} at x.
pub fn legendre_values(m: usize, x: f64) -> Vec<f64> {
    let mut v = Vec::with_capacity(m);
    if m == 0 {
        return v;
    }
    v.push(1.0);
    if m == 1 {
        return v;
    }
    v.push(x);
    for k in 2..m {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0) * x * v[k - 1] - (kf - 1.0) * v[k - 2]) / kf;
        v.push(next);
    }
    v
}

/// Barycentric weights for the node set `x` (any distinct nodes).
pub fn barycentric_weights(x: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut w = vec![1.0; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                w[i] /= x[i] - x[j];
            }
        }
    }
    w
}

/// Evaluate the Lagrange interpolant through (x_i, f_i) at point t using
/// barycentric weights `w` (second barycentric formula).
pub fn barycentric_eval(x: &[f64], w: &[f64], f: &[f64], t: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..x.len() {
        let d = t - x[i];
        if d.abs() < 1e-300 {
            return f[i];
        }
        let c = w[i] / d;
        num += c * f[i];
        den += c;
    }
    num / den
}

/// Row of interpolation weights: value contributed by each node value to the
/// interpolant at t. `interp_row . f = interpolant(t)`.
pub fn barycentric_row(x: &[f64], w: &[f64], t: f64) -> Vec<f64> {
    let n = x.len();
    let mut row = vec![0.0; n];
    for i in 0..n {
        let d = t - x[i];
        if d.abs() < 1e-300 {
            row[i] = 1.0;
            return row;
        }
    }
    let mut den = 0.0;
    for i in 0..n {
        row[i] = w[i] / (t - x[i]);
        den += row[i];
    }
    for r in row.iter_mut() {
        *r /= den;
    }
    row
}

/// Matrix mapping values at Gauss-Legendre nodes to Legendre coefficients
/// c_k, using discrete orthogonality: c_k = (2k+1)/2 * sum_i w_i P_k(x_i) f_i.
///
/// Exact for functions that are polynomials of degree < n at the rule nodes.
pub fn legendre_coeff_matrix(nodes: &[f64], weights: &[f64]) -> Vec<Vec<f64>> {
    let n = nodes.len();
    let mut rows = vec![vec![0.0; n]; n];
    for (i, (&x, &w)) in nodes.iter().zip(weights).enumerate() {
        let p = legendre_values(n, x);
        for k in 0..n {
            rows[k][i] = (2.0 * k as f64 + 1.0) / 2.0 * w * p[k];
        }
    }
    rows
}
