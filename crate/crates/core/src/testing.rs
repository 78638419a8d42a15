//! Reference quadratures used only by tests as independent oracles.
//! Not part of any production evaluation path.

use crate::gauss::gauss_legendre;

/// Adaptive bisection with a 16/32-point Gauss-Legendre error estimate.
/// Suitable for smooth or mildly peaked integrands.
pub fn adaptive_quad(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn gl_fixed(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
        let (x, w) = gauss_legendre(n).unwrap();
        let half = (b - a) / 2.0;
        let mid = (a + b) / 2.0;
        x.iter()
            .zip(&w)
            .map(|(&t, &wi)| wi * f(mid + half * t))
            .sum::<f64>()
            * half
    }
    fn recurse(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: usize) -> f64 {
        let coarse = gl_fixed(f, a, b, 16);
        let fine = gl_fixed(f, a, (a + b) / 2.0, 16) + gl_fixed(f, (a + b) / 2.0, b, 16);
        if (coarse - fine).abs() <= tol || depth > 28 {
            fine
        } else {
            let sub_tol = (tol / 2.0).max(2e-17);
            recurse(f, a, (a + b) / 2.0, sub_tol, depth + 1)
                + recurse(f, (a + b) / 2.0, b, sub_tol, depth + 1)
        }
    }
    recurse(f, a, b, tol.max(4e-17), 0)
}

/// Integral over [-1, 1] of a function with an integrable logarithmic
/// singularity at interior point `s`: composite Gauss-Legendre on dyadically
/// graded intervals toward the singularity from both sides.
pub fn graded_log_quad(f: &dyn Fn(f64) -> f64, s: f64) -> f64 {
    assert!(s.abs() < 1.0);
    let mut total = 0.0;
    let (x, w) = gauss_legendre(24).unwrap();
    let mut piece = |a: f64, b: f64| {
        let half = (b - a) / 2.0;
        let mid = (a + b) / 2.0;
        let v: f64 = x
            .iter()
            .zip(&w)
            .map(|(&t, &wi)| wi * f(mid + half * t))
            .sum();
        v * half
    };
    // Graded pieces stop 1e-15 from s: the remaining sliver contributes
    // ~ w (log w - 1) < 4e-14, and integrands built from position
    // differences stay clear of their cancellation floor.
    let tiny = 1e-15;
    // left side: [-1, s]
    let mut lo = -1.0;
    let len = s + 1.0;
    for k in 1..=60 {
        let hi = s - len * 0.5f64.powi(k);
        if hi <= lo || s - hi < tiny {
            break;
        }
        total += piece(lo, hi);
        lo = hi;
    }
    // right side: [s, 1]
    let mut hi = 1.0;
    let len = 1.0 - s;
    for k in 1..=60 {
        let lo2 = s + len * 0.5f64.powi(k);
        if lo2 >= hi || lo2 - s < tiny {
            break;
        }
        total += piece(lo2, hi);
        hi = lo2;
    }
    total
}
