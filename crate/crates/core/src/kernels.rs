//! Free-space Stokeslet and stresslet kernels, the complex-variable form of
//! the single layer, and the Ewald real/Fourier split pieces.
//!
//! Conventions used throughout the crate (mu = 1 unless stated):
//! - Stokeslet G(r) = -I log r + r r^T / r^2, single layer
//!   S[q](x) = (1/4 pi mu) int q(y) G(x - y) ds(y).
//! - Stresslet T_jls(r) = -4 r_j r_l r_s / r^4, double layer
//!   D[q](x) = -(1/4 pi) int q_j(y) T_jls(x - y) n_s(y) ds(y), which equals
//!   (1/pi) int (q . r)(n . r) r / r^4 ds with r = x - y.
//! - The periodized sums carry the 1/(4 pi) inside the real-space split
//!   kernels below, so strengths are plain q w.

use crate::special::{exp_int_e1, EULER_GAMMA};
use crate::{Error, Mat2, Result, Vec2, C64};

pub const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;

/// Rank-3 tensor with indices [j][l][s].
pub type Tensor3 = [[[f64; 2]; 2]; 2];

#[derive(Debug, Clone, Copy)]
pub struct KernelParams {
    /// viscosity (nondimensional 1 in the solver)
    pub mu: f64,
    /// single-layer coupling constant in u = 2 D[q] + eta S[q]
    pub eta: f64,
    /// Ewald decomposition parameter
    pub xi: f64,
    /// periodic box side
    pub box_l: f64,
}

impl KernelParams {
    pub fn new(eta: f64, xi: f64, box_l: f64) -> Result<Self> {
        if eta <= 0.0 {
            return Err(Error::parameter("eta must be positive"));
        }
        if xi <= 0.0 {
            return Err(Error::parameter("xi must be positive"));
        }
        Ok(KernelParams {
            mu: 1.0,
            eta,
            xi,
            box_l,
        })
    }
}

/// Free-space Stokeslet G(r) = -I log r + r r^T / r^2.
pub fn stokeslet(r: Vec2) -> Result<Mat2> {
    let r2 = r.norm_squared();
    if r2 == 0.0 {
        return Err(Error::Singular("stokeslet at r = 0".into()));
    }
    let log_r = 0.5 * r2.ln();
    Ok(Mat2::new(
        -log_r + r.x * r.x / r2,
        r.x * r.y / r2,
        r.x * r.y / r2,
        -log_r + r.y * r.y / r2,
    ))
}

/// Apply the stresslet: out_l = sum_{j,s} q_j T_jls(r) n_s with
/// T_jls = -4 r_j r_l r_s / r^4.
pub fn stresslet_apply(r: Vec2, n: Vec2, q: Vec2) -> Result<Vec2> {
    let r2 = r.norm_squared();
    if r2 == 0.0 {
        return Err(Error::Singular("stresslet at r = 0".into()));
    }
    let c = -4.0 * q.dot(&r) * n.dot(&r) / (r2 * r2);
    Ok(r * c)
}

/// On-surface limit of T_jls(gamma(t) - gamma(s)) n_s(s) as s -> t at a
/// smooth point: -2 kappa t_hat t_hat^T applied to q.
pub fn stresslet_diag_apply(tangent: Vec2, curvature: f64, q: Vec2) -> Vec2 {
    tangent * (-2.0 * curvature * tangent.dot(&q))
}

/// Three-term complex-variable decomposition of the single-layer integrand:
/// constant, logarithmic, and conjugate-ratio parts. Their sum equals the
/// Stokeslet-based integrand (1/4 pi mu) q_j G_jl written as a complex
/// number. The log term is the only part without a finite coincident limit.
pub fn slp_complex_split(tau: C64, z: C64, q: C64, mu: f64) -> Result<(C64, C64, C64)> {
    let d = tau - z;
    if d == C64::new(0.0, 0.0) {
        return Err(Error::Singular("slp_complex_split at tau = z".into()));
    }
    let c8 = 1.0 / (8.0 * std::f64::consts::PI * mu);
    let c4 = 1.0 / (4.0 * std::f64::consts::PI * mu);
    let constant = q * c8;
    let log_term = -q * (d.norm().ln() * c4);
    let conj_term = q.conj() * (d / d.conj()) * c8;
    Ok((constant, log_term, conj_term))
}

/// Real-space Ewald Stokeslet
/// G^R(r, xi) = (1/4 pi) ( e^{-xi^2 r^2} (r r^T / r^2 - I)
///            + (I/2) E1(xi^2 r^2) ).
pub fn ewald_real_stokeslet(r: Vec2, xi: f64) -> Result<Mat2> {
    let r2 = r.norm_squared();
    if r2 == 0.0 {
        return Err(Error::Singular("ewald_real_stokeslet at r = 0".into()));
    }
    let x2 = xi * xi * r2;
    if x2 > 710.0 {
        return Ok(Mat2::zeros());
    }
    let e = (-x2).exp();
    let e1 = exp_int_e1(x2);
    let mut m = Mat2::new(
        e * (r.x * r.x / r2 - 1.0),
        e * (r.x * r.y / r2),
        e * (r.x * r.y / r2),
        e * (r.y * r.y / r2 - 1.0),
    );
    m[(0, 0)] += 0.5 * e1;
    m[(1, 1)] += 0.5 * e1;
    Ok(m / FOUR_PI)
}

/// Fourier-space Ewald Stokeslet
/// G^F(k, xi) = (1/k^2) e^{-k^2/(4 xi^2)} (I - k k^T / k^2)(1 + k^2/(4 xi^2)).
pub fn ewald_fourier_stokeslet(k: Vec2, xi: f64) -> Result<Mat2> {
    let k2 = k.norm_squared();
    if k2 == 0.0 {
        return Err(Error::Singular(
            "ewald_fourier_stokeslet zero mode (the k = 0 Stokeslet mode is 0)".into(),
        ));
    }
    let a = k2 / (4.0 * xi * xi);
    let scale = (-a).exp() * (1.0 + a) / k2;
    Ok(Mat2::new(
        scale * (1.0 - k.x * k.x / k2),
        scale * (-k.x * k.y / k2),
        scale * (-k.x * k.y / k2),
        scale * (1.0 - k.y * k.y / k2),
    ))
}

/// Real-space Ewald stresslet tensor
/// T^R_jls(r, xi) = (1/4 pi) e^{-xi^2 r^2} ( 2 xi^2 (d_jl r_s + d_js r_l
///   + d_ls r_j) - (4 r_j r_l r_s / r^4)(1 + xi^2 r^2) ).
pub fn ewald_real_stresslet(r: Vec2, xi: f64) -> Result<Tensor3> {
    let r2 = r.norm_squared();
    if r2 == 0.0 {
        return Err(Error::Singular("ewald_real_stresslet at r = 0".into()));
    }
    let x2 = xi * xi * r2;
    let mut t = [[[0.0; 2]; 2]; 2];
    if x2 > 710.0 {
        return Ok(t);
    }
    let e = (-x2).exp();
    let rv = [r.x, r.y];
    let c_grad = 2.0 * xi * xi;
    let c_dir = 4.0 * (1.0 + x2) / (r2 * r2);
    for j in 0..2 {
        for l in 0..2 {
            for s in 0..2 {
                let deltas = delta(j, l) * rv[s] + delta(j, s) * rv[l] + delta(l, s) * rv[j];
                t[j][l][s] = e * (c_grad * deltas - c_dir * rv[j] * rv[l] * rv[s]) / FOUR_PI;
            }
        }
    }
    Ok(t)
}

/// Apply the real-space Ewald stresslet: out_l = q_j T^R_jls n_s.
pub fn ewald_real_stresslet_apply(r: Vec2, xi: f64, q: Vec2, n: Vec2) -> Result<Vec2> {
    let r2 = r.norm_squared();
    if r2 == 0.0 {
        return Err(Error::Singular("ewald_real_stresslet at r = 0".into()));
    }
    let x2 = xi * xi * r2;
    if x2 > 710.0 {
        return Ok(Vec2::zeros());
    }
    let e = (-x2).exp();
    let qr = q.dot(&r);
    let nr = n.dot(&r);
    let qn = q.dot(&n);
    // q_j (d_jl r_s + d_js r_l + d_ls r_j) n_s = q_l (n.r) + n_l (q.r) + r_l (q.n)
    let grad_part = (q * nr + n * qr + r * qn) * (2.0 * xi * xi);
    let dir_part = r * (4.0 * (1.0 + x2) * qr * nr / (r2 * r2));
    Ok((grad_part - dir_part) * (e / FOUR_PI))
}

/// Fourier-space Ewald stresslet. The tensor is purely imaginary,
/// T^F = i B(k, xi); this returns B.
pub fn ewald_fourier_stresslet(k: Vec2, xi: f64) -> Result<Tensor3> {
    let k2 = k.norm_squared();
    if k2 == 0.0 {
        return Err(Error::Singular("ewald_fourier_stresslet at k = 0".into()));
    }
    let a = k2 / (4.0 * xi * xi);
    let scale = (-a).exp() * (1.0 + a) / k2;
    let kv = [k.x, k.y];
    let mut t = [[[0.0; 2]; 2]; 2];
    for j in 0..2 {
        for l in 0..2 {
            for s in 0..2 {
                let deltas = delta(j, l) * kv[s] + delta(j, s) * kv[l] + delta(l, s) * kv[j];
                t[j][l][s] = scale * (deltas - 2.0 * kv[j] * kv[l] * kv[s] / k2);
            }
        }
    }
    Ok(t)
}

/// k = 0 mode of the stresslet sum: T^{F,0}_jls(x) = d_ls x_j, evaluated at
/// source positions; fixes the mean flow through the reference cell.
pub fn stresslet_zero_mode(x: Vec2) -> Tensor3 {
    let xv = [x.x, x.y];
    let mut t = [[[0.0; 2]; 2]; 2];
    for j in 0..2 {
        for l in 0..2 {
            t[j][l][l] = xv[j];
        }
    }
    t
}

/// Self-interaction limit subtracted from the Fourier sum when the target
/// coincides with a source: (gamma/2 + log xi + 1) w I, in Stokeslet (G)
/// units. Callers working in velocity units scale by 1/(4 pi).
/// The stresslet analogue is zero.
pub fn stokeslet_self_limit(xi: f64, w: f64) -> Mat2 {
    Mat2::identity() * ((0.5 * EULER_GAMMA + xi.ln() + 1.0) * w)
}

#[inline]
fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn stokeslet_examples() {
        let g = stokeslet(Vec2::new(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(g[(0, 0)], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g[(0, 1)], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g[(1, 1)], 0.0, epsilon = 1e-15);

        let g = stokeslet(Vec2::new(0.0, 2.0)).unwrap();
        let l2 = 2.0f64.ln();
        assert_abs_diff_eq!(g[(0, 0)], -l2, epsilon = 1e-15);
        assert_abs_diff_eq!(g[(1, 1)], 1.0 - l2, epsilon = 1e-15);
        assert_abs_diff_eq!(g[(0, 1)], 0.0, epsilon = 1e-15);

        // even symmetry
        let r = Vec2::new(0.37, -1.21);
        let a = stokeslet(r).unwrap();
        let b = stokeslet(-r).unwrap();
        assert!((a - b).norm() < 1e-15);

        assert!(stokeslet(Vec2::zeros()).is_err());
    }

    #[test]
    fn stresslet_examples() {
        let v = stresslet_apply(Vec2::new(1.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(1.0, 0.0))
            .unwrap();
        assert_abs_diff_eq!(v.x, -4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.y, 0.0, epsilon = 1e-15);

        let v = stresslet_apply(Vec2::new(1.0, 0.0), Vec2::new(0.0, 1.0), Vec2::new(1.0, 0.0))
            .unwrap();
        assert!(v.norm() < 1e-15);

        // homogeneity of degree -1
        let r = Vec2::new(0.4, 0.9);
        let n = Vec2::new(0.6, 0.8);
        let q = Vec2::new(-0.3, 1.1);
        let v1 = stresslet_apply(r, n, q).unwrap();
        let v2 = stresslet_apply(r * 2.0, n, q).unwrap();
        assert!((v2 - v1 * 0.5).norm() < 1e-14);
    }

    /// Recombined complex split equals the real-variable Stokeslet integrand.
    #[test]
    fn slp_split_matches_real_formula() {
        let cases = [
            (C64::new(0.3, 0.7), C64::new(-0.2, 0.1), C64::new(1.0, -0.5)),
            (C64::new(2.0, -1.0), C64::new(0.0, 0.0), C64::new(0.3, 0.9)),
            (C64::new(-0.8, 0.2), C64::new(0.4, 0.4), C64::new(-1.2, 0.1)),
        ];
        for (tau, z, q) in cases {
            let (a, b, c) = slp_complex_split(tau, z, q, 1.0).unwrap();
            let total = a + b + c;
            // oracle: (1/4 pi mu) q_j G_jl(x - y), x = z, y = tau
            let r = Vec2::new(z.re - tau.re, z.im - tau.im);
            let g = stokeslet(r).unwrap();
            let qv = Vec2::new(q.re, q.im);
            let u = Vec2::new(
                qv.x * g[(0, 0)] + qv.y * g[(1, 0)],
                qv.x * g[(0, 1)] + qv.y * g[(1, 1)],
            ) / FOUR_PI;
            assert_abs_diff_eq!(total.re, u.x, epsilon = 1e-13);
            assert_abs_diff_eq!(total.im, u.y, epsilon = 1e-13);
        }
    }

    #[test]
    fn slp_split_conjugate_term_properties() {
        // unit-modulus ratio
        let tau = C64::new(0.9, -0.3);
        let z = C64::new(0.1, 0.4);
        let q = C64::new(0.5, 0.5);
        let (_, _, c) = slp_complex_split(tau, z, q, 1.0).unwrap();
        let expected_mag = q.norm() / (8.0 * std::f64::consts::PI);
        assert_abs_diff_eq!(c.norm(), expected_mag, epsilon = 1e-15);

        // real q and real tau - z: the ratio collapses to 1
        let (_, _, c) = slp_complex_split(C64::new(2.0, 0.0), C64::new(0.5, 0.0), C64::new(0.7, 0.0), 1.0)
            .unwrap();
        assert_abs_diff_eq!(c.re, 0.7 / (8.0 * std::f64::consts::PI), epsilon = 1e-15);
        assert_abs_diff_eq!(c.im, 0.0, epsilon = 1e-15);
    }

    /// The curvature diagonal limit matches a small-separation evaluation on
    /// a circle (kappa = 1).
    #[test]
    fn stresslet_diag_limit_on_circle() {
        let t = 1.0f64; // angle parameter location
        let h = 1e-5;
        let gamma = |s: f64| Vec2::new(s.cos(), s.sin());
        let r = gamma(t) - gamma(t - h);
        let n_src = -gamma(t - h); // inward normal for ccw circle
        let q = Vec2::new(0.3, -0.8);
        let approach = stresslet_apply(r, n_src, q).unwrap();
        let tangent = Vec2::new(-t.sin(), t.cos());
        let limit = stresslet_diag_apply(tangent, 1.0, q);
        assert!(
            (approach - limit).norm() < 2e-4,
            "approach {approach:?} vs limit {limit:?}"
        );
    }

    #[test]
    fn ewald_real_stokeslet_values() {
        // spec example at r = (1, 0), xi = 1
        let g = ewald_real_stokeslet(Vec2::new(1.0, 0.0), 1.0).unwrap();
        let e1 = exp_int_e1(1.0);
        assert_abs_diff_eq!(g[(0, 0)], 0.5 * e1 / FOUR_PI, epsilon = 1e-15);
        assert_abs_diff_eq!(g[(0, 1)], 0.0, epsilon = 1e-16);
        assert_abs_diff_eq!(
            g[(1, 1)],
            ((-1.0f64).exp() * (-1.0) + 0.5 * e1) / FOUR_PI,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(g[(0, 0)], 0.008730, epsilon = 1e-6);

        // exponential decay: xi r >= 6
        let g = ewald_real_stokeslet(Vec2::new(6.0, 0.0), 1.0).unwrap();
        assert!(g.norm() < 1e-15);

        // even symmetry
        let r = Vec2::new(0.3, -0.4);
        let a = ewald_real_stokeslet(r, 2.0).unwrap();
        let b = ewald_real_stokeslet(-r, 2.0).unwrap();
        assert!((a - b).norm() < 1e-16);
    }

    #[test]
    fn ewald_fourier_stokeslet_properties() {
        // annihilates k
        let k = Vec2::new(1.3, -2.1);
        let g = ewald_fourier_stokeslet(k, 0.9).unwrap();
        let gk = g * k;
        assert!(gk.norm() < 1e-15);

        // k = (1,0), xi -> infinity
        let g = ewald_fourier_stokeslet(Vec2::new(1.0, 0.0), 1e9).unwrap();
        assert_abs_diff_eq!(g[(0, 0)], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(g[(1, 1)], 1.0, epsilon = 1e-12);

        // Gaussian decay
        let g = ewald_fourier_stokeslet(Vec2::new(12.0, 0.0), 1.0).unwrap();
        assert!(g.norm() < 1e-15);

        assert!(ewald_fourier_stokeslet(Vec2::zeros(), 1.0).is_err());
    }

    #[test]
    fn ewald_real_stresslet_limits() {
        // xi -> 0 at fixed r recovers the free-space stresslet / (4 pi)
        let r = Vec2::new(0.7, -0.2);
        let xi = 1e-5 / r.norm();
        let t = ewald_real_stresslet(r, xi).unwrap();
        let rv = [r.x, r.y];
        let r2 = r.norm_squared();
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    let free = -4.0 * rv[j] * rv[l] * rv[s] / (r2 * r2);
                    assert_abs_diff_eq!(t[j][l][s], free / FOUR_PI, epsilon = 1e-10);
                }
            }
        }
        // full index symmetry
        let t = ewald_real_stresslet(Vec2::new(0.4, 1.1), 1.7).unwrap();
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    assert_abs_diff_eq!(t[j][l][s], t[l][j][s], epsilon = 1e-16);
                    assert_abs_diff_eq!(t[j][l][s], t[j][s][l], epsilon = 1e-16);
                }
            }
        }
        // decay
        let t = ewald_real_stresslet(Vec2::new(6.5, 0.0), 1.0).unwrap();
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    assert!(t[j][l][s].abs() < 1e-14);
                }
            }
        }
        // apply form consistent with the tensor
        let (r, xi) = (Vec2::new(0.3, 0.5), 1.2);
        let (q, n) = (Vec2::new(0.8, -0.1), Vec2::new(0.6, 0.8));
        let t = ewald_real_stresslet(r, xi).unwrap();
        let qv = [q.x, q.y];
        let nv = [n.x, n.y];
        let mut expect = Vec2::zeros();
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    expect[l] += qv[j] * t[j][l][s] * nv[s];
                }
            }
        }
        let got = ewald_real_stresslet_apply(r, xi, q, n).unwrap();
        assert!((got - expect).norm() < 1e-15);
    }

    #[test]
    fn ewald_fourier_stresslet_properties() {
        let k = Vec2::new(0.9, -1.4);
        let a = ewald_fourier_stresslet(k, 1.1).unwrap();
        let b = ewald_fourier_stresslet(-k, 1.1).unwrap();
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    assert_abs_diff_eq!(a[j][l][s], -b[j][l][s], epsilon = 1e-16);
                }
            }
        }
        let t = ewald_fourier_stresslet(Vec2::new(12.5, 0.0), 1.0).unwrap();
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    assert!(t[j][l][s].abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn zero_mode_examples() {
        let t = stresslet_zero_mode(Vec2::new(2.0, 3.0));
        for l in 0..2 {
            assert_abs_diff_eq!(t[0][l][l], 2.0);
            assert_abs_diff_eq!(t[1][l][l], 3.0);
            assert_abs_diff_eq!(t[0][l][1 - l], 0.0);
            assert_abs_diff_eq!(t[1][l][1 - l], 0.0);
        }
        let t = stresslet_zero_mode(Vec2::zeros());
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    assert_abs_diff_eq!(t[j][l][s], 0.0);
                }
            }
        }
        // linearity
        let a = stresslet_zero_mode(Vec2::new(0.3, -0.7));
        let b = stresslet_zero_mode(Vec2::new(0.3, -0.7) * 2.5);
        for j in 0..2 {
            for l in 0..2 {
                for s in 0..2 {
                    assert_abs_diff_eq!(b[j][l][s], 2.5 * a[j][l][s], epsilon = 1e-15);
                }
            }
        }
    }

    #[test]
    fn self_limit_values() {
        let m = stokeslet_self_limit(1.0, 1.0);
        assert_abs_diff_eq!(m[(0, 0)], 1.2886078, epsilon = 1e-7);
        assert_abs_diff_eq!(m[(0, 1)], 0.0);
        let m = stokeslet_self_limit((-1.0f64).exp(), 1.0);
        assert_abs_diff_eq!(m[(0, 0)], 0.2886078, epsilon = 1e-7);
    }

    /// Split-consistency near r = 0: the difference of two real-space
    /// kernels stays finite and approaches (1/4 pi) log(xi1/xi2) I, and
    /// (1/4 pi) G - G^R approaches the self limit.
    #[test]
    fn split_smooth_near_origin() {
        let r = Vec2::new(1e-8, 0.0);
        let (xi1, xi2) = (0.7, 2.3);
        let d = ewald_real_stokeslet(r, xi2).unwrap() - ewald_real_stokeslet(r, xi1).unwrap();
        assert!(d.norm().is_finite());
        let expect = (xi1 / xi2).ln() / FOUR_PI;
        assert_abs_diff_eq!(d[(0, 0)], expect, epsilon = 1e-12);
        assert_abs_diff_eq!(d[(1, 1)], expect, epsilon = 1e-12);

        let g = stokeslet(r).unwrap() / FOUR_PI - ewald_real_stokeslet(r, xi1).unwrap();
        let lim = stokeslet_self_limit(xi1, 1.0) / FOUR_PI;
        assert!((g - lim).norm() < 1e-12);
    }
}
