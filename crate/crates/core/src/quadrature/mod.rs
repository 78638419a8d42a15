//! Panel-level quadrature machinery: analytic moment recursions for the
//! log kernel, Vandermonde-corrected weights for singular self/adjacent
//! interactions, and near-singular close evaluation off the boundary.

pub mod assembly;
pub mod close;

pub use assembly::{assemble_free_space, free_space_corrections, MeshView, ViewPanel};

use crate::gauss::gauss_legendre;
use crate::{Error, Result, C64};
use nalgebra::{DMatrix, DVector};

/// Cauchy moments p_j(a) = int_{-1}^{1} t^j / (t - a) dt, j = 0..n-1.
///
/// Principal value for real a in (-1, 1). Upward recursion
/// p_j = a p_{j-1} + (1 - (-1)^j)/j for |a| <= 1.1 (error damped); for
/// larger |a| the recursion runs downward from a Laurent-series start so
/// roundoff is damped instead of amplified.
pub fn cauchy_moments(a: C64, n: usize) -> Vec<C64> {
    // log((a-1)/(a+1)) with the principal branch is analytic off [-1, 1];
    // its real part is the principal value on the cut.
    let p0 = ((a - 1.0) / (a + 1.0)).ln();
    if a.norm() <= 1.1 || n == 1 {
        let mut p = Vec::with_capacity(n);
        p.push(p0);
        for j in 1..n {
            let c = if j % 2 == 1 { 2.0 / j as f64 } else { 0.0 };
            let prev = p[j - 1];
            p.push(a * prev + c);
        }
        p
    } else {
        let mut p = vec![C64::new(0.0, 0.0); n];
        p[n - 1] = cauchy_laurent(a, n - 1);
        for j in (1..n).rev() {
            let c = if j % 2 == 1 { 2.0 / j as f64 } else { 0.0 };
            p[j - 1] = (p[j] - c) / a;
        }
        p[0] = p0;
        p
    }
}

/// Laurent tail p_j(a) = -sum_{m >= 0, j+m even} 2 a^{-(m+1)} / (j+m+1),
/// convergent for |a| > 1.
fn cauchy_laurent(a: C64, j: usize) -> C64 {
    let inv = C64::new(1.0, 0.0) / a;
    let inv2 = inv * inv;
    let m0 = if j % 2 == 0 { 0 } else { 1 };
    let mut pow = if m0 == 0 { inv } else { inv2 };
    let mut s = C64::new(0.0, 0.0);
    let mut m = m0;
    loop {
        let add = pow * (2.0 / (j as f64 + m as f64 + 1.0));
        s += add;
        if add.norm() < 1e-18 * s.norm() + 1e-300 || m > 6000 {
            break;
        }
        m += 2;
        pow *= inv2;
    }
    -s
}

/// Hadamard moments int_{-1}^{1} t^j / (t - a)^2 dt, j = 0..n-1,
/// obtained by differentiating the Cauchy recursion in a; same
/// upward/downward split as `cauchy_moments`.
pub fn hadamard_moments(a: C64, n: usize) -> Vec<C64> {
    let p = cauchy_moments(a, n);
    let q0 = 1.0 / (a - 1.0) - 1.0 / (a + 1.0);
    if a.norm() <= 1.1 || n == 1 {
        let mut q = Vec::with_capacity(n);
        q.push(q0);
        for j in 1..n {
            q.push(p[j - 1] + a * q[j - 1]);
        }
        q
    } else {
        let mut q = vec![C64::new(0.0, 0.0); n];
        q[n - 1] = hadamard_laurent(a, n - 1);
        for j in (1..n).rev() {
            q[j - 1] = (q[j] - p[j - 1]) / a;
        }
        q[0] = q0;
        q
    }
}

/// Laurent tail of the Hadamard moment (derivative of the Cauchy tail):
/// q_j(a) = sum_{m >= 0, j+m even} 2 (m+1) a^{-(m+2)} / (j+m+1).
fn hadamard_laurent(a: C64, j: usize) -> C64 {
    let inv = C64::new(1.0, 0.0) / a;
    let inv2 = inv * inv;
    let m0 = if j % 2 == 0 { 0 } else { 1 };
    let mut pow = if m0 == 0 { inv2 } else { inv2 * inv };
    let mut s = C64::new(0.0, 0.0);
    let mut m = m0;
    loop {
        let add = pow * (2.0 * (m as f64 + 1.0) / (j as f64 + m as f64 + 1.0));
        s += add;
        if add.norm() < 1e-18 * s.norm() + 1e-300 || m > 6000 {
            break;
        }
        m += 2;
        pow *= inv2;
    }
    s
}

/// Log moments h_j(t_z) = int_{-1}^{1} t^j log|t - t_z| dt, j = 0..n-1,
/// valid for real t_z in (-1, 1) (on-surface) and complex t_z (close
/// evaluation). The imaginary bookkeeping of the underlying complex
/// recursion cancels in the real part.
pub fn h_vector(t_z: C64, n: usize) -> Result<Vec<f64>> {
    if (t_z - C64::new(1.0, 0.0)).norm() < 1e-14 || (t_z + C64::new(1.0, 0.0)).norm() < 1e-14 {
        return Err(Error::Singular("h_vector: t_z at a panel endpoint".into()));
    }
    let p = cauchy_moments(t_z, n + 1);
    let lp = (C64::new(1.0, 0.0) - t_z).ln();
    let lm = (C64::new(-1.0, 0.0) - t_z).ln();
    let mut h = Vec::with_capacity(n);
    for j in 0..n {
        let jf = (j + 1) as f64;
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        // int t^j log(t - a) dt = ( log(1-a) - (-1)^{j+1} log(-1-a) - p_{j+1} ) / (j+1)
        let l = (lp + sign * lm - p[j + 1]) / jf;
        h.push(l.re);
    }
    Ok(h)
}

/// Corrected quadrature weights for one panel/target pair: omega solves
/// V^T omega = h(t_z) so that sum_i omega_i p(t_i) reproduces
/// int_{-1}^{1} p(t) log|t - t_z| dt exactly for polynomials of degree < n_q.
#[derive(Debug, Clone)]
pub struct CorrectedWeights {
    pub t_z: C64,
    pub omega: Vec<f64>,
}

/// Per-n_q precomputed data for the corrected-weight machinery.
pub struct PanelKit {
    pub n_q: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// barycentric interpolation weights for the node set
    pub bary: Vec<f64>,
    vt_lu: nalgebra::LU<f64, nalgebra::Dyn, nalgebra::Dyn>,
    vt: DMatrix<f64>,
}

impl PanelKit {
    pub fn new(n_q: usize) -> Result<Self> {
        if n_q > 40 {
            return Err(Error::parameter(
                "corrected weights are only stable up to n_q = 40",
            ));
        }
        let (nodes, weights) = gauss_legendre(n_q)?;
        let bary = crate::gauss::barycentric_weights(&nodes);
        let mut vt = DMatrix::zeros(n_q, n_q);
        for (i, &t) in nodes.iter().enumerate() {
            let mut tp = 1.0;
            for j in 0..n_q {
                vt[(j, i)] = tp;
                tp *= t;
            }
        }
        let vt_lu = vt.clone().lu();
        Ok(PanelKit {
            n_q,
            nodes,
            weights,
            bary,
            vt_lu,
            vt,
        })
    }

    /// Solve V^T x = rhs (shared by the log weights and the close-evaluation
    /// moment weights), with a residual check against ill-conditioning.
    pub fn solve_vt(&self, rhs: &[f64]) -> Result<Vec<f64>> {
        let b = DVector::from_column_slice(rhs);
        let x = self
            .vt_lu
            .solve(&b)
            .ok_or(Error::IllConditioned { residual: f64::NAN })?;
        let r = (&self.vt * &x - &b).amax();
        let scale = b.amax().max(1.0);
        if r > 1e-10 * scale {
            return Err(Error::IllConditioned { residual: r });
        }
        Ok(x.as_slice().to_vec())
    }

    /// Complex right-hand sides solved componentwise.
    pub fn solve_vt_complex(&self, rhs: &[C64]) -> Result<Vec<C64>> {
        let re: Vec<f64> = rhs.iter().map(|c| c.re).collect();
        let im: Vec<f64> = rhs.iter().map(|c| c.im).collect();
        let xr = self.solve_vt(&re)?;
        let xi = self.solve_vt(&im)?;
        Ok(xr
            .into_iter()
            .zip(xi)
            .map(|(a, b)| C64::new(a, b))
            .collect())
    }

    /// Corrected log weights for target coordinate t_z (real on-panel or in
    /// a neighbor panel, complex for off-boundary targets).
    pub fn log_weights(&self, t_z: C64) -> Result<CorrectedWeights> {
        let h = h_vector(t_z, self.n_q)?;
        let omega = self.solve_vt(&h)?;
        Ok(CorrectedWeights { t_z, omega })
    }

    /// Legendre coefficients of the interpolant through complex node values,
    /// via discrete orthogonality (exact for data of polynomial degree < n_q).
    pub fn legendre_coeffs_c(&self, f: &[C64]) -> Vec<C64> {
        let n = self.n_q;
        let mut coeff = vec![C64::new(0.0, 0.0); n];
        for (i, (&x, &w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            let p = crate::gauss::legendre_values(n, x);
            for k in 0..n {
                coeff[k] += f[i] * ((2.0 * k as f64 + 1.0) / 2.0 * w * p[k]);
            }
        }
        coeff
    }
}
