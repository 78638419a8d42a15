//! Near-singular evaluation of layer potentials at targets close to (but off)
//! a panel. The density and geometry are expanded in the panel parameter,
//! the target's complex parameter preimage is found by Newton iteration on
//! the interpolated panel map, and the singular factors are integrated with
//! the analytic log / Cauchy / Hadamard moment recursions.

use super::{cauchy_moments, h_vector, hadamard_moments, MeshView, PanelKit};
use crate::kernels::FOUR_PI;
use crate::{to_c, Error, Result, C64};

/// Evaluate a Legendre series with complex coefficients at complex t, and
/// its derivative. Stable off the real axis for resolved panels (the
/// coefficient decay beats the |t + sqrt(t^2-1)|^k growth).
fn legendre_series_c(c: &[C64], t: C64) -> (C64, C64) {
    let n = c.len();
    let mut p0 = C64::new(1.0, 0.0);
    let mut p1 = t;
    let mut d0 = C64::new(0.0, 0.0);
    let mut d1 = C64::new(1.0, 0.0);
    let mut v = c[0] * p0;
    let mut dv = c[0] * d0;
    if n > 1 {
        v += c[1] * p1;
        dv += c[1] * d1;
    }
    for k in 2..n {
        let kf = k as f64;
        let p2 = (t * p1 * (2.0 * kf - 1.0) - p0 * (kf - 1.0)) / kf;
        let d2 = d0 + p1 * (2.0 * kf - 1.0);
        v += c[k] * p2;
        dv += c[k] * d2;
        p0 = p1;
        p1 = p2;
        d0 = d1;
        d1 = d2;
    }
    (v, dv)
}

/// Parameter preimage t_* of the target z under the panel map, from Newton
/// iteration on the degree n_q - 1 Legendre expansion of the panel
/// positions.
pub fn panel_preimage(view: &MeshView, kit: &PanelKit, p: usize, z: C64) -> Result<C64> {
    let rng = view.panel_nodes(p);
    let zs: Vec<C64> = rng.clone().map(|i| to_c(view.nodes[i])).collect();
    let coeff = kit.legendre_coeffs_c(&zs);
    // initial guess: affine chord coordinate
    let (za, _) = legendre_series_c(&coeff, C64::new(-1.0, 0.0));
    let (zb, _) = legendre_series_c(&coeff, C64::new(1.0, 0.0));
    let mut t = (z * 2.0 - za - zb) / (zb - za);
    let scale = (zb - za).norm();
    for _ in 0..60 {
        let (v, d) = legendre_series_c(&coeff, t);
        let f = v - z;
        if f.norm() < 1e-14 * scale {
            return Ok(t);
        }
        t -= f / d;
        if t.norm() > 6.0 {
            return Err(Error::Singular(
                "panel preimage iteration diverged (target too far)".into(),
            ));
        }
    }
    let (v, _) = legendre_series_c(&coeff, t);
    if (v - z).norm() < 1e-12 * scale {
        Ok(t)
    } else {
        Err(Error::Singular("panel preimage iteration stalled".into()))
    }
}

/// Single-layer contribution of panel `p` with complex density values `q`
/// (at the panel nodes) evaluated at the off-boundary target z, with the
/// log and conjugate-ratio parts integrated analytically.
pub fn close_slp(
    view: &MeshView,
    kit: &PanelKit,
    p: usize,
    q: &[C64],
    z: C64,
    mu: f64,
) -> Result<C64> {
    let t_star = panel_preimage(view, kit, p, z)?;
    let n_q = view.n_q;
    assert_eq!(q.len(), n_q);
    let c8 = 1.0 / (8.0 * std::f64::consts::PI * mu);
    let c4 = 1.0 / (4.0 * std::f64::consts::PI * mu);

    // log part: smooth ratio by plain quadrature + moment part
    let h = h_vector(t_star, n_q)?;
    let omega = kit.solve_vt(&h)?;
    let mut log_part = 0.0_f64 * C64::new(0.0, 0.0);
    let mut const_part = C64::new(0.0, 0.0);
    for (k, i) in view.panel_nodes(p).enumerate() {
        let zi = to_c(view.nodes[i]);
        let d = zi - z;
        let smooth = (d / (C64::new(kit.nodes[k], 0.0) - t_star)).norm().ln();
        log_part += q[k] * (view.w_arc[i] * smooth + omega[k] * view.speed_t[i]);
        const_part += q[k] * view.w_arc[i];
    }

    // conjugate part: int conj(q) (tau - z) / conj(tau - z) |tau'| dt,
    // with the conjugated interpolant vanishing at conj(t_*)
    let t_conj = t_star.conj();
    let pmom = cauchy_moments(t_conj, n_q);
    let rho = kit.solve_vt_complex(&pmom)?;
    let mut conj_part = C64::new(0.0, 0.0);
    for (k, i) in view.panel_nodes(p).enumerate() {
        let zi = to_c(view.nodes[i]);
        let d = zi - z;
        let f = q[k].conj() * d * view.speed_t[i] * (C64::new(kit.nodes[k], 0.0) - t_conj)
            / d.conj();
        conj_part += f * rho[k];
    }

    Ok(const_part * c8 - log_part * c4 + conj_part * c8)
}

/// Double-layer contribution of panel `p` at an off-boundary target, via the
/// complex Cauchy/Hadamard split
/// D[q](z) = (1/4 pi) int [ q n / (z - tau) + 2 Re(n conj(q)) / conj(z - tau)
///   + conj(q) conj(n) (z - tau) / conj(z - tau)^2 ] ds.
pub fn close_dlp(view: &MeshView, kit: &PanelKit, p: usize, q: &[C64], z: C64) -> Result<C64> {
    let t_star = panel_preimage(view, kit, p, z)?;
    let n_q = view.n_q;
    assert_eq!(q.len(), n_q);
    let t_conj = t_star.conj();

    let p1 = cauchy_moments(t_star, n_q);
    let p2 = cauchy_moments(t_conj, n_q);
    let p3 = hadamard_moments(t_conj, n_q);
    let rho1 = kit.solve_vt_complex(&p1)?;
    let rho2 = kit.solve_vt_complex(&p2)?;
    let rho3 = kit.solve_vt_complex(&p3)?;

    let mut a1 = C64::new(0.0, 0.0);
    let mut a2 = C64::new(0.0, 0.0);
    let mut a3 = C64::new(0.0, 0.0);
    for (k, i) in view.panel_nodes(p).enumerate() {
        let zi = to_c(view.nodes[i]);
        let nc = to_c(view.normals[i]);
        let sp = view.speed_t[i];
        let tk = C64::new(kit.nodes[k], 0.0);
        let d = z - zi; // z - tau
        let f1 = q[k] * nc * sp * (tk - t_star) / d;
        a1 += f1 * rho1[k];
        let re_nq = (nc * q[k].conj()).re;
        let f2 = C64::new(2.0 * re_nq * sp, 0.0) * (tk - t_conj) / d.conj();
        a2 += f2 * rho2[k];
        let dc = d.conj();
        let f3 = q[k].conj() * nc.conj() * d * sp * (tk - t_conj) * (tk - t_conj) / (dc * dc);
        a3 += f3 * rho3[k];
    }
    Ok((a1 + a2 + a3) / FOUR_PI)
}

/// Plain Gauss-Legendre single layer of one panel at z (complex density).
pub fn plain_slp(view: &MeshView, p: usize, q: &[C64], z: C64, mu: f64) -> C64 {
    let c8 = 1.0 / (8.0 * std::f64::consts::PI * mu);
    let c4 = 1.0 / (4.0 * std::f64::consts::PI * mu);
    let mut u = C64::new(0.0, 0.0);
    for (k, i) in view.panel_nodes(p).enumerate() {
        let d = to_c(view.nodes[i]) - z;
        let w = view.w_arc[i];
        u += q[k] * (c8 * w) - q[k] * (c4 * w * d.norm().ln())
            + q[k].conj() * (d / d.conj()) * (c8 * w);
    }
    u
}

/// Plain Gauss-Legendre double layer of one panel at z (complex density).
pub fn plain_dlp(view: &MeshView, p: usize, q: &[C64], z: C64) -> C64 {
    let mut u = C64::new(0.0, 0.0);
    for (k, i) in view.panel_nodes(p).enumerate() {
        let d = z - to_c(view.nodes[i]);
        let nc = to_c(view.normals[i]);
        let w = view.w_arc[i];
        let re_nq = (nc * q[k].conj()).re;
        u += (q[k] * nc / d + C64::new(2.0 * re_nq, 0.0) / d.conj()
            + q[k].conj() * nc.conj() * d / (d.conj() * d.conj()))
            * (w / FOUR_PI);
    }
    u
}
