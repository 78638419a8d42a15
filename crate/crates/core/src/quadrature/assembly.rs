//! Nystrom assembly of the combined-field kernel on a panel mesh, with the
//! corrected log quadrature applied on self interactions and on the four
//! nearest nodes of each adjacent panel.

use super::PanelKit;
use crate::kernels::FOUR_PI;
use crate::{to_c, Error, Mat2, Result, Vec2, C64};
use nalgebra::DMatrix;

/// One panel of a mesh view: node range, parameter length and neighbors.
/// The shift attached to a neighbor is added to that neighbor's coordinates
/// to make the chain geometrically contiguous (periodic wrap junctions).
#[derive(Debug, Clone)]
pub struct ViewPanel {
    pub first_node: usize,
    pub param_len: f64,
    pub prev: Option<(usize, Vec2)>,
    pub next: Option<(usize, Vec2)>,
}

/// Borrowed per-node geometry of a panel mesh, shared by the global grid and
/// the local corner meshes.
pub struct MeshView<'a> {
    pub n_q: usize,
    pub gl_nodes: &'a [f64],
    pub gl_weights: &'a [f64],
    pub nodes: &'a [Vec2],
    pub normals: &'a [Vec2],
    pub tangents: &'a [Vec2],
    pub speed_t: &'a [f64],
    pub w_arc: &'a [f64],
    pub curvature: &'a [f64],
    pub panels: Vec<ViewPanel>,
}

impl<'a> MeshView<'a> {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn panel_nodes(&self, p: usize) -> std::ops::Range<usize> {
        let f = self.panels[p].first_node;
        f..f + self.n_q
    }

    pub fn panel_of(&self, node: usize) -> usize {
        // panels hold contiguous node ranges in order
        self.panels
            .iter()
            .position(|p| node >= p.first_node && node < p.first_node + self.n_q)
            .expect("node outside mesh")
    }
}

/// Free-space double-layer kernel matrix (x - y form):
/// (1/pi) (r . n) r r^T / r^4 with r = x - y; the combined operator applies
/// it with coefficient 2.
#[inline]
pub fn dlp_kernel(r: Vec2, n_src: Vec2) -> Mat2 {
    let r2 = r.norm_squared();
    let c = r.dot(&n_src) / (std::f64::consts::PI * r2 * r2);
    Mat2::new(
        c * r.x * r.x,
        c * r.x * r.y,
        c * r.x * r.y,
        c * r.y * r.y,
    )
}

/// Coincident limit of `dlp_kernel` on a smooth panel.
#[inline]
pub fn dlp_kernel_diag(tangent: Vec2, curvature: f64) -> Mat2 {
    let c = curvature / (2.0 * std::f64::consts::PI);
    Mat2::new(
        c * tangent.x * tangent.x,
        c * tangent.x * tangent.y,
        c * tangent.x * tangent.y,
        c * tangent.y * tangent.y,
    )
}

/// Plain combined-kernel block for one (target, source-node) pair:
/// [2 D + eta S](x_t, y_s) * w_arc.
#[inline]
pub fn plain_block(r: Vec2, n_src: Vec2, w_arc: f64, eta: f64, mu: f64) -> Mat2 {
    let r2 = r.norm_squared();
    let log_r = 0.5 * r2.ln();
    let g = Mat2::new(
        -log_r + r.x * r.x / r2,
        r.x * r.y / r2,
        r.x * r.y / r2,
        -log_r + r.y * r.y / r2,
    );
    (dlp_kernel(r, n_src) * 2.0 + g * (eta / (FOUR_PI * mu))) * w_arc
}

/// Real 2x2 block of the complex map q -> alpha q + beta conj(q).
#[inline]
fn complex_pair_block(alpha: C64, beta: C64) -> Mat2 {
    Mat2::new(
        alpha.re + beta.re,
        -alpha.im + beta.im,
        alpha.im + beta.im,
        alpha.re - beta.re,
    )
}

/// One corrected target row against a source panel, as 2x2 blocks per source
/// node. `t_z` is the target in the panel's local parameter; `coincident`
/// marks the source node equal to the target (self rows).
fn corrected_blocks(
    view: &MeshView,
    kit: &PanelKit,
    src_panel: usize,
    z_target: C64,
    t_z: f64,
    coincident: Option<usize>,
    eta: f64,
    mu: f64,
) -> Result<Vec<Mat2>> {
    let n_q = view.n_q;
    let omega = kit.log_weights(C64::new(t_z, 0.0))?.omega;
    let c8 = 1.0 / (8.0 * std::f64::consts::PI * mu);
    let c4 = 1.0 / (4.0 * std::f64::consts::PI * mu);
    let mut blocks = Vec::with_capacity(n_q);
    for (k, i) in view.panel_nodes(src_panel).enumerate() {
        let zi = to_c(view.nodes[i]);
        let w = view.w_arc[i];
        // single layer: constant + log + conjugate-ratio terms
        let (log_ratio, conj_ratio) = if coincident == Some(k) {
            let tc = to_c(view.tangents[i]);
            (view.speed_t[i].ln(), tc * tc)
        } else {
            let d = zi - z_target;
            (
                d.norm().ln() - (kit.nodes[k] - t_z).abs().ln(),
                d / d.conj(),
            )
        };
        let w_log = w * log_ratio + omega[k] * view.speed_t[i];
        let alpha = C64::new(c8 * w - c4 * w_log, 0.0);
        let beta = conj_ratio * (c8 * w);
        let slp = complex_pair_block(alpha, beta);
        // double layer: plain value, curvature limit on the diagonal
        let dlp = if coincident == Some(k) {
            dlp_kernel_diag(view.tangents[i], view.curvature[i]) * w
        } else {
            let r = Vec2::new(z_target.re - zi.re, z_target.im - zi.im);
            dlp_kernel(r, view.normals[i]) * w
        };
        blocks.push(dlp * 2.0 + slp * eta);
    }
    Ok(blocks)
}

/// Targets needing corrected quadrature against a given source panel:
/// all nodes of the panel itself, and the `n_corr` nearest nodes of each
/// neighbor. Yields (target node, target position adjusted for wrap shifts,
/// t_z in the source panel's parameter, coincident node index).
fn correction_targets(
    view: &MeshView,
    src: usize,
    n_corr: usize,
) -> Result<Vec<(usize, Vec2, f64, Option<usize>)>> {
    let n_q = view.n_q;
    let mut out = Vec::new();
    // self targets
    for (k, t) in view.panel_nodes(src).enumerate() {
        out.push((t, view.nodes[t], view.gl_nodes[k], Some(k)));
    }
    let len_self = view.panels[src].param_len;
    // next neighbor: its first nodes are nearest the shared junction
    if let Some((nb, shift)) = view.panels[src].next {
        if nb != src {
            let ratio = view.panels[nb].param_len / len_self;
            check_ratio(ratio)?;
            for k in 0..n_corr.min(n_q) {
                let t = view.panels[nb].first_node + k;
                let t_z = 1.0 + (view.gl_nodes[k] + 1.0) * ratio;
                out.push((t, view.nodes[t] + shift, t_z, None));
            }
        }
    }
    // previous neighbor: its last nodes are nearest
    if let Some((nb, shift)) = view.panels[src].prev {
        if nb != src {
            let ratio = view.panels[nb].param_len / len_self;
            check_ratio(ratio)?;
            for k in (n_q - n_corr.min(n_q))..n_q {
                let t = view.panels[nb].first_node + k;
                let t_z = -1.0 - (1.0 - view.gl_nodes[k]) * ratio;
                out.push((t, view.nodes[t] + shift, t_z, None));
            }
        }
    }
    Ok(out)
}

fn check_ratio(ratio: f64) -> Result<()> {
    let ok = [0.5, 1.0, 2.0]
        .iter()
        .any(|&r| (ratio - r).abs() < 1e-9 * r);
    if ok {
        Ok(())
    } else {
        Err(Error::parameter(format!(
            "adjacent panel parameter ratio {ratio} not in {{1/2, 1, 2}}"
        )))
    }
}

/// Number of target nodes corrected in each adjacent panel.
pub const N_ADJACENT_CORRECTED: usize = 4;

/// Dense free-space Nystrom matrix of the combined operator 2 D + eta S on
/// the mesh (2N x 2N, node-major interleaved components).
pub fn assemble_free_space(view: &MeshView, kit: &PanelKit, eta: f64, mu: f64) -> Result<DMatrix<f64>> {
    let n = view.n_nodes();
    let mut a = DMatrix::<f64>::zeros(2 * n, 2 * n);
    // plain entries everywhere off the diagonal; self-panel and adjacent
    // rows are overwritten by the corrected pass below
    for t in 0..n {
        let x = view.nodes[t];
        for s in 0..n {
            if s == t {
                continue;
            }
            let b = plain_block(x - view.nodes[s], view.normals[s], view.w_arc[s], eta, mu);
            write_block(&mut a, t, s, b);
        }
    }
    // corrected rows per source panel
    for src in 0..view.panels.len() {
        for (t, z_adj, t_z, coincident) in correction_targets(view, src, N_ADJACENT_CORRECTED)? {
            let blocks = corrected_blocks(view, kit, src, to_c(z_adj), t_z, coincident, eta, mu)?;
            for (k, s) in view.panel_nodes(src).enumerate() {
                write_block(&mut a, t, s, blocks[k]);
            }
        }
    }
    Ok(a)
}

/// Sparse corrections Delta = corrected - plain for the fast matrix-vector
/// path: triplets (target node, source node, 2x2 block).
pub fn free_space_corrections(
    view: &MeshView,
    kit: &PanelKit,
    eta: f64,
    mu: f64,
) -> Result<Vec<(usize, usize, Mat2)>> {
    let mut out = Vec::new();
    for src in 0..view.panels.len() {
        for (t, z_adj, t_z, coincident) in correction_targets(view, src, N_ADJACENT_CORRECTED)? {
            let blocks = corrected_blocks(view, kit, src, to_c(z_adj), t_z, coincident, eta, mu)?;
            for (k, s) in view.panel_nodes(src).enumerate() {
                let plain = if t == s {
                    // the plain path in the fast sum skips the self node
                    Mat2::zeros()
                } else {
                    plain_block(z_adj - view.nodes[s], view.normals[s], view.w_arc[s], eta, mu)
                };
                let delta = blocks[k] - plain;
                out.push((t, s, delta));
            }
        }
    }
    Ok(out)
}

#[inline]
pub fn write_block(a: &mut DMatrix<f64>, t: usize, s: usize, b: Mat2) {
    a[(2 * t, 2 * s)] = b[(0, 0)];
    a[(2 * t, 2 * s + 1)] = b[(0, 1)];
    a[(2 * t + 1, 2 * s)] = b[(1, 0)];
    a[(2 * t + 1, 2 * s + 1)] = b[(1, 1)];
}

#[inline]
pub fn add_block(a: &mut DMatrix<f64>, t: usize, s: usize, b: Mat2) {
    a[(2 * t, 2 * s)] += b[(0, 0)];
    a[(2 * t, 2 * s + 1)] += b[(0, 1)];
    a[(2 * t + 1, 2 * s)] += b[(1, 0)];
    a[(2 * t + 1, 2 * s + 1)] += b[(1, 1)];
}
