//! Nested type-b / type-c corner meshes.
//!
//! The star of a corner consists of the four coarse panels around it (two on
//! each side), spanning sigma in [-2, 2] in the star parameter where every
//! coarse panel has unit parameter length and the corner sits at sigma = 0.
//! Level ell (1..=n_sub) covers [-H, H] with H = 2^(ell + 1 - n_sub):
//! the type-c mesh has four panels with junctions H*{-1, -1/2, 0, 1/2, 1},
//! the type-b mesh six panels with junctions H*{-1, -1/2, -1/4, 0, 1/4, 1/2, 1}.
//! The level ell-1 type-c mesh coincides with the central four panels of the
//! level ell type-b mesh. All node positions are stored relative to the
//! corner so that panels of size 1e-19 remain representable.

use super::{PanelizedBoundary, rot90};
use crate::{Error, Result, Vec2};

#[derive(Debug, Clone)]
pub struct LocalPanel {
    pub first_node: usize,
    pub sigma0: f64,
    pub sigma1: f64,
}

impl LocalPanel {
    pub fn param_len(&self) -> f64 {
        self.sigma1 - self.sigma0
    }
}

/// A small panel mesh in the corner-centered frame.
#[derive(Debug, Clone)]
pub struct LocalMesh {
    pub n_q: usize,
    pub panels: Vec<LocalPanel>,
    /// node positions relative to the corner
    pub nodes_rel: Vec<Vec2>,
    pub normals: Vec<Vec2>,
    pub tangents: Vec<Vec2>,
    /// |d gamma / dt|, t the panel-local coordinate in [-1, 1]
    pub speed_t: Vec<f64>,
    /// arclength weights (gl weight * speed_t)
    pub w_arc: Vec<f64>,
    pub curvature: Vec<f64>,
}

impl LocalMesh {
    pub fn n_nodes(&self) -> usize {
        self.nodes_rel.len()
    }

    pub fn panel_nodes(&self, p: usize) -> std::ops::Range<usize> {
        let f = self.panels[p].first_node;
        f..f + self.n_q
    }

    /// Borrowed view in the corner-centered frame (open chain of panels).
    pub fn as_view<'a>(&'a self, gl_nodes: &'a [f64], gl_weights: &'a [f64]) -> crate::quadrature::MeshView<'a> {
        let n = self.panels.len();
        let panels = self
            .panels
            .iter()
            .enumerate()
            .map(|(k, p)| crate::quadrature::ViewPanel {
                first_node: p.first_node,
                param_len: p.param_len(),
                prev: if k > 0 {
                    Some((k - 1, crate::Vec2::zeros()))
                } else {
                    None
                },
                next: if k + 1 < n {
                    Some((k + 1, crate::Vec2::zeros()))
                } else {
                    None
                },
            })
            .collect();
        crate::quadrature::MeshView {
            n_q: self.n_q,
            gl_nodes,
            gl_weights,
            nodes: &self.nodes_rel,
            normals: &self.normals,
            tangents: &self.tangents,
            speed_t: &self.speed_t,
            w_arc: &self.w_arc,
            curvature: &self.curvature,
            panels,
        }
    }
}

#[derive(Debug, Clone)]
pub struct LevelMeshes {
    pub b: LocalMesh,
    pub c: LocalMesh,
}

#[derive(Debug, Clone)]
pub struct CornerMeshHierarchy {
    pub corner_id: usize,
    pub corner_pos: Vec2,
    pub n_sub: usize,
    /// levels[ell-1] holds level ell; level n_sub spans the whole star
    pub levels: Vec<LevelMeshes>,
    /// coarse panels [A2, A1, B1, B2] along the curve; the corner sits
    /// between A1 and B1
    pub star_panels: [usize; 4],
}

struct StarChart<'a> {
    boundary: &'a PanelizedBoundary,
    star: [usize; 4],
    /// position offsets making the four panels contiguous across periodic
    /// wrap junctions, relative to the corner frame
    offsets: [Vec2; 4],
    corner_raw: Vec2,
}

impl<'a> StarChart<'a> {
    /// Geometry at star parameter sigma in [-2, 2].
    fn eval(&self, sigma: f64) -> (Vec2, Vec2, Vec2, f64, f64) {
        let (idx, frac) = if sigma < -1.0 {
            (0, sigma + 2.0)
        } else if sigma < 0.0 {
            (1, sigma + 1.0)
        } else if sigma <= 1.0 {
            (2, sigma)
        } else {
            (3, sigma - 1.0)
        };
        let p = &self.boundary.panels[self.star[idx]];
        let seg = &self.boundary.spec.components[p.component].segments[p.segment];
        let du = p.u1 - p.u0;
        let u = p.u0 + frac * du;
        let d1 = seg.d1(u);
        let d2 = seg.d2(u);
        let speed_u = d1.norm();
        let tangent = d1 / speed_u;
        let normal = rot90(tangent);
        let curv = (d1.x * d2.y - d1.y * d2.x) / (speed_u * speed_u * speed_u);
        // relative position: cancellation-free on the two inner panels where
        // the evaluation point approaches the corner
        let rel = match idx {
            1 => seg.point_rel(u, p.u1),
            2 => seg.point_rel(u, p.u0),
            _ => seg.point(u) + self.offsets[idx] - self.corner_raw,
        };
        // speed wrt sigma: each coarse panel spans one sigma unit
        (rel, tangent, normal, speed_u * du, curv)
    }

    fn build_mesh(&self, junctions: &[f64]) -> LocalMesh {
        let b = self.boundary;
        let n_q = b.n_q;
        let mut mesh = LocalMesh {
            n_q,
            panels: Vec::new(),
            nodes_rel: Vec::new(),
            normals: Vec::new(),
            tangents: Vec::new(),
            speed_t: Vec::new(),
            w_arc: Vec::new(),
            curvature: Vec::new(),
        };
        for w in junctions.windows(2) {
            let (s0, s1) = (w[0], w[1]);
            let first_node = mesh.nodes_rel.len();
            let half = (s1 - s0) / 2.0;
            let mid = (s0 + s1) / 2.0;
            for (i, &t) in b.gl_nodes.iter().enumerate() {
                let sigma = mid + t * half;
                let (rel, tang, norm, speed_sigma, curv) = self.eval(sigma);
                let speed_t = speed_sigma * half;
                mesh.nodes_rel.push(rel);
                mesh.tangents.push(tang);
                mesh.normals.push(norm);
                mesh.speed_t.push(speed_t);
                mesh.w_arc.push(b.gl_weights[i] * speed_t);
                mesh.curvature.push(curv);
            }
            mesh.panels.push(LocalPanel {
                first_node,
                sigma0: s0,
                sigma1: s1,
            });
        }
        mesh
    }
}

/// Build the nested corner meshes for `corner_id` with `n_sub` dyadic levels.
pub fn build_corner_hierarchy(
    boundary: &PanelizedBoundary,
    corner_id: usize,
    n_sub: usize,
) -> Result<CornerMeshHierarchy> {
    if corner_id >= boundary.corners.len() {
        return Err(Error::parameter(format!(
            "corner_id {corner_id} out of range ({} corners)",
            boundary.corners.len()
        )));
    }
    if n_sub == 0 {
        return Err(Error::parameter("build_corner_hierarchy: n_sub must be >= 1"));
    }
    let corner = &boundary.corners[corner_id];
    let a1 = corner.panel_before;
    let b1 = corner.panel_after;
    let a2 = boundary.panels[a1].prev;
    let b2 = boundary.panels[b1].next;
    let star = [a2, a1, b1, b2];
    // the star must be four distinct panels with no other corner inside
    let distinct = star
        .iter()
        .all(|&p| star.iter().filter(|&&q| q == p).count() == 1);
    if !distinct {
        return Err(Error::geometry(
            "corner star needs at least four distinct panels around the corner",
        ));
    }
    for other in boundary.corners.iter() {
        let inner_junctions = [(a2, a1), (b1, b2)];
        for (before, after) in inner_junctions {
            if other.panel_before == before && other.panel_after == after {
                return Err(Error::geometry(
                    "two corners are closer than two panels apart",
                ));
            }
        }
    }

    // contiguity offsets across possibly wrapped junctions
    let pan = |i: usize| &boundary.panels[i];
    let off_a1 = Vec2::zeros();
    let off_a2 = off_a1 - pan(a2).shift_next;
    let off_b1 = off_a1 + pan(a1).shift_next;
    let off_b2 = off_b1 + pan(b1).shift_next;
    let chart = StarChart {
        boundary,
        star,
        offsets: [off_a2, off_a1, off_b1, off_b2],
        corner_raw: pan(a1).end,
    };

    let mut levels = Vec::with_capacity(n_sub);
    for ell in 1..=n_sub {
        let h = 2.0f64.powi(ell as i32 + 1 - n_sub as i32);
        let jb: Vec<f64> = [-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0]
            .iter()
            .map(|s| s * h)
            .collect();
        let jc: Vec<f64> = [-1.0, -0.5, 0.0, 0.5, 1.0].iter().map(|s| s * h).collect();
        levels.push(LevelMeshes {
            b: chart.build_mesh(&jb),
            c: chart.build_mesh(&jc),
        });
    }

    Ok(CornerMeshHierarchy {
        corner_id,
        corner_pos: corner.position,
        n_sub,
        levels,
        star_panels: star,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_panels, teardrop};
    use approx::assert_abs_diff_eq;

    fn hierarchy(n_sub: usize) -> CornerMeshHierarchy {
        let spec = teardrop(1.3, 1.0);
        let b = build_panels(&spec, &[vec![12]], 16).unwrap();
        build_corner_hierarchy(&b, 0, n_sub).unwrap()
    }

    #[test]
    fn top_level_c_mesh_matches_coarse_star() {
        let spec = teardrop(1.3, 1.0);
        let b = build_panels(&spec, &[vec![12]], 16).unwrap();
        let h = build_corner_hierarchy(&b, 0, 5).unwrap();
        let top = &h.levels[4].c;
        assert_eq!(top.panels.len(), 4);
        // type-c junctions at {-2,-1,0,1,2}: exactly the coarse star panels
        let expect = [-2.0, -1.0, 0.0, 1.0, 2.0];
        for (p, w) in top.panels.iter().zip(expect.windows(2)) {
            assert_abs_diff_eq!(p.sigma0, w[0]);
            assert_abs_diff_eq!(p.sigma1, w[1]);
        }
        // node positions agree with the coarse panels relative to the corner
        let corner = h.corner_pos;
        for (k, &gp) in h.star_panels.iter().enumerate() {
            for (i, gi) in b.panel_nodes(gp).enumerate() {
                let rel = top.nodes_rel[k * 16 + i];
                let expect = b.nodes[gi] - corner;
                assert!((rel - expect).norm() < 1e-13);
                assert_abs_diff_eq!(
                    top.w_arc[k * 16 + i],
                    b.w_arc[gi],
                    epsilon = 1e-14
                );
            }
        }
    }

    #[test]
    fn nesting_between_levels() {
        let h = hierarchy(6);
        for ell in 1..6 {
            let lower_c = &h.levels[ell - 1].c;
            let upper_b = &h.levels[ell].b;
            // junctions of level ell-1 type-c in the level-ell normalized
            // parameter sit at {-0.5, -0.25, 0, 0.25, 0.5}
            let h_upper = 2.0f64.powi(ell as i32 + 2 - 6);
            let normalized: Vec<f64> = lower_c
                .panels
                .iter()
                .map(|p| p.sigma0 / h_upper)
                .chain(std::iter::once(lower_c.panels[3].sigma1 / h_upper))
                .collect();
            let expect = [-0.5, -0.25, 0.0, 0.25, 0.5];
            for (a, b) in normalized.iter().zip(expect) {
                assert_abs_diff_eq!(*a, b, epsilon = 1e-14);
            }
            // the central four b panels coincide with the lower c panels
            for k in 0..4 {
                let pb = &upper_b.panels[k + 1];
                let pc = &lower_c.panels[k];
                assert_abs_diff_eq!(pb.sigma0, pc.sigma0, epsilon = 1e-15);
                assert_abs_diff_eq!(pb.sigma1, pc.sigma1, epsilon = 1e-15);
                // same geometry on shared panels
                for i in 0..16 {
                    let d = (upper_b.nodes_rel[(k + 1) * 16 + i] - lower_c.nodes_rel[k * 16 + i])
                        .norm();
                    assert!(d < 1e-15_f64.max(1e-13 * lower_c.nodes_rel[k * 16 + i].norm()));
                }
            }
        }
    }

    #[test]
    fn deep_hierarchy_stays_finite() {
        let h = hierarchy(60);
        let inner = &h.levels[0].b;
        // innermost panels have parameter length 2^-60 of a coarse panel
        let min_len = inner
            .panels
            .iter()
            .map(|p| p.param_len())
            .fold(f64::INFINITY, f64::min);
        assert_abs_diff_eq!(min_len, 2.0f64.powi(-60), epsilon = 1e-25);
        for x in &inner.nodes_rel {
            assert!(x.x.is_finite() && x.y.is_finite());
        }
        // nodes nearest the corner are at distances of order 2^-60 but not 0
        let d_min = inner
            .nodes_rel
            .iter()
            .map(|x| x.norm())
            .fold(f64::INFINITY, f64::min);
        assert!(d_min > 0.0 && d_min < 1e-17);
    }

    #[test]
    fn level_one_subdivides_inner_panels() {
        let h = hierarchy(1);
        assert_eq!(h.levels.len(), 1);
        let b = &h.levels[0].b;
        // six panels: whole outer coarse panels plus halves of the inner two
        let lens: Vec<f64> = b.panels.iter().map(|p| p.param_len()).collect();
        let expect = [1.0, 0.5, 0.5, 0.5, 0.5, 1.0];
        for (a, e) in lens.iter().zip(expect) {
            assert_abs_diff_eq!(*a, e, epsilon = 1e-14);
        }
    }

    #[test]
    fn invalid_corner_rejected() {
        let spec = teardrop(1.3, 1.0);
        let b = build_panels(&spec, &[vec![12]], 16).unwrap();
        assert!(build_corner_hierarchy(&b, 5, 3).is_err());
        assert!(build_corner_hierarchy(&b, 0, 0).is_err());
    }
}
