//! Channel walls and drop interfaces as parameterized closed curves,
//! composite Gauss-Legendre panel discretizations with corners at panel
//! junctions, and the nested corner mesh hierarchies used by the corner
//! compression.

mod generators;
mod hierarchy;
mod segment;

pub use generators::*;
pub use hierarchy::{build_corner_hierarchy, CornerMeshHierarchy, LevelMeshes, LocalMesh};
pub use segment::Segment;

use crate::gauss::gauss_legendre;
use crate::{to_c, Error, Result, Vec2, C64};

/// How a component of the boundary closes on itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Closure {
    /// Ordinary closed loop: end equals start.
    Loop,
    /// Channel wall spanning one period: end equals start + (L, 0) on the
    /// periodic torus. The stored value is the signed x-shift from start to
    /// end (negative when the wall is traversed in -x).
    PeriodicX(f64),
}

/// One closed curve: an ordered list of parametric segments.
#[derive(Debug, Clone)]
pub struct Component {
    pub segments: Vec<Segment>,
    pub closure: Closure,
}

/// A full boundary description: one or more closed curves.
#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub components: Vec<Component>,
}

/// Rotate a vector by +90 degrees. Normals are `rot90(tangent)`, so curves
/// are traversed with the fluid on the left.
#[inline]
pub fn rot90(v: Vec2) -> Vec2 {
    Vec2::new(-v.y, v.x)
}

#[derive(Debug, Clone)]
pub struct Panel {
    pub component: usize,
    /// segment index within the component
    pub segment: usize,
    /// segment-parameter range covered by this panel
    pub u0: f64,
    pub u1: f64,
    /// length in the global panel parameter (1.0 for coarse panels; halved
    /// by dyadic refinement)
    pub param_len: f64,
    pub first_node: usize,
    pub start: Vec2,
    pub end: Vec2,
    pub prev: usize,
    pub next: usize,
    /// shift to add to the next panel's coordinates so the chain is
    /// geometrically contiguous (nonzero only across the periodic wrap)
    pub shift_next: Vec2,
}

#[derive(Debug, Clone)]
pub struct Corner {
    pub position: Vec2,
    pub component: usize,
    /// panel ending at this corner
    pub panel_before: usize,
    /// panel starting at this corner
    pub panel_after: usize,
    /// interior angle on the fluid side, in (0, 2 pi)
    pub angle: f64,
}

#[derive(Debug, Clone)]
pub struct ComponentInfo {
    pub closure: Closure,
    pub first_panel: usize,
    pub n_panels: usize,
    pub first_node: usize,
    pub n_nodes: usize,
    /// true if a Loop traversed counterclockwise (fluid inside)
    pub ccw: bool,
}

/// A closed curve discretized into composite Gauss-Legendre panels.
#[derive(Debug, Clone)]
pub struct PanelizedBoundary {
    pub spec: CurveSpec,
    pub n_q: usize,
    pub gl_nodes: Vec<f64>,
    pub gl_weights: Vec<f64>,
    pub panels: Vec<Panel>,
    pub components: Vec<ComponentInfo>,
    pub corners: Vec<Corner>,
    /// node positions
    pub nodes: Vec<Vec2>,
    /// node positions as complex numbers x1 + i x2
    pub z: Vec<C64>,
    /// unit inward (into-fluid) normals
    pub normals: Vec<Vec2>,
    /// unit tangents
    pub tangents: Vec<Vec2>,
    /// |d gamma / dt| with t the panel-local coordinate in [-1, 1]
    pub speed_t: Vec<f64>,
    /// arclength quadrature weight: gl weight * speed_t
    pub w_arc: Vec<f64>,
    /// signed curvature (positive when the curve bends toward the normal)
    pub curvature: Vec<f64>,
    pub panel_of_node: Vec<usize>,
}

/// Standard Gauss-Legendre rule on [-1, 1]; re-exported entry point.
pub fn gauss_legendre_rule(n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    gauss_legendre(n)
}

struct PanelPlan {
    segment: usize,
    u0: f64,
    u1: f64,
    param_len: f64,
}

impl PanelizedBoundary {
    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_panels(&self) -> usize {
        self.panels.len()
    }

    pub fn panel_nodes(&self, p: usize) -> std::ops::Range<usize> {
        let f = self.panels[p].first_node;
        f..f + self.n_q
    }

    pub fn total_arclength(&self) -> f64 {
        self.w_arc.iter().sum()
    }

    /// Junction between panel `p` and its successor: is it a corner?
    pub fn corner_after(&self, p: usize) -> Option<usize> {
        self.corners.iter().position(|c| c.panel_before == p)
    }

    /// Geometric length of a panel (sum of its arclength weights).
    pub fn panel_arclength(&self, p: usize) -> f64 {
        self.panel_nodes(p).map(|i| self.w_arc[i]).sum()
    }

    /// Representative point and radius for near-field tests.
    pub fn panel_bounding(&self, p: usize) -> (Vec2, f64) {
        let pan = &self.panels[p];
        let mid = (pan.start + pan.end) * 0.5;
        let mut r: f64 = (pan.start - mid).norm().max((pan.end - mid).norm());
        for i in self.panel_nodes(p) {
            r = r.max((self.nodes[i] - mid).norm());
        }
        (mid, r)
    }

    /// True if the point lies on the fluid side of every component.
    /// For channel walls this is the channel interior; for loops the side
    /// the normals point to.
    pub fn fluid_contains(&self, p: Vec2) -> bool {
        for (ci, comp) in self.components.iter().enumerate() {
            let poly = self.component_polyline(ci);
            match comp.closure {
                Closure::Loop => {
                    let inside = point_in_polygon(&poly, p);
                    if inside != comp.ccw {
                        return false;
                    }
                }
                Closure::PeriodicX(shift) => {
                    let l = shift.abs();
                    // count upward-ray crossings over one period window
                    let crossings = periodic_graph_crossings(&poly, p, l);
                    let below = crossings % 2 == 1;
                    // fluid side: where the normals point
                    let range = comp.first_node..comp.first_node + comp.n_nodes;
                    let mean_ny: f64 =
                        self.normals[range].iter().map(|n| n.y).sum::<f64>();
                    let fluid_below = mean_ny < 0.0;
                    if below != fluid_below {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Distance from a point to the nearest panel node/endpoint, and the
    /// panel that realizes it.
    pub fn nearest_panel(&self, p: Vec2) -> (usize, f64) {
        let mut best = (0usize, f64::INFINITY);
        for pi in 0..self.panels.len() {
            let pan = &self.panels[pi];
            let mut d = (pan.start - p).norm().min((pan.end - p).norm());
            for i in self.panel_nodes(pi) {
                d = d.min((self.nodes[i] - p).norm());
            }
            if d < best.1 {
                best = (pi, d);
            }
        }
        best
    }

    /// Borrowed view consumed by the quadrature assembly.
    pub fn as_view(&self) -> crate::quadrature::MeshView<'_> {
        let panels = self
            .panels
            .iter()
            .map(|p| crate::quadrature::ViewPanel {
                first_node: p.first_node,
                param_len: p.param_len,
                prev: Some((p.prev, -self.panels[p.prev].shift_next)),
                next: Some((p.next, p.shift_next)),
            })
            .collect();
        crate::quadrature::MeshView {
            n_q: self.n_q,
            gl_nodes: &self.gl_nodes,
            gl_weights: &self.gl_weights,
            nodes: &self.nodes,
            normals: &self.normals,
            tangents: &self.tangents,
            speed_t: &self.speed_t,
            w_arc: &self.w_arc,
            curvature: &self.curvature,
            panels,
        }
    }

    fn component_polyline(&self, ci: usize) -> Vec<Vec2> {
        let comp = &self.components[ci];
        let mut poly = Vec::new();
        for p in comp.first_panel..comp.first_panel + comp.n_panels {
            poly.push(self.panels[p].start);
            for i in self.panel_nodes(p) {
                poly.push(self.nodes[i]);
            }
        }
        poly
    }
}

fn point_in_polygon(poly: &[Vec2], p: Vec2) -> bool {
    let mut inside = false;
    let n = poly.len();
    let mut j = n - 1;
    for i in 0..n {
        let (a, b) = (poly[i], poly[j]);
        if (a.y > p.y) != (b.y > p.y) {
            let x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if p.x < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}

/// Crossings of the upward vertical ray from `p` with the periodically
/// extended open polyline (period `l` in x).
fn periodic_graph_crossings(poly: &[Vec2], p: Vec2, l: f64) -> usize {
    let mut count = 0;
    for shift in [-l, 0.0, l] {
        for w in poly.windows(2) {
            let a = Vec2::new(w[0].x + shift, w[0].y);
            let b = Vec2::new(w[1].x + shift, w[1].y);
            if (a.x > p.x) != (b.x > p.x) {
                let y_cross = a.y + (p.x - a.x) / (b.x - a.x) * (b.y - a.y);
                if y_cross > p.y {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Discretize a curve into composite Gauss-Legendre panels with `n_pan`
/// panels per segment (one entry per segment per component) and `n_q` nodes
/// per panel. Corners are detected at segment junctions.
pub fn build_panels(
    spec: &CurveSpec,
    n_pan: &[Vec<usize>],
    n_q: usize,
) -> Result<PanelizedBoundary> {
    if n_pan.len() != spec.components.len() {
        return Err(Error::parameter(
            "build_panels: one panel-count list per component required",
        ));
    }
    let mut plans = Vec::with_capacity(spec.components.len());
    for (comp, counts) in spec.components.iter().zip(n_pan) {
        if counts.len() != comp.segments.len() {
            return Err(Error::parameter(
                "build_panels: one panel count per segment required",
            ));
        }
        let mut plan = Vec::new();
        for (si, &np) in counts.iter().enumerate() {
            if np == 0 {
                return Err(Error::parameter("build_panels: n_pan must be >= 1"));
            }
            for k in 0..np {
                plan.push(PanelPlan {
                    segment: si,
                    u0: k as f64 / np as f64,
                    u1: (k + 1) as f64 / np as f64,
                    param_len: 1.0,
                });
            }
        }
        plans.push(plan);
    }
    assemble(spec.clone(), plans, n_q)
}

/// Convenience: same panel count on every segment of every component.
pub fn build_panels_uniform(
    spec: &CurveSpec,
    n_pan_per_segment: usize,
    n_q: usize,
) -> Result<PanelizedBoundary> {
    let counts: Vec<Vec<usize>> = spec
        .components
        .iter()
        .map(|c| vec![n_pan_per_segment; c.segments.len()])
        .collect();
    build_panels(spec, &counts, n_q)
}

/// Dyadically refine the two panels adjacent to each corner `n_sub` times.
/// Each subdivision halves the panel nearest the corner on each side, adding
/// two panels per corner. Serves as the brute-force reference against the
/// corner compression.
pub fn refine_star_locally(boundary: &PanelizedBoundary, n_sub: usize) -> Result<PanelizedBoundary> {
    if n_sub == 0 {
        return Ok(boundary.clone());
    }
    // Recover per-component plans, replacing corner-adjacent panels by their
    // dyadic split toward the corner.
    let mut plans = Vec::new();
    for (ci, comp) in boundary.components.iter().enumerate() {
        let mut plan = Vec::new();
        for p in comp.first_panel..comp.first_panel + comp.n_panels {
            let pan = &boundary.panels[p];
            let ends_at_corner = boundary.corners.iter().any(|c| c.panel_before == p);
            let starts_at_corner = boundary.corners.iter().any(|c| c.panel_after == p);
            if ends_at_corner && starts_at_corner {
                return Err(Error::geometry(
                    "refine_star_locally: a panel cannot touch two corners",
                ));
            }
            if ends_at_corner {
                // split toward u1: far half first
                let mut u0 = pan.u0;
                let mut len = pan.param_len;
                let mut du = pan.u1 - pan.u0;
                for _ in 0..n_sub {
                    plan.push(PanelPlan {
                        segment: pan.segment,
                        u0,
                        u1: u0 + du / 2.0,
                        param_len: len / 2.0,
                    });
                    u0 += du / 2.0;
                    du /= 2.0;
                    len /= 2.0;
                }
                plan.push(PanelPlan {
                    segment: pan.segment,
                    u0,
                    u1: pan.u1,
                    param_len: len,
                });
            } else if starts_at_corner {
                // split toward u0: innermost panel first
                let n_new = n_sub + 1;
                let mut pieces = Vec::with_capacity(n_new);
                let mut u1 = pan.u1;
                let mut len = pan.param_len;
                let mut du = pan.u1 - pan.u0;
                for _ in 0..n_sub {
                    pieces.push(PanelPlan {
                        segment: pan.segment,
                        u0: pan.u0 + (u1 - pan.u0) / 2.0 - (u1 - pan.u0) / 2.0,
                        u1,
                        param_len: len / 2.0,
                    });
                    // shrink toward u0
                    u1 = pan.u0 + (u1 - pan.u0) / 2.0;
                    du /= 2.0;
                    len /= 2.0;
                }
                let _ = du;
                // pieces currently store [far .. ] from the corner outward in
                // reverse; rebuild explicitly instead for clarity.
                pieces.clear();
                let mut bounds = vec![pan.u0];
                let mut frac = 1.0;
                for _ in 0..n_sub {
                    frac /= 2.0;
                    bounds.push(pan.u0 + (pan.u1 - pan.u0) * frac);
                }
                bounds.push(pan.u1);
                // bounds: u0, u0 + du/2^n, ..., u0 + du/2, u1 (increasing after sort)
                bounds.sort_by(|a, b| a.partial_cmp(b).unwrap());
                for w in bounds.windows(2) {
                    pieces.push(PanelPlan {
                        segment: pan.segment,
                        u0: w[0],
                        u1: w[1],
                        param_len: pan.param_len * (w[1] - w[0]) / (pan.u1 - pan.u0),
                    });
                }
                plan.extend(pieces);
            } else {
                plan.push(PanelPlan {
                    segment: pan.segment,
                    u0: pan.u0,
                    u1: pan.u1,
                    param_len: pan.param_len,
                });
            }
        }
        let _ = ci;
        plans.push(plan);
    }
    assemble(boundary.spec.clone(), plans, boundary.n_q)
}

fn assemble(spec: CurveSpec, plans: Vec<Vec<PanelPlan>>, n_q: usize) -> Result<PanelizedBoundary> {
    let (gl_nodes, gl_weights) = gauss_legendre(n_q)?;

    let mut panels = Vec::new();
    let mut components = Vec::new();
    let mut corners = Vec::new();
    let mut nodes = Vec::new();
    let mut normals = Vec::new();
    let mut tangents = Vec::new();
    let mut speed_t = Vec::new();
    let mut w_arc = Vec::new();
    let mut curvature = Vec::new();
    let mut panel_of_node = Vec::new();

    for (ci, comp) in spec.components.iter().enumerate() {
        let plan = &plans[ci];
        let first_panel = panels.len();
        let first_node = nodes.len();

        // closure check
        let last_seg = comp.segments.len() - 1;
        let end = comp.segments[last_seg].point(1.0);
        let start = comp.segments[0].point(0.0);
        let expected_gap = match comp.closure {
            Closure::Loop => Vec2::zeros(),
            Closure::PeriodicX(shift) => Vec2::new(shift, 0.0),
        };
        let scale = comp
            .segments
            .iter()
            .map(|s| s.d1(0.5).norm())
            .fold(0.0f64, f64::max)
            .max(1e-30);
        if ((end - start) - expected_gap).norm() > 1e-13 * scale.max((end - start).norm()) {
            return Err(Error::geometry(format!(
                "component {ci} is not closed: gap {:?}",
                (end - start) - expected_gap
            )));
        }
        for (si, seg) in comp.segments.iter().enumerate() {
            for t in [0.0, 0.37, 0.5, 0.81, 1.0] {
                if seg.d1(t).norm() < 1e-12 * scale {
                    return Err(Error::geometry(format!(
                        "segment {si} of component {ci} has (near) zero speed at t={t}"
                    )));
                }
            }
        }

        for (k, pp) in plan.iter().enumerate() {
            let seg = &comp.segments[pp.segment];
            let first = nodes.len();
            let du = pp.u1 - pp.u0;
            for (i, &t) in gl_nodes.iter().enumerate() {
                let u = pp.u0 + (t + 1.0) / 2.0 * du;
                let x = seg.point(u);
                let d1 = seg.d1(u);
                let d2 = seg.d2(u);
                let sp_u = d1.norm();
                let tang = d1 / sp_u;
                nodes.push(x);
                tangents.push(tang);
                normals.push(rot90(tang));
                let sp_t = sp_u * du / 2.0;
                speed_t.push(sp_t);
                w_arc.push(gl_weights[i] * sp_t);
                curvature.push((d1.x * d2.y - d1.y * d2.x) / (sp_u * sp_u * sp_u));
                panel_of_node.push(panels.len());
            }
            panels.push(Panel {
                component: ci,
                segment: pp.segment,
                u0: pp.u0,
                u1: pp.u1,
                param_len: pp.param_len,
                first_node: first,
                start: seg.point(pp.u0),
                end: seg.point(pp.u1),
                prev: 0,
                next: 0,
                shift_next: Vec2::zeros(),
            });
            let _ = k;
        }

        let n_panels = panels.len() - first_panel;
        // link the chain and detect corners
        for k in 0..n_panels {
            let here = first_panel + k;
            let next = first_panel + (k + 1) % n_panels;
            panels[here].next = next;
            panels[next].prev = here;
            let wrap = k + 1 == n_panels;
            if wrap {
                panels[here].shift_next = panels[here].end - panels[next].start;
            } else {
                let gap = (panels[here].end - panels[next].start).norm();
                if gap > 1e-12 * scale {
                    return Err(Error::geometry(format!(
                        "panels {here} and {next} do not join (gap {gap:.3e})"
                    )));
                }
            }
            // tangent comparison at the junction
            let t_in = {
                let p = &panels[here];
                comp.segments[p.segment].d1(p.u1).normalize()
            };
            let t_out = {
                let p = &panels[next];
                comp.segments[p.segment].d1(p.u0).normalize()
            };
            let smooth = (t_in - t_out).norm() < 1e-10;
            if !smooth {
                let ray_in = -t_in;
                let ray_out = t_out;
                let mut theta = ray_in.y.atan2(ray_in.x) - ray_out.y.atan2(ray_out.x);
                while theta <= 0.0 {
                    theta += 2.0 * std::f64::consts::PI;
                }
                while theta > 2.0 * std::f64::consts::PI {
                    theta -= 2.0 * std::f64::consts::PI;
                }
                if theta < 1e-6 || theta > 2.0 * std::f64::consts::PI - 1e-6 {
                    return Err(Error::geometry(format!(
                        "cusp at junction of panels {here}/{next} (angle {theta:.3e})"
                    )));
                }
                corners.push(Corner {
                    position: panels[here].end,
                    component: ci,
                    panel_before: here,
                    panel_after: next,
                    angle: theta,
                });
            }
        }

        let n_nodes = nodes.len() - first_node;
        // orientation of loops from the shoelace formula on the node polyline
        let ccw = match comp.closure {
            Closure::Loop => {
                let mut area2 = 0.0;
                for p in first_panel..first_panel + n_panels {
                    let pan = &panels[p];
                    let mut prev = pan.start;
                    for i in pan.first_node..pan.first_node + n_q {
                        area2 += prev.x * nodes[i].y - nodes[i].x * prev.y;
                        prev = nodes[i];
                    }
                    area2 += prev.x * pan.end.y - pan.end.x * prev.y;
                }
                area2 > 0.0
            }
            Closure::PeriodicX(_) => true,
        };
        components.push(ComponentInfo {
            closure: comp.closure,
            first_panel,
            n_panels,
            first_node,
            n_nodes,
            ccw,
        });
    }

    let z: Vec<C64> = nodes.iter().map(|&p| to_c(p)).collect();
    Ok(PanelizedBoundary {
        spec,
        n_q,
        gl_nodes,
        gl_weights,
        panels,
        components,
        corners,
        nodes,
        z,
        normals,
        tangents,
        speed_t,
        w_arc,
        curvature,
        panel_of_node,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn flat_wall_arclength() {
        let l = 2.0 * std::f64::consts::PI;
        let spec = flat_channel(l, 0.0, 1.0);
        let b = build_panels(&spec, &[vec![8], vec![8]], 16).unwrap();
        assert_eq!(b.n_nodes(), 2 * 8 * 16);
        // each wall contributes arclength l
        assert_abs_diff_eq!(b.total_arclength(), 2.0 * l, epsilon = 1e-12);
        assert!(b.corners.is_empty());
    }

    #[test]
    fn circle_geometry() {
        let spec = circle(Vec2::new(0.3, -0.2), 1.0, Orientation::Ccw);
        let b = build_panels(&spec, &[vec![10]], 16).unwrap();
        assert_abs_diff_eq!(
            b.total_arclength(),
            2.0 * std::f64::consts::PI,
            epsilon = 1e-12
        );
        // normals point to the center for a ccw circle
        for (x, n) in b.nodes.iter().zip(&b.normals) {
            let radial = (x - Vec2::new(0.3, -0.2)).normalize();
            assert_abs_diff_eq!(n.x, -radial.x, epsilon = 1e-13);
            assert_abs_diff_eq!(n.y, -radial.y, epsilon = 1e-13);
            assert_abs_diff_eq!(n.norm(), 1.0, epsilon = 1e-14);
        }
        // curvature: +1 everywhere
        for &k in &b.curvature {
            assert_abs_diff_eq!(k, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn teardrop_has_one_corner() {
        let spec = teardrop(1.3, 1.0);
        let b = build_panels(&spec, &[vec![12]], 16).unwrap();
        assert_eq!(b.corners.len(), 1);
        let c = &b.corners[0];
        assert!(c.position.norm() < 1e-13);
        // corner is a junction of two panels
        assert_eq!(b.panels[c.panel_after].prev, c.panel_before);
        // interior angle equals the construction parameter
        assert_abs_diff_eq!(c.angle, 1.3, epsilon = 1e-10);
    }

    #[test]
    fn closed_curve_normal_integral_vanishes() {
        let spec = circle(Vec2::zeros(), 1.7, Orientation::Ccw);
        let b = build_panels(&spec, &[vec![8]], 16).unwrap();
        let mut s = Vec2::zeros();
        for i in 0..b.n_nodes() {
            s += b.normals[i] * b.w_arc[i];
        }
        assert!(s.norm() < 1e-12);
    }

    #[test]
    fn refine_star_adds_two_panels_per_level() {
        let spec = teardrop(1.3, 1.0);
        let b = build_panels(&spec, &[vec![12]], 16).unwrap();
        let n_sub = 10;
        let fine = refine_star_locally(&b, n_sub).unwrap();
        assert_eq!(fine.n_panels(), b.n_panels() + 2 * n_sub);
        assert_eq!(fine.n_nodes(), b.n_nodes() + 2 * n_sub * 16);
        assert_abs_diff_eq!(
            fine.total_arclength(),
            b.total_arclength(),
            epsilon = 1e-12
        );
        // refinement is a no-op at n_sub = 0
        let same = refine_star_locally(&b, 0).unwrap();
        assert_eq!(same.n_panels(), b.n_panels());
        // panel-junction continuity everywhere
        for p in &fine.panels {
            if p.shift_next == Vec2::zeros() {
                assert!((p.end - fine.panels[p.next].start).norm() < 1e-13);
            }
        }
        // smallest panel parameter length is 2^-n_sub
        let min_len = fine
            .panels
            .iter()
            .map(|p| p.param_len)
            .fold(f64::INFINITY, f64::min);
        assert_abs_diff_eq!(min_len, 2.0f64.powi(-(n_sub as i32)), epsilon = 1e-18);
    }

    #[test]
    fn channel_inside_test() {
        let l = 2.0 * std::f64::consts::PI;
        let spec = flat_channel(l, 0.0, 1.0);
        let b = build_panels(&spec, &[vec![8], vec![8]], 16).unwrap();
        assert!(b.fluid_contains(Vec2::new(1.0, 0.5)));
        assert!(!b.fluid_contains(Vec2::new(1.0, 1.5)));
        assert!(!b.fluid_contains(Vec2::new(1.0, -0.5)));
        // periodic in x
        assert!(b.fluid_contains(Vec2::new(l + 1.0, 0.5)));
    }

    #[test]
    fn open_curve_rejected() {
        let spec = CurveSpec {
            components: vec![Component {
                segments: vec![Segment::Line {
                    a: Vec2::new(0.0, 0.0),
                    b: Vec2::new(1.0, 0.0),
                }],
                closure: Closure::Loop,
            }],
        };
        assert!(build_panels(&spec, &[vec![4]], 16).is_err());
    }
}
