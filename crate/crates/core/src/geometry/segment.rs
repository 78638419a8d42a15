//! Parametric curve segments with analytic first and second derivatives.
//!
//! Every segment maps t in [0, 1] to a point in the plane. Corner-centered
//! evaluation (`point_rel`) is provided in cancellation-free form per segment
//! type so that corner mesh hierarchies stay accurate down to panel sizes of
//! order 1e-19.

use crate::Vec2;

#[derive(Debug, Clone, PartialEq)]
pub enum Segment {
    /// Straight line from `a` to `b`.
    Line { a: Vec2, b: Vec2 },
    /// Circular arc around `center`, angle theta0 -> theta1 (radians).
    Arc {
        center: Vec2,
        radius: f64,
        theta0: f64,
        theta1: f64,
    },
    /// Polynomial coordinates: x(t) = sum cx[k] t^k, y(t) = sum cy[k] t^k.
    Poly { cx: Vec<f64>, cy: Vec<f64> },
    /// Truncated Fourier series in t (period 1):
    /// x(t) = sum_k axc[k] cos(2 pi k t) + axs[k] sin(2 pi k t), same for y.
    Trig {
        axc: Vec<f64>,
        axs: Vec<f64>,
        ayc: Vec<f64>,
        ays: Vec<f64>,
    },
    /// Closed one-corner loop of size `scale`: gamma(t) = scale sin(pi t)
    /// (cos(phi (t - 1/2)), sin(phi (t - 1/2))). The corner sits at the
    /// origin (t = 0 and t = 1) with opening angle `phi`.
    Teardrop { phi: f64, scale: f64 },
}

impl Segment {
    pub fn point(&self, t: f64) -> Vec2 {
        match self {
            Segment::Line { a, b } => a + (b - a) * t,
            Segment::Arc {
                center,
                radius,
                theta0,
                theta1,
            } => {
                let th = theta0 + (theta1 - theta0) * t;
                center + Vec2::new(radius * th.cos(), radius * th.sin())
            }
            Segment::Poly { cx, cy } => Vec2::new(horner(cx, t), horner(cy, t)),
            Segment::Trig { axc, axs, ayc, ays } => {
                Vec2::new(trig_eval(axc, axs, t, 0), trig_eval(ayc, ays, t, 0))
            }
            Segment::Teardrop { phi, scale } => {
                let s = (std::f64::consts::PI * t).sin() * scale;
                let a = phi * (t - 0.5);
                Vec2::new(s * a.cos(), s * a.sin())
            }
        }
    }

    pub fn d1(&self, t: f64) -> Vec2 {
        match self {
            Segment::Line { a, b } => b - a,
            Segment::Arc {
                radius,
                theta0,
                theta1,
                ..
            } => {
                let dth = theta1 - theta0;
                let th = theta0 + dth * t;
                Vec2::new(-radius * th.sin() * dth, radius * th.cos() * dth)
            }
            Segment::Poly { cx, cy } => Vec2::new(horner_d1(cx, t), horner_d1(cy, t)),
            Segment::Trig { axc, axs, ayc, ays } => {
                Vec2::new(trig_eval(axc, axs, t, 1), trig_eval(ayc, ays, t, 1))
            }
            Segment::Teardrop { phi, scale } => {
                let pi = std::f64::consts::PI;
                let (s, c) = (pi * t).sin_cos();
                let a = phi * (t - 0.5);
                let (sa, ca) = a.sin_cos();
                Vec2::new(
                    scale * (pi * c * ca - s * phi * sa),
                    scale * (pi * c * sa + s * phi * ca),
                )
            }
        }
    }

    pub fn d2(&self, t: f64) -> Vec2 {
        match self {
            Segment::Line { .. } => Vec2::zeros(),
            Segment::Arc {
                radius,
                theta0,
                theta1,
                ..
            } => {
                let dth = theta1 - theta0;
                let th = theta0 + dth * t;
                Vec2::new(
                    -radius * th.cos() * dth * dth,
                    -radius * th.sin() * dth * dth,
                )
            }
            Segment::Poly { cx, cy } => Vec2::new(horner_d2(cx, t), horner_d2(cy, t)),
            Segment::Trig { axc, axs, ayc, ays } => {
                Vec2::new(trig_eval(axc, axs, t, 2), trig_eval(ayc, ays, t, 2))
            }
            Segment::Teardrop { phi, scale } => {
                let pi = std::f64::consts::PI;
                let (s, c) = (pi * t).sin_cos();
                let a = phi * (t - 0.5);
                let (sa, ca) = a.sin_cos();
                let p2 = pi * pi;
                let f2 = phi * phi;
                Vec2::new(
                    scale * (-p2 * s * ca - 2.0 * pi * c * phi * sa - s * f2 * ca),
                    scale * (-p2 * s * sa + 2.0 * pi * c * phi * ca - s * f2 * sa),
                )
            }
        }
    }

    /// point(t) - point(t_ref), computed without catastrophic cancellation
    /// when t is close to t_ref. Used with t_ref at a corner junction
    /// (t_ref is 0 or 1 in practice).
    pub fn point_rel(&self, t: f64, t_ref: f64) -> Vec2 {
        let dt = t - t_ref;
        match self {
            Segment::Line { a, b } => (b - a) * dt,
            Segment::Arc {
                radius,
                theta0,
                theta1,
                ..
            } => {
                let dth = theta1 - theta0;
                let th = theta0 + dth * t;
                let thr = theta0 + dth * t_ref;
                // cos th - cos thr = -2 sin((th+thr)/2) sin((th-thr)/2)
                let half_sum = 0.5 * (th + thr);
                let half_diff = 0.5 * dth * dt;
                Vec2::new(
                    -2.0 * radius * half_sum.sin() * half_diff.sin(),
                    2.0 * radius * half_sum.cos() * half_diff.sin(),
                )
            }
            Segment::Poly { cx, cy } => {
                Vec2::new(poly_diff(cx, t, t_ref), poly_diff(cy, t, t_ref))
            }
            Segment::Trig { axc, axs, ayc, ays } => Vec2::new(
                trig_diff(axc, axs, t, t_ref),
                trig_diff(ayc, ays, t, t_ref),
            ),
            Segment::Teardrop { .. } => {
                // the corner is at the origin, so the difference against
                // point(0) = point(1) = 0 is the point itself
                if t_ref == 0.0 || t_ref == 1.0 {
                    self.point(t)
                } else {
                    self.point(t) - self.point(t_ref)
                }
            }
        }
    }
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * t + ck)
}

fn horner_d1(c: &[f64], t: f64) -> f64 {
    let mut acc = 0.0;
    for k in (1..c.len()).rev() {
        acc = acc * t + c[k] * k as f64;
    }
    acc
}

fn horner_d2(c: &[f64], t: f64) -> f64 {
    let mut acc = 0.0;
    for k in (2..c.len()).rev() {
        acc = acc * t + c[k] * (k * (k - 1)) as f64;
    }
    acc
}

/// p(t) - p(tr) = (t - tr) * q(t, tr) with q evaluated stably:
/// q = sum_k c_k (t^{k-1} + t^{k-2} tr + ... + tr^{k-1}).
fn poly_diff(c: &[f64], t: f64, tr: f64) -> f64 {
    let dt = t - tr;
    let mut q = 0.0;
    for k in (1..c.len()).rev() {
        // s_k = sum_{j=0}^{k-1} t^j tr^{k-1-j}
        let mut s = 0.0;
        let mut tp = 1.0;
        for j in 0..k {
            s += tp * tr.powi((k - 1 - j) as i32);
            tp *= t;
        }
        q += c[k] * s;
    }
    dt * q
}

fn trig_eval(ac: &[f64], as_: &[f64], t: f64, deriv: u8) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut v = 0.0;
    let kmax = ac.len().max(as_.len());
    for k in 0..kmax {
        let w = two_pi * k as f64;
        let (s, c) = (w * t).sin_cos();
        let a = ac.get(k).copied().unwrap_or(0.0);
        let b = as_.get(k).copied().unwrap_or(0.0);
        v += match deriv {
            0 => a * c + b * s,
            1 => w * (-a * s + b * c),
            _ => w * w * (-a * c - b * s),
        };
    }
    v
}

/// cos/sin difference forms: f(t) - f(tr) for the Fourier series.
fn trig_diff(ac: &[f64], as_: &[f64], t: f64, tr: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut v = 0.0;
    let kmax = ac.len().max(as_.len());
    for k in 1..kmax {
        let w = two_pi * k as f64;
        let half_sum = 0.5 * w * (t + tr);
        let half_diff = 0.5 * w * (t - tr);
        let a = ac.get(k).copied().unwrap_or(0.0);
        let b = as_.get(k).copied().unwrap_or(0.0);
        // cos(wt) - cos(wtr) = -2 sin(hs) sin(hd); sin(wt) - sin(wtr) = 2 cos(hs) sin(hd)
        v += -2.0 * a * half_sum.sin() * half_diff.sin() + 2.0 * b * half_sum.cos() * half_diff.sin();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn check_derivs(seg: &Segment, t: f64) {
        let h = 1e-6;
        let fd1 = (seg.point(t + h) - seg.point(t - h)) / (2.0 * h);
        let fd2 = (seg.d1(t + h) - seg.d1(t - h)) / (2.0 * h);
        let d1 = seg.d1(t);
        let d2 = seg.d2(t);
        assert_relative_eq!(d1.x, fd1.x, epsilon = 1e-7, max_relative = 1e-6);
        assert_relative_eq!(d1.y, fd1.y, epsilon = 1e-7, max_relative = 1e-6);
        assert_relative_eq!(d2.x, fd2.x, epsilon = 1e-6, max_relative = 1e-5);
        assert_relative_eq!(d2.y, fd2.y, epsilon = 1e-6, max_relative = 1e-5);
    }

    #[test]
    fn analytic_derivatives_match_finite_differences() {
        let segs = [
            Segment::Line {
                a: Vec2::new(0.0, 1.0),
                b: Vec2::new(2.0, -1.0),
            },
            Segment::Arc {
                center: Vec2::new(0.5, 0.5),
                radius: 1.3,
                theta0: 0.3,
                theta1: 2.1,
            },
            Segment::Poly {
                cx: vec![0.1, 1.0, -0.4, 0.2],
                cy: vec![-0.3, 0.5, 0.7],
            },
            Segment::Trig {
                axc: vec![0.2, 0.5, 0.1],
                axs: vec![0.0, -0.3],
                ayc: vec![0.0, 0.2],
                ays: vec![0.0, 0.4, 0.05],
            },
            Segment::Teardrop { phi: 1.5, scale: 1.0 },
        ];
        for seg in &segs {
            for t in [0.12, 0.5, 0.87] {
                check_derivs(seg, t);
            }
        }
    }

    #[test]
    fn point_rel_is_cancellation_free() {
        let segs = [
            Segment::Line {
                a: Vec2::new(3.0, 4.0),
                b: Vec2::new(5.0, 4.5),
            },
            Segment::Arc {
                center: Vec2::new(10.0, -3.0),
                radius: 2.0,
                theta0: 0.1,
                theta1: 1.0,
            },
            Segment::Poly {
                cx: vec![2.0, 1.0, 0.3],
                cy: vec![5.0, -0.5, 0.1, 0.02],
            },
        ];
        for seg in &segs {
            // tiny offsets from the reference: relative accuracy must hold
            for &dt in &[1e-6, 1e-12, 1e-19] {
                let rel = seg.point_rel(dt, 0.0);
                let expect = seg.d1(0.0) * dt + seg.d2(0.0) * dt * dt / 2.0;
                let scale = expect.norm();
                // allow the third-order Taylor term in the comparison
                let tol = 1e-13 * scale + 10.0 * dt.powi(3);
                assert!(
                    (rel - expect).norm() <= tol,
                    "dt={dt}: rel={rel:?} expect={expect:?}"
                );
            }
            // and it agrees with plain subtraction at moderate separations
            let rel = seg.point_rel(0.7, 0.0);
            let plain = seg.point(0.7) - seg.point(0.0);
            assert!((rel - plain).norm() < 1e-13 * plain.norm());
        }
    }

    #[test]
    fn teardrop_corner_at_origin() {
        let seg = Segment::Teardrop { phi: 1.2, scale: 1.0 };
        assert!(seg.point(0.0).norm() < 1e-15);
        assert!(seg.point(1.0).norm() < 1e-14);
        // opening angle between the outgoing and incoming rays equals phi
        let t_out = seg.d1(0.0).normalize();
        let t_in = seg.d1(1.0).normalize();
        let ray_out = t_out;
        let ray_in = -t_in;
        let angle = ray_out.dot(&ray_in).clamp(-1.0, 1.0).acos();
        assert_relative_eq!(angle, 1.2, epsilon = 1e-12);
    }
}
