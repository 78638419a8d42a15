//! Built-in channel and interface shapes. Wall shapes with corners are
//! parameterized reconstructions (corner angle, depth, counts are inputs);
//! all are traversed with the fluid on the left so normals point into it.

use super::{Closure, Component, CurveSpec, Segment};
use crate::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

/// Flat channel: bottom wall at `y_bottom`, top wall at `y_top`, period `l`.
/// Component 0 is the bottom wall, component 1 the top wall.
pub fn flat_channel(l: f64, y_bottom: f64, y_top: f64) -> CurveSpec {
    CurveSpec {
        components: vec![
            Component {
                segments: vec![Segment::Line {
                    a: Vec2::new(0.0, y_bottom),
                    b: Vec2::new(l, y_bottom),
                }],
                closure: Closure::PeriodicX(l),
            },
            Component {
                segments: vec![Segment::Line {
                    a: Vec2::new(l, y_top),
                    b: Vec2::new(0.0, y_top),
                }],
                closure: Closure::PeriodicX(-l),
            },
        ],
    }
}

/// Channel with a triangular bump on the bottom wall (three corners: two
/// feet and the apex) and a flat top wall.
///
/// Bottom-wall segments: flat | rise | fall | flat, so any per-segment panel
/// count puts the corners at panel junctions.
pub fn bump_channel(l: f64, y_top: f64, apex_x: f64, half_width: f64, height: f64) -> CurveSpec {
    assert!(apex_x - half_width > 0.0 && apex_x + half_width < l);
    let bottom = vec![
        Segment::Line {
            a: Vec2::new(0.0, 0.0),
            b: Vec2::new(apex_x - half_width, 0.0),
        },
        Segment::Line {
            a: Vec2::new(apex_x - half_width, 0.0),
            b: Vec2::new(apex_x, height),
        },
        Segment::Line {
            a: Vec2::new(apex_x, height),
            b: Vec2::new(apex_x + half_width, 0.0),
        },
        Segment::Line {
            a: Vec2::new(apex_x + half_width, 0.0),
            b: Vec2::new(l, 0.0),
        },
    ];
    CurveSpec {
        components: vec![
            Component {
                segments: bottom,
                closure: Closure::PeriodicX(l),
            },
            Component {
                segments: vec![Segment::Line {
                    a: Vec2::new(l, y_top),
                    b: Vec2::new(0.0, y_top),
                }],
                closure: Closure::PeriodicX(-l),
            },
        ],
    }
}

/// Channel whose bottom wall is a triangle-wave with `n_teeth` teeth of the
/// given `depth`; the tooth tips are reentrant corners of the fluid domain.
pub fn sawtooth_channel(l: f64, y_top: f64, n_teeth: usize, depth: f64) -> CurveSpec {
    assert!(n_teeth >= 1);
    let mut segments = Vec::new();
    let step = l / (2.0 * n_teeth as f64);
    let mut x = 0.0;
    for _ in 0..n_teeth {
        segments.push(Segment::Line {
            a: Vec2::new(x, 0.0),
            b: Vec2::new(x + step, depth),
        });
        segments.push(Segment::Line {
            a: Vec2::new(x + step, depth),
            b: Vec2::new(x + 2.0 * step, 0.0),
        });
        x += 2.0 * step;
    }
    CurveSpec {
        components: vec![
            Component {
                segments,
                closure: Closure::PeriodicX(l),
            },
            Component {
                segments: vec![Segment::Line {
                    a: Vec2::new(l, y_top),
                    b: Vec2::new(0.0, y_top),
                }],
                closure: Closure::PeriodicX(-l),
            },
        ],
    }
}

/// Channel with a trapezoidal constriction on the bottom wall (four
/// corners); the plateau narrows the gap to `y_top - height`.
pub fn squeeze_channel(
    l: f64,
    y_top: f64,
    center_x: f64,
    foot_half_width: f64,
    plateau_half_width: f64,
    height: f64,
) -> CurveSpec {
    assert!(plateau_half_width < foot_half_width);
    let x0 = center_x - foot_half_width;
    let x1 = center_x - plateau_half_width;
    let x2 = center_x + plateau_half_width;
    let x3 = center_x + foot_half_width;
    assert!(x0 > 0.0 && x3 < l);
    let bottom = vec![
        Segment::Line {
            a: Vec2::new(0.0, 0.0),
            b: Vec2::new(x0, 0.0),
        },
        Segment::Line {
            a: Vec2::new(x0, 0.0),
            b: Vec2::new(x1, height),
        },
        Segment::Line {
            a: Vec2::new(x1, height),
            b: Vec2::new(x2, height),
        },
        Segment::Line {
            a: Vec2::new(x2, height),
            b: Vec2::new(x3, 0.0),
        },
        Segment::Line {
            a: Vec2::new(x3, 0.0),
            b: Vec2::new(l, 0.0),
        },
    ];
    CurveSpec {
        components: vec![
            Component {
                segments: bottom,
                closure: Closure::PeriodicX(l),
            },
            Component {
                segments: vec![Segment::Line {
                    a: Vec2::new(l, y_top),
                    b: Vec2::new(0.0, y_top),
                }],
                closure: Closure::PeriodicX(-l),
            },
        ],
    }
}

/// Closed one-corner curve with opening angle `phi` at the origin; the fluid
/// fills the interior.
pub fn teardrop(phi: f64, scale: f64) -> CurveSpec {
    CurveSpec {
        components: vec![Component {
            segments: vec![Segment::Teardrop { phi, scale }],
            closure: Closure::Loop,
        }],
    }
}

/// Circle. `Ccw` puts the fluid inside (cavity); `Cw` puts it outside
/// (a drop immersed in bulk fluid).
pub fn circle(center: Vec2, radius: f64, orientation: Orientation) -> CurveSpec {
    let (theta0, theta1) = match orientation {
        Orientation::Ccw => (0.0, 2.0 * std::f64::consts::PI),
        Orientation::Cw => (0.0, -2.0 * std::f64::consts::PI),
    };
    CurveSpec {
        components: vec![Component {
            segments: vec![Segment::Arc {
                center,
                radius,
                theta0,
                theta1,
            }],
            closure: Closure::Loop,
        }],
    }
}

/// Axis-aligned ellipse with semi-axes `a`, `b`.
pub fn ellipse(center: Vec2, a: f64, b: f64, orientation: Orientation) -> CurveSpec {
    let sb = match orientation {
        Orientation::Ccw => b,
        Orientation::Cw => -b,
    };
    CurveSpec {
        components: vec![Component {
            segments: vec![Segment::Trig {
                axc: vec![center.x, a],
                axs: vec![0.0, 0.0],
                ayc: vec![center.y, 0.0],
                ays: vec![0.0, sb],
            }],
            closure: Closure::Loop,
        }],
    }
}
