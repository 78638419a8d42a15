//! Boundary integral solver for two-dimensional periodic Stokes flow in
//! channels whose walls may have corners.
//!
//! The library discretizes the combined-field boundary integral equation on
//! composite Gauss-Legendre panels, compresses the singular corner behaviour
//! with recursively compressed inverse preconditioning (RCIP), periodizes the
//! Stokeslet and stresslet sums with a spectral Ewald method, and couples the
//! wall problem to deformable viscous drops.
//!
//! Module map:
//! - [`geometry`]: curves, panels, corner mesh hierarchies, built-in channels.
//! - [`kernels`]: Stokeslet/stresslet, complex split, Ewald split pieces.
//! - [`quadrature`]: log-singular panel quadrature and close evaluation.
//! - [`ewald`]: doubly periodic fast summation (real space + Fourier space).
//! - [`rcip`]: prolongation operators, corner compression recursion, R-hat.
//! - [`solver`]: matrix-free GMRES wall solver and field evaluation.
//! - [`drops`]: deformable drop interfaces, time stepping, diagnostics.

pub mod drops;
pub mod error;
pub mod ewald;
pub mod gauss;
pub mod geometry;
pub mod kernels;
pub mod quadrature;
pub mod rcip;
pub mod solver;
pub mod special;
#[doc(hidden)]
pub mod testing;

pub use error::{Error, Result};

use num_complex::Complex64;

/// 2D point / vector.
pub type Vec2 = nalgebra::Vector2<f64>;
/// 2x2 real matrix.
pub type Mat2 = nalgebra::Matrix2<f64>;
/// Complex number used for boundary points written as x1 + i x2.
pub type C64 = Complex64;

/// View a 2D vector as a complex number.
#[inline]
pub fn to_c(v: Vec2) -> C64 {
    C64::new(v.x, v.y)
}

/// View a complex number as a 2D vector.
#[inline]
pub fn to_v(z: C64) -> Vec2 {
    Vec2::new(z.re, z.im)
}
