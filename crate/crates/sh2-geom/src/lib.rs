//! Sub-Riemannian geometry on the group SH(2) of motions of the pseudo-Euclidean plane.
//!
//! The crate evaluates geodesics in closed form through Jacobi elliptic functions,
//! computes Maxwell, conjugate and cut times, stratifies the cut locus in the plane
//! `z = 0`, and inverts the exponential map to produce every minimizing geodesic
//! from the identity to a given target.
//!
//! Everything here is `no_std` with `alloc`; file formats and the command-line
//! front end live in the `sh2-cli` crate.
//!
//! ```
//! use sh2_geom::{exp_map::{exp, GeodesicSpec}, pendulum::Covector};
//!
//! let nu = GeodesicSpec::new(Covector::new(0.0, 0.0), 1.5).unwrap();
//! let q = exp(&nu);
//! assert!((q.x - 1.5).abs() < 1e-15 && q.y == 0.0 && q.z == 0.0);
//! ```
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod elliptic;
mod error;
pub mod exp_map;
pub mod ext;
pub mod optimality;
pub mod pendulum;
pub mod plane;
mod roots;
pub mod synthesis;

pub use error::Error;
pub use ext::ExtReal;

/// Half-width of the energy band around `E = ±1` treated as the separatrix or an equilibrium.
pub const DEFAULT_TOL: f64 = 1e-9;
