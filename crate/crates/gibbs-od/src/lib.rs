//! Orbit determination from three position vectors sharing a focus.
//!
//! Two independent solvers are provided and cross-validate each other:
//!
//! * [`gibbs`] — the classical vector solution via the intermediate
//!   vectors N, D, S and the perifocal basis they define.
//! * [`algebraic`] — a projective-geometry solution: project the positions
//!   into the orbit plane, fit a conic with a focus at the origin by
//!   intersecting two lines, and read the orbit off the (X, Y, Z²)
//!   parameters.
//!
//! [`elements`] supplies Keplerian element conversions and a purely
//! geometric two-body generator (true anomaly in, position out) used as the
//! round-trip oracle. [`cli`] holds the request/report plumbing behind the
//! `gibbs-od` binary.

pub mod algebraic;
pub mod cli;
pub mod conic;
pub mod elements;
pub mod error;
pub mod geom;
pub mod gibbs;
pub mod orbit;
pub mod plane;

pub use algebraic::solve;
pub use error::{OdError, Result};
pub use orbit::OrbitGeometry;

/// Earth's gravitational parameter, km³/s². Default for the CLI only; the
/// library always takes mu explicitly.
pub const MU_EARTH: f64 = 398600.4418;
