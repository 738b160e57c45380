//! Orbit geometry shared by both solvers: perifocal basis plus size and
//! shape scalars.

use nalgebra::Vector3;

/// Tolerance below which an orbit is treated as circular and the periapsis
/// direction is reported absent.
pub const E_CIRCULAR_TOL: f64 = 1e-10;

/// Orientation, size, and shape of a Keplerian orbit.
///
/// `p_hat`/`q_hat` are `None` for a (numerically) circular orbit, where the
/// periapsis direction is undefined. `a` is negative for a hyperbola and
/// `f64::INFINITY` for a parabola.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitGeometry {
    /// Unit vector from the focus toward periapsis, inertial frame.
    pub p_hat: Option<Vector3<f64>>,
    /// In-plane unit vector 90 degrees ahead of periapsis.
    pub q_hat: Option<Vector3<f64>>,
    /// Orbit-normal unit vector.
    pub w_hat: Vector3<f64>,
    /// Semi-latus rectum, km.
    pub p: f64,
    /// Eccentricity.
    pub e: f64,
    /// Semi-major axis, km.
    pub a: f64,
}

impl OrbitGeometry {
    pub fn is_circular(&self) -> bool {
        self.e < E_CIRCULAR_TOL
    }
}
