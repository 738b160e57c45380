//! Orbit-plane recovery and projection to planar homogeneous coordinates.
//!
//! The plane normal comes from r1 x r2, so input order fixes the sign of the
//! recovered normal: it matches the angular-momentum direction only when the
//! points are given in prograde order along track.

use nalgebra::{Matrix3, Vector3};

use crate::error::{OdError, Result};
use crate::geom::HomogeneousEntity;

/// Default bound on |w.r|/|r| for a position to count as in-plane.
pub const COPLANARITY_TOL: f64 = 1e-6;

/// Right-handed orthonormal frame spanned by the orbit plane, with the
/// rotation taking inertial vectors into it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitPlaneFrame {
    pub e1: Vector3<f64>,
    pub e2: Vector3<f64>,
    pub w: Vector3<f64>,
    /// Rotation with rows e1ᵀ, e2ᵀ, wᵀ.
    pub t_i_to_n: Matrix3<f64>,
    coplanarity_tol: f64,
}

/// A position expressed in the orbit plane, km.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarPoint {
    pub x: f64,
    pub y: f64,
    /// Distance from the focus, = sqrt(x² + y²).
    pub r: f64,
}

impl PlanarPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y, r: x.hypot(y) }
    }

    /// Homogeneous form (x, y, 1).
    pub fn homogeneous(&self) -> HomogeneousEntity {
        HomogeneousEntity::new(self.x, self.y, 1.0)
    }
}

/// Build the intermediate frame from three positions: w from r1 x r2,
/// e2 = (w x r1)/|w x r1|, e1 = e2 x w.
pub fn build_frame(r1: &Vector3<f64>, r2: &Vector3<f64>, r3: &Vector3<f64>) -> Result<OrbitPlaneFrame> {
    build_frame_with_tol(r1, r2, r3, COPLANARITY_TOL)
}

pub fn build_frame_with_tol(
    r1: &Vector3<f64>,
    r2: &Vector3<f64>,
    r3: &Vector3<f64>,
    coplanarity_tol: f64,
) -> Result<OrbitPlaneFrame> {
    let n = r1.cross(r2);
    if n.norm() <= 1e-12 * r1.norm() * r2.norm() {
        return Err(OdError::CollinearPositions);
    }
    let w = n.normalize();
    let e2 = w.cross(r1).normalize();
    let e1 = e2.cross(&w);
    let t_i_to_n = Matrix3::from_rows(&[e1.transpose(), e2.transpose(), w.transpose()]);
    let frame = OrbitPlaneFrame { e1, e2, w, t_i_to_n, coplanarity_tol };
    // r1 and r2 are in-plane by construction; only r3 can stick out.
    frame.check_coplanar(r3)?;
    Ok(frame)
}

impl OrbitPlaneFrame {
    fn check_coplanar(&self, r: &Vector3<f64>) -> Result<()> {
        let out_of_plane = self.w.dot(r).abs() / r.norm();
        if out_of_plane > self.coplanarity_tol {
            return Err(OdError::NonCoplanar { out_of_plane, tol: self.coplanarity_tol });
        }
        Ok(())
    }

    /// Rotate an inertial position into the plane and drop the (near-zero)
    /// normal component.
    pub fn project(&self, r: &Vector3<f64>) -> Result<PlanarPoint> {
        self.check_coplanar(r)?;
        let rotated = self.t_i_to_n * r;
        Ok(PlanarPoint { x: rotated[0], y: rotated[1], r: r.norm() })
    }

    /// Map an in-plane unit direction back to the inertial frame.
    pub fn unproject_direction(&self, dir2d: [f64; 2]) -> Vector3<f64> {
        self.t_i_to_n.transpose() * Vector3::new(dir2d[0], dir2d[1], 0.0)
    }
}
