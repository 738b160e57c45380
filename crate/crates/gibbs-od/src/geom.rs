//! Projective-plane primitives: homogeneous points and lines, intersection
//! by cross product, and dehomogenization.
//!
//! Points and lines are both 3-vectors defined up to nonzero scale; a point
//! lies on a line iff their dot product vanishes. No normalization is applied
//! on construction so intermediate magnitudes stay inspectable.

use nalgebra::Vector3;

use crate::error::{OdError, Result};

/// A projective point or line in P^2, equal up to nonzero scale.
///
/// Whether an entity is read as a point or a line is a call-site convention;
/// the incidence relation is symmetric either way.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneousEntity(pub Vector3<f64>);

impl HomogeneousEntity {
    pub fn new(h1: f64, h2: f64, h3: f64) -> Self {
        Self(Vector3::new(h1, h2, h3))
    }

    pub fn coords(&self) -> Vector3<f64> {
        self.0
    }

    /// Projective equality: one is a scalar multiple of the other.
    pub fn projectively_eq(&self, other: &Self, tol: f64) -> bool {
        let cross = self.0.cross(&other.0);
        cross.norm() <= tol * self.0.norm() * other.0.norm()
    }
}

/// Intersection of two lines, given by their cross product.
///
/// Fails when the lines are projectively identical and the cross product
/// collapses to (numerically) zero.
pub fn intersect_lines(l1: &HomogeneousEntity, l2: &HomogeneousEntity) -> Result<HomogeneousEntity> {
    let s = l1.0.cross(&l2.0);
    if s.norm() < 1e-300 {
        return Err(OdError::DegenerateIntersection);
    }
    Ok(HomogeneousEntity(s))
}

/// Affine coordinates of a projective point: (h1/h3, h2/h3).
///
/// Points at (or numerically near) infinity signal a degenerate, unfittable
/// configuration to callers.
pub fn dehomogenize(q: &HomogeneousEntity) -> Result<(f64, f64)> {
    let v = q.0;
    let scale = v[0].abs().max(v[1].abs()).max(v[2].abs());
    if v[2].abs() <= 1e-12 * scale {
        return Err(OdError::PointAtInfinity);
    }
    Ok((v[0] / v[2], v[1] / v[2]))
}
