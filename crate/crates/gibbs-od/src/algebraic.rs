//! Focus-constrained three-point conic fit by line intersection, and the
//! full algebraic orbit-determination pipeline built on it.
//!
//! The quadratic constraint each planar point places on (X, Y) factors into
//! a product of two lines. Points 2 and 3 each contribute a line pair; of
//! the four candidate intersections, u123 x v123 is always the physical one
//! (the others put the points on both branches of a hyperbola). The branch
//! diagnostics expose the determinant sign tests behind that claim.

use nalgebra::{Matrix3, Vector3};

use crate::conic::{geometry_from_conic, locus_matrix, FocusConic};
use crate::error::{OdError, Result};
use crate::geom::{dehomogenize, intersect_lines, HomogeneousEntity};
use crate::orbit::OrbitGeometry;
use crate::plane::{build_frame_with_tol, PlanarPoint, COPLANARITY_TOL};

/// The two line pairs factored out of the point-2 and point-3 constraints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinePair {
    pub u123: HomogeneousEntity,
    pub u456: HomogeneousEntity,
    pub v123: HomogeneousEntity,
    pub v456: HomogeneousEntity,
}

/// Determinant sign tests selecting the physical candidate among the four
/// cross products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchDiagnostics {
    /// det[[x1,y1,r1],[x2,y2,r2],[x3,y3,r3]], km³.
    pub k1: f64,
    /// det[[x1,y1,1],[x2,y2,1],[x3,y3,1]], km².
    pub k2: f64,
    /// det[[x1,y1,r1],[x2,y2,-r2],[x3,y3,r3]], km³.
    pub k3: f64,
    /// Consistency flags for [u123 x v123, u456 x v123, u123 x v456, u456 x v456].
    pub consistent: [bool; 4],
}

fn check_distinct(p1: &PlanarPoint, p2: &PlanarPoint, p3: &PlanarPoint) -> Result<()> {
    let scale = p1.r.max(p2.r).max(p3.r);
    for (a, b) in [(p1, p2), (p1, p3), (p2, p3)] {
        if (a.x - b.x).hypot(a.y - b.y) <= 1e-9 * scale {
            return Err(OdError::DuplicatePoints);
        }
    }
    Ok(())
}

/// Factor the point-2 and point-3 conic constraints into line pairs.
///
/// U1 = (r2+r1)(r2 x1 - r1 x2), U4 = (r2-r1)(r2 x1 + r1 x2), and likewise
/// for the y components; U3 = U6 = r1² - r2². The V coefficients repeat the
/// pattern with point 3.
pub fn build_lines(p1: &PlanarPoint, p2: &PlanarPoint, p3: &PlanarPoint) -> Result<LinePair> {
    check_distinct(p1, p2, p3)?;
    let pair = |other: &PlanarPoint| {
        let (r1, r2) = (p1.r, other.r);
        let c123 = HomogeneousEntity::new(
            (r2 + r1) * (r2 * p1.x - r1 * other.x),
            (r2 + r1) * (r2 * p1.y - r1 * other.y),
            r1 * r1 - r2 * r2,
        );
        let c456 = HomogeneousEntity::new(
            (r2 - r1) * (r2 * p1.x + r1 * other.x),
            (r2 - r1) * (r2 * p1.y + r1 * other.y),
            r1 * r1 - r2 * r2,
        );
        (c123, c456)
    };
    let (u123, u456) = pair(p2);
    let (v123, v456) = pair(p3);
    Ok(LinePair { u123, u456, v123, v456 })
}

/// Fit the focus-at-origin conic through three planar points.
///
/// X and Y come from intersecting u123 and v123; Z² is then linear in the
/// point-1 constraint and solved from that point alone. The residuals at
/// points 2 and 3 are the consistency check.
pub fn fit_conic(p1: &PlanarPoint, p2: &PlanarPoint, p3: &PlanarPoint) -> Result<FocusConic> {
    let lines = build_lines(p1, p2, p3)?;
    let s = intersect_lines(&lines.u123, &lines.v123)
        .map_err(|_| OdError::DegenerateConfiguration)?;
    let (x, y) = dehomogenize(&s).map_err(|_| OdError::DegenerateConfiguration)?;
    let m = Matrix3::new(
        -y * y,
        x * y,
        -x,
        x * y,
        -x * x,
        -y,
        -x,
        -y,
        1.0,
    );
    let xb1 = Vector3::new(p1.x, p1.y, 1.0);
    let zsq = (xb1.transpose() * m * xb1)[0] / (p1.r * p1.r);
    let conic = FocusConic::new(x, y, zsq);
    if conic.quadrance() <= 0.0 {
        return Err(OdError::InvalidConic);
    }
    Ok(conic)
}

/// Normalized locus residual x̄ᵀ C x̄ / (‖x̄‖² ‖C‖) of a planar point.
pub fn locus_residual(c: &FocusConic, p: &PlanarPoint) -> f64 {
    let xb = Vector3::new(p.x, p.y, 1.0);
    let m = locus_matrix(c);
    let r = (xb.transpose() * m * xb)[0];
    r.abs() / (xb.norm_squared() * m.norm())
}

/// Evaluate the K-determinant sign conditions for all four candidates.
///
/// Flipping the radius sign on a point moves it to the other branch of the
/// candidate's hyperbola; a candidate is consistent only if the polar
/// equation holds at all three points, which requires sign(K_sigma) =
/// sigma_i sign(K2) for each point i.
pub fn branch_diagnostics(
    p1: &PlanarPoint,
    p2: &PlanarPoint,
    p3: &PlanarPoint,
) -> Result<BranchDiagnostics> {
    check_distinct(p1, p2, p3)?;
    let det = |s2: f64, s3: f64| {
        Matrix3::new(
            p1.x, p1.y, p1.r, //
            p2.x, p2.y, s2 * p2.r, //
            p3.x, p3.y, s3 * p3.r,
        )
        .determinant()
    };
    let k1 = det(1.0, 1.0);
    let k2 = Matrix3::new(p1.x, p1.y, 1.0, p2.x, p2.y, 1.0, p3.x, p3.y, 1.0).determinant();
    let k3 = det(-1.0, 1.0);

    // Candidate order: u123xv123 (no flip), u456xv123 (flip point 2),
    // u123xv456 (flip point 3), u456xv456 (flip both).
    let flips: [(f64, f64); 4] = [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)];
    let mut consistent = [false; 4];
    for (idx, (s2, s3)) in flips.iter().enumerate() {
        let k_sigma = det(*s2, *s3);
        let per_point = [1.0, *s2, *s3];
        let all_ok = per_point.iter().all(|sig| sig * k2 * k_sigma > 0.0);
        consistent[idx] = all_ok || (idx == 0 && k2 == 0.0);
    }
    Ok(BranchDiagnostics { k1, k2, k3, consistent })
}

/// The full algebraic pipeline: plane, projection, conic fit, geometry.
pub fn solve(r1: &Vector3<f64>, r2: &Vector3<f64>, r3: &Vector3<f64>) -> Result<OrbitGeometry> {
    solve_with_tol(r1, r2, r3, COPLANARITY_TOL)
}

pub fn solve_with_tol(
    r1: &Vector3<f64>,
    r2: &Vector3<f64>,
    r3: &Vector3<f64>,
    coplanarity_tol: f64,
) -> Result<OrbitGeometry> {
    let frame = build_frame_with_tol(r1, r2, r3, coplanarity_tol)?;
    let p1 = frame.project(r1)?;
    let p2 = frame.project(r2)?;
    let p3 = frame.project(r3)?;
    let conic = fit_conic(&p1, &p2, &p3)?;
    let geom = geometry_from_conic(&conic)?;
    let (p_hat, q_hat) = match geom.periapsis_dir_2d {
        Some(d) => {
            let p_hat = frame.unproject_direction(d);
            (Some(p_hat), Some(frame.w.cross(&p_hat)))
        }
        None => (None, None),
    };
    Ok(OrbitGeometry {
        p_hat,
        q_hat,
        w_hat: frame.w,
        p: geom.p,
        e: geom.e,
        a: geom.a,
    })
}
