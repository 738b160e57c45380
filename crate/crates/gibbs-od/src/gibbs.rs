//! Classical vector solution of the three-position orbit determination
//! problem (Bate, Mueller, and White), used here both as a user-selectable
//! solver and as an independent cross-check of the algebraic path.

use nalgebra::Vector3;

use crate::error::{OdError, Result};
use crate::orbit::{OrbitGeometry, E_CIRCULAR_TOL};
use crate::plane::{build_frame_with_tol, COPLANARITY_TOL};

/// The intermediate vectors N (km³), D (km²), S (km²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GibbsIntermediates {
    pub n: Vector3<f64>,
    pub d: Vector3<f64>,
    pub s: Vector3<f64>,
    /// Largest input radius, kept for the circular-case scale check.
    scale: f64,
}

/// Compute N, D, S from three coplanar positions.
///
/// N = r1 (r2 x r3) + r2 (r3 x r1) + r3 (r1 x r2),
/// D = r1 x r2 + r2 x r3 + r3 x r1,
/// S = (r2 - r3) r1 + (r3 - r1) r2 + (r1 - r2) r3,
/// with scalars being the vector norms. N.D <= 0 rejects mislabeled or
/// retrograde-ordered inputs.
pub fn gibbs_intermediates(
    r1: &Vector3<f64>,
    r2: &Vector3<f64>,
    r3: &Vector3<f64>,
) -> Result<GibbsIntermediates> {
    gibbs_intermediates_with_tol(r1, r2, r3, COPLANARITY_TOL)
}

pub fn gibbs_intermediates_with_tol(
    r1: &Vector3<f64>,
    r2: &Vector3<f64>,
    r3: &Vector3<f64>,
    coplanarity_tol: f64,
) -> Result<GibbsIntermediates> {
    // Reuse the plane checks: collinearity and coplanarity.
    build_frame_with_tol(r1, r2, r3, coplanarity_tol)?;
    let (m1, m2, m3) = (r1.norm(), r2.norm(), r3.norm());
    let n = m1 * r2.cross(r3) + m2 * r3.cross(r1) + m3 * r1.cross(r2);
    let d = r1.cross(r2) + r2.cross(r3) + r3.cross(r1);
    let s = (m2 - m3) * r1 + (m3 - m1) * r2 + (m1 - m2) * r3;
    if n.dot(&d) <= 0.0 {
        return Err(OdError::InvalidGeometry);
    }
    Ok(GibbsIntermediates { n, d, s, scale: m1.max(m2).max(m3) })
}

/// Velocity at one of the input positions: v = sqrt(mu/(N D)) (D x r / r + S).
pub fn gibbs_velocity(g: &GibbsIntermediates, r: &Vector3<f64>, mu: f64) -> Result<Vector3<f64>> {
    let nd = g.n.norm() * g.d.norm();
    if nd <= 0.0 {
        return Err(OdError::InvalidGeometry);
    }
    Ok((mu / nd).sqrt() * (g.d.cross(r) / r.norm() + g.s))
}

/// Perifocal basis and conic scalars from the intermediates:
/// p_hat = (S x N)/(S N), q_hat = S/S, w_hat = N/N, p = N/D, e = S/D.
pub fn gibbs_geometry(g: &GibbsIntermediates) -> Result<OrbitGeometry> {
    let (n_mag, d_mag, s_mag) = (g.n.norm(), g.d.norm(), g.s.norm());
    if n_mag == 0.0 || d_mag == 0.0 {
        return Err(OdError::InvalidGeometry);
    }
    let w_hat = g.n / n_mag;
    let p = n_mag / d_mag;
    let e = s_mag / d_mag;
    let circular = s_mag <= E_CIRCULAR_TOL * d_mag * g.scale;
    let (p_hat, q_hat) = if circular {
        (None, None)
    } else {
        (Some(g.s.cross(&g.n) / (s_mag * n_mag)), Some(g.s / s_mag))
    };
    let a = if (1.0 - e * e).abs() < 1e-15 { f64::INFINITY } else { p / (1.0 - e * e) };
    Ok(OrbitGeometry { p_hat, q_hat, w_hat, p, e, a })
}
