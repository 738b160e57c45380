//! Focus-at-origin conics.
//!
//! A conic with one focus pinned at the coordinate origin is fully described
//! by the triple (X, Y, Z²): the envelope of its tangent lines is a circle,
//! which forces the envelope matrix into a three-parameter form. (X, Y)
//! points from the focus toward periapsis; Z² is signed and classifies the
//! conic (positive: ellipse, zero: parabola, negative: hyperbola).

use nalgebra::Matrix3;

use crate::error::{OdError, Result};
use crate::orbit::E_CIRCULAR_TOL;

/// Relative threshold on |Z²| below which the conic is treated as parabolic
/// and the semi-major axis reported infinite.
pub const PARABOLA_TOL: f64 = 1e-12;

/// A conic with a focus at the origin, parameterized by (X, Y, Z²).
///
/// Units: `x` and `y` in km⁻¹, `zsq` in km⁻² (signed; negative values are
/// legitimate hyperbolic fits, not errors).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FocusConic {
    pub x: f64,
    pub y: f64,
    pub zsq: f64,
}

impl FocusConic {
    pub fn new(x: f64, y: f64, zsq: f64) -> Self {
        Self { x, y, zsq }
    }

    /// X² + Y² + Z², the quantity that must be positive for a real conic.
    pub fn quadrance(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.zsq
    }
}

/// In-plane geometric parameters extracted from a [`FocusConic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConicGeometry2D {
    /// Unit vector from focus to periapsis in the orbit plane; `None` for a
    /// (numerically) circular conic.
    pub periapsis_dir_2d: Option<[f64; 2]>,
    /// Semi-latus rectum, km.
    pub p: f64,
    /// Eccentricity.
    pub e: f64,
    /// Semi-major axis, km; negative for a hyperbola, infinite for a parabola.
    pub a: f64,
    /// Semi-minor axis, km; only defined for an ellipse.
    pub b: Option<f64>,
}

/// Envelope matrix C⁻¹: lines l tangent to the conic satisfy lᵀ C⁻¹ l = 0.
pub fn envelope_matrix(c: &FocusConic) -> Matrix3<f64> {
    Matrix3::new(
        1.0, 0.0, c.x, //
        0.0, 1.0, c.y, //
        c.x, c.y, -c.zsq,
    )
}

/// Locus matrix C: points x̄ on the conic satisfy x̄ᵀ C x̄ = 0.
pub fn locus_matrix(c: &FocusConic) -> Matrix3<f64> {
    let (x, y, zsq) = (c.x, c.y, c.zsq);
    Matrix3::new(
        -(y * y + zsq),
        x * y,
        -x,
        x * y,
        -(x * x + zsq),
        -y,
        -x,
        -y,
        1.0,
    )
}

/// Extract periapsis direction, p, e, a, b from the (X, Y, Z²) parameters.
pub fn geometry_from_conic(c: &FocusConic) -> Result<ConicGeometry2D> {
    let xy_sq = c.x * c.x + c.y * c.y;
    let q = xy_sq + c.zsq;
    if q <= 0.0 {
        return Err(OdError::InvalidConic);
    }
    let e = (xy_sq / q).sqrt();
    let p = 1.0 / q.sqrt();
    let periapsis_dir_2d = if e >= E_CIRCULAR_TOL {
        let n = xy_sq.sqrt();
        Some([c.x / n, c.y / n])
    } else {
        None
    };
    let a = if c.zsq.abs() < PARABOLA_TOL * xy_sq {
        f64::INFINITY
    } else {
        q.sqrt() / c.zsq
    };
    let b = if c.zsq > 0.0 { Some(1.0 / c.zsq.sqrt()) } else { None };
    Ok(ConicGeometry2D { periapsis_dir_2d, p, e, a, b })
}
