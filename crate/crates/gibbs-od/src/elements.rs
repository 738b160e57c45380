//! Keplerian elements and the purely geometric two-body generator used as
//! the round-trip oracle: true anomaly in, position out. No time propagation.
//!
//! Angle conventions: i in [0, pi]; raan and argp in [0, 2pi). When the node
//! is undefined (i = 0 or pi) raan is 0 and the node angle folds into argp;
//! for a circular orbit argp is 0.

use std::f64::consts::TAU;

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{OdError, Result};
use crate::orbit::{OrbitGeometry, E_CIRCULAR_TOL};

/// Classical orbital elements. `a` is negative for a hyperbola; angles in
/// radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeplerElements {
    /// Semi-major axis, km.
    pub a: f64,
    /// Eccentricity.
    pub e: f64,
    /// Inclination, rad, [0, pi].
    pub i: f64,
    /// Right ascension of the ascending node, rad, [0, 2pi).
    pub raan: f64,
    /// Argument of periapsis, rad, [0, 2pi).
    pub argp: f64,
}

fn wrap_tau(x: f64) -> f64 {
    let w = x % TAU;
    if w < 0.0 {
        w + TAU
    } else {
        w
    }
}

impl KeplerElements {
    /// Semi-latus rectum p = a (1 - e²).
    pub fn semi_latus_rectum(&self) -> f64 {
        self.a * (1.0 - self.e * self.e)
    }
}

/// Perifocal basis from the standard 3-1-3 rotation sequence (raan, i, argp).
pub fn elements_to_geometry(k: &KeplerElements) -> OrbitGeometry {
    let (so, co) = k.argp.sin_cos();
    let (s_raan, c_raan) = k.raan.sin_cos();
    let (si, ci) = k.i.sin_cos();
    let p_hat = Vector3::new(
        c_raan * co - s_raan * so * ci,
        s_raan * co + c_raan * so * ci,
        so * si,
    );
    let q_hat = Vector3::new(
        -c_raan * so - s_raan * co * ci,
        -s_raan * so + c_raan * co * ci,
        co * si,
    );
    let w_hat = Vector3::new(s_raan * si, -c_raan * si, ci);
    let circular = k.e < E_CIRCULAR_TOL;
    OrbitGeometry {
        p_hat: (!circular).then_some(p_hat),
        q_hat: (!circular).then_some(q_hat),
        w_hat,
        p: k.semi_latus_rectum(),
        e: k.e,
        a: k.a,
    }
}

/// Recover elements from a perifocal basis plus (p, e).
pub fn geometry_to_elements(g: &OrbitGeometry) -> KeplerElements {
    let w = g.w_hat;
    let i = w[2].clamp(-1.0, 1.0).acos();
    // Node vector z_hat x w_hat; undefined for an equatorial orbit.
    let node = Vector3::new(-w[1], w[0], 0.0);
    let (raan, node_dir) = if node.norm() > 1e-12 {
        let n = node.normalize();
        (wrap_tau(n[1].atan2(n[0])), n)
    } else {
        (0.0, Vector3::new(1.0, 0.0, 0.0))
    };
    let argp = match g.p_hat {
        Some(p_hat) => wrap_tau(node_dir.cross(&p_hat).dot(&w).atan2(node_dir.dot(&p_hat))),
        None => 0.0,
    };
    let a = if (1.0 - g.e * g.e).abs() < 1e-15 { f64::INFINITY } else { g.p / (1.0 - g.e * g.e) };
    KeplerElements { a, e: g.e, i, raan, argp }
}

fn radius_at(p: f64, e: f64, theta: f64) -> Result<f64> {
    let denom = 1.0 + e * theta.cos();
    if denom <= 0.0 {
        return Err(OdError::BeyondAsymptote);
    }
    Ok(p / denom)
}

/// Position on the orbit at true anomaly `theta`, from the polar equation
/// r = p / (1 + e cos theta).
pub fn position_at(k: &KeplerElements, theta: f64) -> Result<Vector3<f64>> {
    let g = elements_to_geometry(&KeplerElements { e: k.e.max(0.0), ..*k });
    let (p_hat, q_hat) = perifocal_axes(&g, k);
    let r = radius_at(k.semi_latus_rectum(), k.e, theta)?;
    Ok(r * (theta.cos() * p_hat + theta.sin() * q_hat))
}

/// Perifocal velocity: v = sqrt(mu/p) (-sin theta p_hat + (e + cos theta) q_hat).
pub fn velocity_at(k: &KeplerElements, theta: f64, mu: f64) -> Result<Vector3<f64>> {
    let g = elements_to_geometry(k);
    let (p_hat, q_hat) = perifocal_axes(&g, k);
    let p = k.semi_latus_rectum();
    radius_at(p, k.e, theta)?;
    Ok((mu / p).sqrt() * (-theta.sin() * p_hat + (k.e + theta.cos()) * q_hat))
}

// For a circular orbit the geometry carries no periapsis axis; anomalies are
// then measured from the node (or x-axis), matching the argp = 0 convention.
fn perifocal_axes(g: &OrbitGeometry, k: &KeplerElements) -> (Vector3<f64>, Vector3<f64>) {
    match (g.p_hat, g.q_hat) {
        (Some(p), Some(q)) => (p, q),
        _ => {
            let with_axis = elements_to_geometry(&KeplerElements { e: 0.5, ..*k });
            (with_axis.p_hat.unwrap(), with_axis.q_hat.unwrap())
        }
    }
}

/// True anomaly of a position: the angle from the periapsis direction,
/// measured in the orbit plane.
pub fn true_anomaly_of(g: &OrbitGeometry, r: &Vector3<f64>) -> Result<f64> {
    let (p_hat, q_hat) = match (g.p_hat, g.q_hat) {
        (Some(p), Some(q)) => (p, q),
        _ => return Err(OdError::CircularAmbiguity),
    };
    Ok(wrap_tau(q_hat.dot(r).atan2(p_hat.dot(r))))
}
