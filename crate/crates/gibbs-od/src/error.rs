use thiserror::Error;

/// Errors produced by the solvers and their geometric building blocks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OdError {
    /// Two lines are projectively identical; their intersection is undefined.
    #[error("degenerate intersection: lines are projectively identical")]
    DegenerateIntersection,

    /// Dehomogenization requested for a point at (or numerically near) infinity.
    #[error("point at infinity: homogeneous third component vanishes")]
    PointAtInfinity,

    /// The fitted (X, Y, Z²) triple does not describe a real conic.
    #[error("invalid conic: X^2 + Y^2 + Z^2 must be positive")]
    InvalidConic,

    /// The position vectors are collinear with the focus; no plane is defined.
    #[error("collinear positions: r1 x r2 vanishes")]
    CollinearPositions,

    /// A position lies out of the orbit plane beyond the coplanarity tolerance.
    #[error("non-coplanar positions: |w.r|/|r| = {out_of_plane:e} exceeds tolerance {tol:e}")]
    NonCoplanar { out_of_plane: f64, tol: f64 },

    /// Two of the three planar points coincide.
    #[error("duplicate points in the planar configuration")]
    DuplicatePoints,

    /// The three points admit no focus-at-origin conic (intersection failure).
    #[error("degenerate configuration: conic fit has no solution")]
    DegenerateConfiguration,

    /// Gibbs validity check N.D <= 0 failed, or intermediates are unusable.
    #[error("invalid geometry: Gibbs intermediates fail the N.D > 0 check")]
    InvalidGeometry,

    /// True anomaly lies beyond the asymptote of a hyperbolic orbit.
    #[error("beyond asymptote: 1 + e cos(theta) <= 0")]
    BeyondAsymptote,

    /// Periapsis direction is undefined for a (numerically) circular orbit.
    #[error("circular orbit: true anomaly from periapsis is ambiguous")]
    CircularAmbiguity,
}

pub type Result<T> = std::result::Result<T, OdError>;
