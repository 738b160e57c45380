//! Request/report types and file formats behind the `gibbs-od` binary.
//!
//! Reports are rendered with a fixed field order and every float printed
//! with 17 significant digits, so identical inputs produce byte-identical
//! output. Non-finite values (the parabolic semi-major axis) render as
//! `null`.

use nalgebra::Vector3;
use serde::Deserialize;

use crate::algebraic::{self, branch_diagnostics, fit_conic, BranchDiagnostics};
use crate::conic::FocusConic;
use crate::elements::{geometry_to_elements, true_anomaly_of, velocity_at, KeplerElements};
use crate::error::OdError;
use crate::gibbs::{gibbs_geometry, gibbs_intermediates_with_tol, gibbs_velocity};
use crate::orbit::OrbitGeometry;
use crate::plane::{build_frame_with_tol, COPLANARITY_TOL};
use crate::MU_EARTH;

/// Which solver(s) to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Algebraic,
    Gibbs,
    #[default]
    Both,
}

impl Method {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "algebraic" => Ok(Self::Algebraic),
            "gibbs" => Ok(Self::Gibbs),
            "both" => Ok(Self::Both),
            other => Err(CliError::Input(format!("unknown method '{other}'"))),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Self::Algebraic => "algebraic",
            Self::Gibbs => "gibbs",
            Self::Both => "both",
        }
    }
}

/// A fully validated solve request.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveRequest {
    pub positions: [Vector3<f64>; 3],
    pub mu: f64,
    pub method: Method,
    pub coplanarity_tol: f64,
}

/// Errors surfaced by the CLI, each with a documented exit code.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Input(String),
    Solver(OdError),
}

impl CliError {
    /// 0 ok; 2 input parse; 3 collinear; 4 non-coplanar; 5 degenerate fit;
    /// 6 invalid conic/geometry.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) => 2,
            Self::Solver(e) => match e {
                OdError::CollinearPositions => 3,
                OdError::NonCoplanar { .. } => 4,
                OdError::DegenerateIntersection
                | OdError::PointAtInfinity
                | OdError::DuplicatePoints
                | OdError::DegenerateConfiguration => 5,
                OdError::InvalidConic | OdError::InvalidGeometry => 6,
                // Generation-time input problems.
                OdError::BeyondAsymptote | OdError::CircularAmbiguity => 2,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Input(msg) => write!(f, "input error: {msg}"),
            Self::Solver(e) => write!(f, "solver error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<OdError> for CliError {
    fn from(e: OdError) -> Self {
        Self::Solver(e)
    }
}

#[derive(Deserialize)]
struct RawRequest {
    positions: Vec<[f64; 3]>,
    mu: Option<f64>,
    method: Option<String>,
}

fn validate_positions(rows: &[[f64; 3]]) -> Result<[Vector3<f64>; 3], CliError> {
    if rows.len() != 3 {
        return Err(CliError::Input(format!("expected exactly 3 positions, got {}", rows.len())));
    }
    let mut out = [Vector3::zeros(); 3];
    for (i, row) in rows.iter().enumerate() {
        if row.iter().any(|v| !v.is_finite()) {
            return Err(CliError::Input(format!("position {} has a non-finite component", i + 1)));
        }
        out[i] = Vector3::new(row[0], row[1], row[2]);
    }
    Ok(out)
}

impl SolveRequest {
    /// Parse the JSON input format:
    /// `{"mu": number?, "positions": [[x,y,z],...], "method": string?}`.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let raw: RawRequest =
            serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        let positions = validate_positions(&raw.positions)?;
        let mu = raw.mu.unwrap_or(MU_EARTH);
        if !(mu > 0.0) {
            return Err(CliError::Input("mu must be positive".into()));
        }
        let method = raw.method.as_deref().map(Method::parse).transpose()?.unwrap_or_default();
        Ok(Self { positions, mu, method, coplanarity_tol: COPLANARITY_TOL })
    }

    /// Parse the CSV alternative: three rows of `x,y,z` in km.
    pub fn from_csv(text: &str) -> Result<Self, CliError> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(CliError::Input(format!("expected 3 fields per row, got {}", fields.len())));
            }
            let mut row = [0.0; 3];
            for (slot, f) in row.iter_mut().zip(&fields) {
                *slot = f.parse().map_err(|_| CliError::Input(format!("bad number '{f}'")))?;
            }
            rows.push(row);
        }
        let positions = validate_positions(&rows)?;
        Ok(Self { positions, mu: MU_EARTH, method: Method::default(), coplanarity_tol: COPLANARITY_TOL })
    }
}

/// One solver's output.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodReport {
    pub geometry: OrbitGeometry,
    pub elements: KeplerElements,
    /// Velocity at each input position, km/s.
    pub velocities: [Vector3<f64>; 3],
    /// Algebraic method only.
    pub conic: Option<FocusConic>,
    pub diagnostics: Option<BranchDiagnostics>,
}

/// Cross-method agreement when both solvers run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discrepancy {
    pub p_rel: f64,
    pub e_rel: f64,
    pub a_rel: f64,
    /// |1 - p_hat . p_hat'|; 0 when either orbit is circular.
    pub p_hat_dev: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub mu: f64,
    pub method: Method,
    pub algebraic: Option<MethodReport>,
    pub gibbs: Option<MethodReport>,
    pub discrepancy: Option<Discrepancy>,
}

fn velocities_from_elements(
    g: &OrbitGeometry,
    positions: &[Vector3<f64>; 3],
    mu: f64,
) -> Result<[Vector3<f64>; 3], CliError> {
    let k = geometry_to_elements(g);
    let mut out = [Vector3::zeros(); 3];
    for (slot, r) in out.iter_mut().zip(positions) {
        let theta = match true_anomaly_of(g, r) {
            Ok(t) => t,
            // Circular orbit: measure from the conventional axis.
            Err(OdError::CircularAmbiguity) => {
                let axis = crate::elements::elements_to_geometry(&KeplerElements { e: 0.5, ..k });
                let p_hat = axis.p_hat.unwrap();
                let q_hat = axis.q_hat.unwrap();
                q_hat.dot(r).atan2(p_hat.dot(r))
            }
            Err(e) => return Err(e.into()),
        };
        *slot = velocity_at(&k, theta, mu)?;
    }
    Ok(out)
}

fn solve_algebraic(req: &SolveRequest, want_diagnostics: bool) -> Result<MethodReport, CliError> {
    let [r1, r2, r3] = &req.positions;
    let frame = build_frame_with_tol(r1, r2, r3, req.coplanarity_tol)?;
    let p1 = frame.project(r1)?;
    let p2 = frame.project(r2)?;
    let p3 = frame.project(r3)?;
    let conic = fit_conic(&p1, &p2, &p3)?;
    let geometry = algebraic::solve_with_tol(r1, r2, r3, req.coplanarity_tol)?;
    let diagnostics =
        if want_diagnostics { Some(branch_diagnostics(&p1, &p2, &p3)?) } else { None };
    Ok(MethodReport {
        geometry,
        elements: geometry_to_elements(&geometry),
        velocities: velocities_from_elements(&geometry, &req.positions, req.mu)?,
        conic: Some(conic),
        diagnostics,
    })
}

fn solve_gibbs(req: &SolveRequest) -> Result<MethodReport, CliError> {
    let [r1, r2, r3] = &req.positions;
    let g = gibbs_intermediates_with_tol(r1, r2, r3, req.coplanarity_tol)?;
    let geometry = gibbs_geometry(&g)?;
    let mut velocities = [Vector3::zeros(); 3];
    for (slot, r) in velocities.iter_mut().zip(&req.positions) {
        *slot = gibbs_velocity(&g, r, req.mu)?;
    }
    Ok(MethodReport {
        geometry,
        elements: geometry_to_elements(&geometry),
        velocities,
        conic: None,
        diagnostics: None,
    })
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Run the requested solver(s).
pub fn cmd_solve(req: &SolveRequest, want_diagnostics: bool) -> Result<SolveReport, CliError> {
    let algebraic = match req.method {
        Method::Algebraic | Method::Both => Some(solve_algebraic(req, want_diagnostics)?),
        Method::Gibbs => None,
    };
    let gibbs = match req.method {
        Method::Gibbs | Method::Both => Some(solve_gibbs(req)?),
        Method::Algebraic => None,
    };
    let discrepancy = match (&algebraic, &gibbs) {
        (Some(a), Some(g)) => {
            let ga = &a.geometry;
            let gg = &g.geometry;
            let p_hat_dev = match (ga.p_hat, gg.p_hat) {
                (Some(pa), Some(pg)) => (1.0 - pa.dot(&pg)).abs(),
                _ => 0.0,
            };
            let p_rel = rel(ga.p, gg.p);
            let e_rel = rel(ga.e, gg.e);
            let a_rel = rel(ga.a, gg.a);
            let max = p_rel.max(e_rel).max(a_rel).max(p_hat_dev);
            Some(Discrepancy { p_rel, e_rel, a_rel, p_hat_dev, max })
        }
        _ => None,
    };
    Ok(SolveReport { mu: req.mu, method: req.method, algebraic, gibbs, discrepancy })
}

/// Generate the three positions for a synthetic case, in request-file form.
pub fn cmd_generate(
    k: &KeplerElements,
    anomalies: [f64; 3],
    mu: Option<f64>,
) -> Result<String, CliError> {
    let mut positions = [Vector3::zeros(); 3];
    for (slot, theta) in positions.iter_mut().zip(anomalies) {
        *slot = crate::elements::position_at(k, theta)?;
    }
    let mut out = String::from("{\n");
    if let Some(mu) = mu {
        out.push_str(&format!("  \"mu\": {},\n", fmt_f64(mu)));
    }
    out.push_str("  \"positions\": [\n");
    for (i, r) in positions.iter().enumerate() {
        out.push_str(&format!("    {}{}\n", fmt_vec3(r), if i < 2 { "," } else { "" }));
    }
    out.push_str("  ],\n  \"method\": \"both\"\n}\n");
    Ok(out)
}

/// Sample the orbit locus as CSV: `theta_rad,x_km,y_km,z_km`, one row per
/// sample plus one per measurement point when positions are given.
pub fn cmd_locus(
    k: &KeplerElements,
    measurements: Option<(&OrbitGeometry, &[Vector3<f64>; 3])>,
    n_samples: usize,
) -> Result<String, CliError> {
    if n_samples < 2 {
        return Err(CliError::Input("need at least 2 locus samples".into()));
    }
    let mut out = String::from("theta_rad,x_km,y_km,z_km\n");
    let thetas: Vec<f64> = if k.e < 1.0 {
        (0..n_samples)
            .map(|i| i as f64 * std::f64::consts::TAU / n_samples as f64)
            .collect()
    } else {
        // Interior of the physical branch, asymptotes excluded.
        let theta_inf = (-1.0 / k.e).acos();
        (0..n_samples)
            .map(|i| -theta_inf + (i + 1) as f64 * 2.0 * theta_inf / (n_samples + 1) as f64)
            .collect()
    };
    for theta in thetas {
        let r = crate::elements::position_at(k, theta)?;
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(theta),
            fmt_f64(r[0]),
            fmt_f64(r[1]),
            fmt_f64(r[2])
        ));
    }
    if let Some((g, positions)) = measurements {
        for r in positions.iter() {
            let theta = true_anomaly_of(g, r).unwrap_or(0.0);
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt_f64(theta),
                fmt_f64(r[0]),
                fmt_f64(r[1]),
                fmt_f64(r[2])
            ));
        }
    }
    Ok(out)
}

// ── Report rendering ────────────────────────────────────────────────────

/// 17 significant digits; non-finite renders as JSON null.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn fmt_vec3(v: &Vector3<f64>) -> String {
    format!("[{}, {}, {}]", fmt_f64(v[0]), fmt_f64(v[1]), fmt_f64(v[2]))
}

fn fmt_opt_vec3(v: &Option<Vector3<f64>>) -> String {
    match v {
        Some(v) => fmt_vec3(v),
        None => "null".to_string(),
    }
}

fn render_method(out: &mut String, name: &str, m: &MethodReport, indent: &str) {
    out.push_str(&format!("{indent}\"{name}\": {{\n"));
    let g = &m.geometry;
    out.push_str(&format!("{indent}  \"geometry\": {{\n"));
    out.push_str(&format!("{indent}    \"p_hat\": {},\n", fmt_opt_vec3(&g.p_hat)));
    out.push_str(&format!("{indent}    \"q_hat\": {},\n", fmt_opt_vec3(&g.q_hat)));
    out.push_str(&format!("{indent}    \"w_hat\": {},\n", fmt_vec3(&g.w_hat)));
    out.push_str(&format!("{indent}    \"p\": {},\n", fmt_f64(g.p)));
    out.push_str(&format!("{indent}    \"e\": {},\n", fmt_f64(g.e)));
    out.push_str(&format!("{indent}    \"a\": {}\n", fmt_f64(g.a)));
    out.push_str(&format!("{indent}  }},\n"));
    let k = &m.elements;
    out.push_str(&format!("{indent}  \"elements\": {{\n"));
    out.push_str(&format!("{indent}    \"a\": {},\n", fmt_f64(k.a)));
    out.push_str(&format!("{indent}    \"e\": {},\n", fmt_f64(k.e)));
    out.push_str(&format!("{indent}    \"i\": {},\n", fmt_f64(k.i)));
    out.push_str(&format!("{indent}    \"raan\": {},\n", fmt_f64(k.raan)));
    out.push_str(&format!("{indent}    \"argp\": {}\n", fmt_f64(k.argp)));
    out.push_str(&format!("{indent}  }},\n"));
    out.push_str(&format!(
        "{indent}  \"velocities\": [{}, {}, {}]",
        fmt_vec3(&m.velocities[0]),
        fmt_vec3(&m.velocities[1]),
        fmt_vec3(&m.velocities[2])
    ));
    if let Some(c) = &m.conic {
        out.push_str(&format!(
            ",\n{indent}  \"conic\": {{ \"x\": {}, \"y\": {}, \"zsq\": {} }}",
            fmt_f64(c.x),
            fmt_f64(c.y),
            fmt_f64(c.zsq)
        ));
    }
    if let Some(d) = &m.diagnostics {
        out.push_str(&format!(
            ",\n{indent}  \"diagnostics\": {{ \"k1\": {}, \"k2\": {}, \"k3\": {}, \"consistent\": [{}, {}, {}, {}] }}",
            fmt_f64(d.k1),
            fmt_f64(d.k2),
            fmt_f64(d.k3),
            d.consistent[0],
            d.consistent[1],
            d.consistent[2],
            d.consistent[3]
        ));
    }
    out.push_str(&format!("\n{indent}}}"));
}

impl SolveReport {
    /// Deterministic machine-readable JSON.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"mu\": {},\n", fmt_f64(self.mu)));
        out.push_str(&format!("  \"method\": \"{}\"", self.method.name()));
        if let Some(a) = &self.algebraic {
            out.push_str(",\n");
            render_method(&mut out, "algebraic", a, "  ");
        }
        if let Some(g) = &self.gibbs {
            out.push_str(",\n");
            render_method(&mut out, "gibbs", g, "  ");
        }
        if let Some(d) = &self.discrepancy {
            out.push_str(&format!(
                ",\n  \"discrepancy\": {{ \"p_rel\": {}, \"e_rel\": {}, \"a_rel\": {}, \"p_hat_dev\": {}, \"max\": {} }}",
                fmt_f64(d.p_rel),
                fmt_f64(d.e_rel),
                fmt_f64(d.a_rel),
                fmt_f64(d.p_hat_dev),
                fmt_f64(d.max)
            ));
        }
        out.push_str("\n}\n");
        out
    }

    /// Human-readable table; angles in degrees.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("mu = {} km^3/s^2\n", self.mu));
        for (name, m) in [("algebraic", &self.algebraic), ("gibbs", &self.gibbs)] {
            let Some(m) = m else { continue };
            let g = &m.geometry;
            let k = &m.elements;
            out.push_str(&format!("\n[{name}]\n"));
            out.push_str(&format!("  a    = {:14.4} km\n", g.a));
            out.push_str(&format!("  e    = {:14.6}\n", g.e));
            out.push_str(&format!("  p    = {:14.4} km\n", g.p));
            out.push_str(&format!("  i    = {:14.4} deg\n", k.i.to_degrees()));
            out.push_str(&format!("  raan = {:14.4} deg\n", k.raan.to_degrees()));
            out.push_str(&format!("  argp = {:14.4} deg\n", k.argp.to_degrees()));
            match g.p_hat {
                Some(p) => out.push_str(&format!(
                    "  p_hat = [{:9.4}, {:9.4}, {:9.4}]\n",
                    p[0], p[1], p[2]
                )),
                None => out.push_str("  p_hat = (circular: undefined)\n"),
            }
            out.push_str(&format!(
                "  w_hat = [{:9.4}, {:9.4}, {:9.4}]\n",
                g.w_hat[0], g.w_hat[1], g.w_hat[2]
            ));
            for (i, v) in m.velocities.iter().enumerate() {
                out.push_str(&format!(
                    "  v{}   = [{:10.5}, {:10.5}, {:10.5}] km/s\n",
                    i + 1,
                    v[0],
                    v[1],
                    v[2]
                ));
            }
            if let Some(d) = &m.diagnostics {
                out.push_str(&format!(
                    "  branch: K1={:.4e} K2={:.4e} K3={:.4e} consistent={:?}\n",
                    d.k1, d.k2, d.k3, d.consistent
                ));
            }
        }
        if let Some(d) = &self.discrepancy {
            out.push_str(&format!("\nmax cross-method discrepancy: {:.3e}\n", d.max));
        }
        out
    }
}
