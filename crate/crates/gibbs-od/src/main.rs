use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gibbs_od::cli::{cmd_generate, cmd_locus, cmd_solve, CliError, Method, SolveRequest};
use gibbs_od::elements::{geometry_to_elements, KeplerElements};

const EXIT_CODES_HELP: &str = "Exit codes:
  0  success
  2  input parse / validation error
  3  collinear positions
  4  non-coplanar positions
  5  degenerate conic fit
  6  invalid conic or geometry";

#[derive(Parser)]
#[command(
    name = "gibbs-od",
    about = "Orbit determination from three position vectors (km), by the classical Gibbs vector method and/or a focus-constrained conic fit",
    after_help = EXIT_CODES_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Algebraic,
    Gibbs,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Algebraic => Method::Algebraic,
            MethodArg::Gibbs => Method::Gibbs,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Input file with the three positions.
    #[arg(long)]
    input: PathBuf,
    /// Input file format.
    #[arg(long, value_enum, default_value = "json")]
    format: InputFormat,
    /// Gravitational parameter, km^3/s^2 (overrides the input file).
    #[arg(long)]
    mu: Option<f64>,
    /// Solver selection (overrides the input file).
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Coplanarity tolerance on |w.r|/|r|.
    #[arg(long, default_value_t = gibbs_od::plane::COPLANARITY_TOL)]
    coplanarity_tol: f64,
    /// Human-readable output (angles in degrees) instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Include branch diagnostics in the report.
    #[arg(long)]
    diagnostics: bool,
}

#[derive(Args)]
struct ElementArgs {
    /// Semi-major axis, km (negative for a hyperbola).
    #[arg(long)]
    semi_major: f64,
    /// Eccentricity.
    #[arg(long)]
    ecc: f64,
    /// Inclination, degrees.
    #[arg(long, default_value_t = 0.0)]
    inc_deg: f64,
    /// Right ascension of the ascending node, degrees.
    #[arg(long, default_value_t = 0.0)]
    raan_deg: f64,
    /// Argument of periapsis, degrees.
    #[arg(long, default_value_t = 0.0)]
    argp_deg: f64,
}

impl ElementArgs {
    fn to_elements(&self) -> KeplerElements {
        KeplerElements {
            a: self.semi_major,
            e: self.ecc,
            i: self.inc_deg.to_radians(),
            raan: self.raan_deg.to_radians(),
            argp: self.argp_deg.to_radians(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve the three-position problem from an input file.
    Solve(SolveArgs),
    /// Solve with both methods and dump branch diagnostics.
    Compare(SolveArgs),
    /// Generate a synthetic input file from orbital elements.
    Generate {
        #[command(flatten)]
        elements: ElementArgs,
        /// Three true anomalies, degrees, comma-separated.
        #[arg(long, value_delimiter = ',')]
        anomalies_deg: Vec<f64>,
        /// Gravitational parameter to embed in the file, km^3/s^2.
        #[arg(long)]
        mu: Option<f64>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Export orbit-locus plot data as CSV.
    Locus {
        /// Input file with three positions; the orbit is solved first.
        #[arg(long, conflicts_with_all = ["semi_major", "ecc"])]
        input: Option<PathBuf>,
        /// Input file format.
        #[arg(long, value_enum, default_value = "json")]
        format: InputFormat,
        #[arg(long, required_unless_present = "input")]
        semi_major: Option<f64>,
        #[arg(long, required_unless_present = "input")]
        ecc: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        inc_deg: f64,
        #[arg(long, default_value_t = 0.0)]
        raan_deg: f64,
        #[arg(long, default_value_t = 0.0)]
        argp_deg: f64,
        /// Number of orbit samples.
        #[arg(long, default_value_t = 360)]
        samples: usize,
        #[arg(long, default_value_t = gibbs_od::plane::COPLANARITY_TOL)]
        coplanarity_tol: f64,
        /// Output path; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read_request(
    path: &PathBuf,
    format: InputFormat,
    mu: Option<f64>,
    method: Option<MethodArg>,
    coplanarity_tol: f64,
) -> Result<SolveRequest, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let mut req = match format {
        InputFormat::Json => SolveRequest::from_json(&text)?,
        InputFormat::Csv => SolveRequest::from_csv(&text)?,
    };
    if let Some(mu) = mu {
        if !(mu > 0.0) {
            return Err(CliError::Input("mu must be positive".into()));
        }
        req.mu = mu;
    }
    if let Some(m) = method {
        req.method = m.into();
    }
    req.coplanarity_tol = coplanarity_tol;
    Ok(req)
}

fn write_output(text: &str, output: Option<&PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_solve(args: &SolveArgs, force_compare: bool) -> Result<(), CliError> {
    let mut req = read_request(
        &args.input,
        args.format,
        args.mu,
        args.method,
        args.coplanarity_tol,
    )?;
    let diagnostics = args.diagnostics || force_compare;
    if force_compare {
        req.method = Method::Both;
    }
    let report = cmd_solve(&req, diagnostics)?;
    if args.pretty {
        print!("{}", report.to_pretty());
    } else {
        print!("{}", report.to_json());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve(args) => run_solve(args, false),
        Command::Compare(args) => run_solve(args, true),
        Command::Generate { elements, anomalies_deg, mu, output } => {
            if anomalies_deg.len() != 3 {
                return Err(CliError::Input("need exactly 3 anomalies".into()));
            }
            let anomalies = [
                anomalies_deg[0].to_radians(),
                anomalies_deg[1].to_radians(),
                anomalies_deg[2].to_radians(),
            ];
            let text = cmd_generate(&elements.to_elements(), anomalies, *mu)?;
            write_output(&text, output.as_ref())
        }
        Command::Locus {
            input,
            format,
            semi_major,
            ecc,
            inc_deg,
            raan_deg,
            argp_deg,
            samples,
            coplanarity_tol,
            output,
        } => {
            let text = match input {
                Some(path) => {
                    let req = read_request(path, *format, None, None, *coplanarity_tol)?;
                    let [r1, r2, r3] = &req.positions;
                    let geom = gibbs_od::algebraic::solve_with_tol(r1, r2, r3, *coplanarity_tol)?;
                    let k = geometry_to_elements(&geom);
                    cmd_locus(&k, Some((&geom, &req.positions)), *samples)?
                }
                None => {
                    let k = KeplerElements {
                        a: semi_major.unwrap(),
                        e: ecc.unwrap(),
                        i: inc_deg.to_radians(),
                        raan: raan_deg.to_radians(),
                        argp: argp_deg.to_radians(),
                    };
                    cmd_locus(&k, None, *samples)?
                }
            };
            write_output(&text, output.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
