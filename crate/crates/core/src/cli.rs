//! Command-line front end. Every subcommand writes CSV (or JSON for `sector`)
//! to `--out` or standard output.
//!
//! Exit codes: 0 on success, 1 on a numerical or domain failure, 2 on a usage
//! error.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::airy;
use crate::completeness::{abel_sum, completeness_verdict, expand, partial_sum_error};
use crate::error::Error;
use crate::grid::{Grid, DEFAULT_ORDER};
use crate::operator::AiryOperator;
use crate::resolvent::{fmt_f64, pseudospectrum_grid, Region};
use crate::sources::SourceSpec;

pub const THREADS_ENV: &str = "AIRY_SPECTRA_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERIC: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "airy-spectra", version, about = "Spectral toolkit for -y'' + c x y on the half-line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ai or U and its derivative at a complex point.
    Airy {
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long = "fn", value_enum, default_value = "ai")]
        which: Which,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The first n eigenvalues `t_n c^{2/3}`.
    Spectrum {
        #[command(flatten)]
        common: Common,
    },
    /// `1/||(L_c - lambda)^{-1}||` over a rectangle.
    Pseudospectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_region, allow_hyphen_values = true)]
        region: Region,
        #[arg(long, value_parser = parse_resolution, default_value = "20,20")]
        res: (usize, usize),
    },
    /// Sector geometry report for `arg c`.
    Sector {
        /// The angle itself; defaults to `arg c`.
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<f64>,
        #[command(flatten)]
        common: Common,
    },
    /// Biorthogonal expansion coefficients with the partial-sum residual.
    Expand {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
    },
    /// The Abel-regularized sum `S(t, f)` sampled on the grid.
    Abel {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        t: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Ai,
    U,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_parser = parse_complex, default_value = "1+0i", allow_hyphen_values = true)]
    pub c: Complex64,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Quadrature node count.
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Truncation point of the half-line.
    #[arg(long)]
    pub xmax: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// `xexp`, `gauss`, `eig:k`, `rand` or a CSV file of `x,re[,im]` samples.
    #[arg(long = "f", default_value = "xexp")]
    pub f: SourceSpec,
}

/// Validated run parameters shared by the numerical subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub c: Complex64,
    pub grid: GridConfig,
    pub tolerances: Tolerances,
    pub output_path: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridConfig {
    pub x_max: Option<f64>,
    pub n_nodes: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub quadrature: f64,
    pub newton: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            quadrature: 1e-10,
            newton: 1e-12,
        }
    }
}

impl RunConfig {
    pub fn from_common(common: &Common) -> Result<Self, String> {
        let cfg = RunConfig {
            c: common.c,
            grid: GridConfig {
                x_max: common.xmax,
                n_nodes: common.nodes,
            },
            tolerances: Tolerances::default(),
            output_path: common.out.clone(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), String> {
        if let Some(n) = self.grid.n_nodes {
            if n < 16 {
                return Err(format!("--nodes {n} is below 16"));
            }
        }
        if let Some(x) = self.grid.x_max {
            if !(x > 0.0 && x.is_finite()) {
                return Err(format!("--xmax {x} must be positive"));
            }
        }
        for (name, t) in [("quadrature", self.tolerances.quadrature), ("newton", self.tolerances.newton)] {
            if !(t > 0.0 && t < 1e-2) {
                return Err(format!("{name} tolerance {t} outside (0, 1e-2)"));
            }
        }
        Ok(())
    }

    pub fn operator(&self) -> Result<AiryOperator, String> {
        AiryOperator::new(self.c).map_err(|e| e.to_string())
    }

    /// The grid for modes `1..=n_modes`, overridden by `--xmax`/`--nodes`.
    fn grid(&self, op: &AiryOperator, n_modes: usize) -> Result<Arc<Grid>, Error> {
        match (self.grid.x_max, self.grid.n_nodes) {
            (None, None) => op.grid_for_modes(n_modes),
            (x, n) => {
                let x_max = match x {
                    Some(x) => x,
                    None => op.default_truncation(n_modes)?,
                };
                let n_nodes = n.unwrap_or_else(|| op.grid_for_modes(n_modes).map(|g| g.len()).unwrap_or(1024));
                Ok(Arc::new(Grid::with_node_count(x_max, n_nodes, DEFAULT_ORDER)?))
            }
        }
    }
}

/// Parses `re+imi`, `re-imi`, `re` or `imi`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse {s:?} as a complex number re+imi");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse().map_err(|_| bad())?,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

fn parse_floats<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("expected {N} comma-separated numbers, got {s:?}"))?;
    v.try_into().map_err(|_| format!("expected {N} comma-separated numbers, got {s:?}"))
}

pub fn parse_region(s: &str) -> Result<Region, String> {
    let [re0, re1, im0, im1] = parse_floats::<4>(s)?;
    Region::new(re0, re1, im0, im1).map_err(|e| e.to_string())
}

pub fn parse_resolution(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("expected nx,ny, got {s:?}"))?;
    match parts[..] {
        [nx, ny] if nx >= 2 && ny >= 2 => Ok((nx, ny)),
        _ => Err(format!("resolution {s:?} must be nx,ny with both at least 2")),
    }
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Numeric(e.to_string())
    }
}

fn usage(e: String) -> Failure {
    Failure::Usage(e)
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Diagnostics go to standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("error: {msg}");
            EXIT_NUMERIC
        }
    }
}

fn emit(path: Option<&PathBuf>, body: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let n = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("{THREADS_ENV}={v:?} is not a thread count")))?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .map_err(|e| Failure::Numeric(e.to_string()))
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Airy { z, which, out } => {
            let v = match which {
                Which::Ai => airy::ai(z)?,
                Which::U => airy::u(z)?,
            };
            let body = format!(
                "value_re,value_im,derivative_re,derivative_im\n{},{},{},{}\n",
                fmt_f64(v.value.re),
                fmt_f64(v.value.im),
                fmt_f64(v.derivative.re),
                fmt_f64(v.derivative.im)
            );
            emit(out.as_ref(), &body)
        }
        Command::Spectrum { common } => {
            let cfg = RunConfig::from_common(&common).map_err(usage)?;
            let op = cfg.operator().map_err(usage)?;
            let s = op.spectrum(common.n as usize)?;
            let mut body = String::from("n,t_n,re_lambda,im_lambda\n");
            for (k, (t, l)) in s.t.iter().zip(&s.lambda).enumerate() {
                body += &format!("{},{},{},{}\n", k + 1, fmt_f64(*t), fmt_f64(l.re), fmt_f64(l.im));
            }
            emit(cfg.output_path.as_ref(), &body)
        }
        Command::Pseudospectrum { common, region, res } => {
            let cfg = RunConfig::from_common(&common).map_err(usage)?;
            let op = cfg.operator().map_err(usage)?;
            let n_nodes = cfg.grid.n_nodes.unwrap_or(256);
            if n_nodes < 64 {
                return Err(usage(format!("--nodes {n_nodes} is below 64 for resolvent norms")));
            }
            let pool = thread_pool()?;
            let grid = pool.install(|| pseudospectrum_grid(&op, region, res, n_nodes))?;
            let mut buf = Vec::new();
            grid.write_csv(&mut buf)?;
            emit(cfg.output_path.as_ref(), &String::from_utf8_lossy(&buf))
        }
        Command::Sector { gamma, common } => {
            let cfg = RunConfig::from_common(&common).map_err(usage)?;
            let gamma = match gamma {
                Some(g) => g,
                None => cfg.operator().map_err(usage)?.gamma(),
            };
            if !(gamma.abs() < PI) {
                return Err(usage(format!("gamma = {gamma} must satisfy |gamma| < pi")));
            }
            let report = completeness_verdict(gamma)?;
            emit(cfg.output_path.as_ref(), &(report.to_json() + "\n"))
        }
        Command::Expand { common, source } => {
            let cfg = RunConfig::from_common(&common).map_err(usage)?;
            let op = cfg.operator().map_err(usage)?;
            let n = common.n as usize;
            let grid = cfg.grid(&op, n)?;
            let f = source.f.sample(&op, &grid, common.seed)?;
            let a = expand(&op, &f, n)?;
            let mut body = String::from("k,re_a,im_a,residual\n");
            for (k, c) in a.coeffs.iter().enumerate() {
                let r = partial_sum_error(&op, &f, k + 1)?;
                body += &format!("{},{},{},{}\n", k + 1, fmt_f64(c.re), fmt_f64(c.im), fmt_f64(r));
            }
            emit(cfg.output_path.as_ref(), &body)
        }
        Command::Abel { common, source, beta, t } => {
            let cfg = RunConfig::from_common(&common).map_err(usage)?;
            let op = cfg.operator().map_err(usage)?;
            let n = common.n as usize;
            let grid = cfg.grid(&op, n)?;
            let f = source.f.sample(&op, &grid, common.seed)?;
            let s = abel_sum(&op, &f, t, beta, n)?;
            let mut body = String::from("x,re,im\n");
            for (x, v) in s.nodes().iter().zip(s.values()) {
                body += &format!("{},{},{}\n", fmt_f64(*x), fmt_f64(v.re), fmt_f64(v.im));
            }
            emit(cfg.output_path.as_ref(), &body)
        }
    }
}
