//! Test functions on a grid: built-in families, seeded random bumps and
//! sampled data read from CSV.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::{Grid, GridFunction};
use crate::operator::AiryOperator;

#[derive(Debug, Clone, PartialEq)]
pub enum SourceSpec {
    /// `x e^{-x}`
    XExp,
    /// `x e^{-x^2}`
    Gauss,
    /// The eigenfunction `y_k`.
    Eigen(usize),
    /// A seeded sum of smooth compactly supported bumps.
    Random,
    /// Samples `x,re[,im]` from a CSV file, linearly interpolated.
    File(PathBuf),
}

impl FromStr for SourceSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "xexp" => Ok(SourceSpec::XExp),
            "gauss" => Ok(SourceSpec::Gauss),
            "rand" => Ok(SourceSpec::Random),
            _ => {
                if let Some(k) = s.strip_prefix("eig:") {
                    let k: usize = k.parse().map_err(|_| format!("bad mode index in {s:?}"))?;
                    if k == 0 {
                        return Err("mode indices start at 1".into());
                    }
                    Ok(SourceSpec::Eigen(k))
                } else if s.is_empty() {
                    Err("empty source description".into())
                } else {
                    Ok(SourceSpec::File(PathBuf::from(s)))
                }
            }
        }
    }
}

impl fmt::Display for SourceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SourceSpec::XExp => write!(f, "xexp"),
            SourceSpec::Gauss => write!(f, "gauss"),
            SourceSpec::Eigen(k) => write!(f, "eig:{k}"),
            SourceSpec::Random => write!(f, "rand"),
            SourceSpec::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl SourceSpec {
    pub fn sample(&self, op: &AiryOperator, grid: &Arc<Grid>, seed: u64) -> Result<GridFunction> {
        match self {
            SourceSpec::XExp => Ok(GridFunction::sample(grid.clone(), |x| Complex64::new(x * (-x).exp(), 0.0))),
            SourceSpec::Gauss => Ok(GridFunction::sample(grid.clone(), |x| {
                Complex64::new(x * (-x * x).exp(), 0.0)
            })),
            SourceSpec::Eigen(k) => op.eigenmode(*k)?.sample_checked(grid),
            SourceSpec::Random => {
                let bumps = RandomBumps::new(seed, grid.x_max().min(10.0));
                Ok(GridFunction::sample(grid.clone(), |x| bumps.eval(x)))
            }
            SourceSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
                let table = SampleTable::parse(&text)?;
                Ok(GridFunction::sample(grid.clone(), |x| table.eval(x)))
            }
        }
    }
}

/// `phi(u) = exp(1 - 1/(1 - u^2))` on `|u| < 1`, zero elsewhere.
pub fn bump(u: f64) -> f64 {
    if u.abs() >= 1.0 {
        0.0
    } else {
        (1.0 - 1.0 / (1.0 - u * u)).exp()
    }
}

/// Smooth function supported in `[0.25, reach]`: a few bumps with random
/// centers, widths and complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomBumps {
    terms: Vec<(f64, f64, Complex64)>,
}

impl RandomBumps {
    pub fn new(seed: u64, reach: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let reach = reach.max(1.0);
        let count = rng.gen_range(2..=4);
        let terms = (0..count)
            .map(|_| {
                let width = rng.gen_range(0.5..1.5f64).min(0.45 * (reach - 0.25));
                let center = rng.gen_range(0.25 + width..reach - width);
                let amp = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                (center, width, amp)
            })
            .collect();
        RandomBumps { terms }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|&(c, w, a)| a * bump((x - c) / w))
            .sum()
    }
}

/// Piecewise-linear samples, zero outside the sampled range.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTable {
    x: Vec<f64>,
    v: Vec<Complex64>,
}

impl SampleTable {
    /// Lines `x,re` or `x,re,im`; a non-numeric first line is a header.
    pub fn parse(text: &str) -> Result<Self> {
        let mut x = Vec::new();
        let mut v = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let nums: std::result::Result<Vec<f64>, _> = fields.iter().map(|s| s.parse::<f64>()).collect();
            let nums = match nums {
                Ok(n) => n,
                Err(_) if i == 0 => continue,
                Err(_) => return Err(Error::InvalidParameter(format!("line {}: not numeric", i + 1))),
            };
            if !(2..=3).contains(&nums.len()) || nums.iter().any(|n| !n.is_finite()) {
                return Err(Error::InvalidParameter(format!("line {}: expected x,re[,im]", i + 1)));
            }
            if x.last().is_some_and(|&last| nums[0] <= last) {
                return Err(Error::InvalidParameter(format!("line {}: x not increasing", i + 1)));
            }
            x.push(nums[0]);
            v.push(Complex64::new(nums[1], nums.get(2).copied().unwrap_or(0.0)));
        }
        if x.len() < 2 {
            return Err(Error::InvalidParameter("need at least two samples".into()));
        }
        Ok(SampleTable { x, v })
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let n = self.x.len();
        if t < self.x[0] || t > self.x[n - 1] {
            return Complex64::new(0.0, 0.0);
        }
        let j = self.x.partition_point(|&p| p <= t).clamp(1, n - 1);
        let (x0, x1) = (self.x[j - 1], self.x[j]);
        let w = (t - x0) / (x1 - x0);
        self.v[j - 1] * (1.0 - w) + self.v[j] * w
    }
}
