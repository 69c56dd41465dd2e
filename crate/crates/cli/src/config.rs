//! Command-line flags and their validation into a [`RunConfig`].

use std::f64::consts::PI;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qwalk::explore::{CompareMode, GridSpec};
use qwalk::measurement::{
    computational_basis, grover_max_basis, grover_min_basis, qubit_basis, CoinBasis,
};
use qwalk::walk::{alternate_initial, grover_initial};
use qwalk::{CoinVector, WalkKind};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Measurement-induced spatial entanglement in 2D quantum walks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Induced entanglement for t = 1..tmax in one basis.
    SweepTime {
        #[arg(long, value_enum)]
        walk: WalkArg,
        #[arg(long, default_value = "computational")]
        basis: String,
        #[arg(long, default_value_t = 20)]
        tmax: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// θ–φ grid over qubit bases for the alternate walk.
    Grid {
        #[arg(long, default_value_t = 20)]
        t: usize,
        #[arg(long, default_value_t = 51)]
        theta_points: usize,
        #[arg(long, default_value_t = 51)]
        phi_points: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Grover walk measured in Haar-random bases.
    RandomRun {
        #[arg(long, default_value_t = 10)]
        tmin: usize,
        #[arg(long, default_value_t = 15)]
        tmax: usize,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// `random:SAMPLES,SEED`, an alternative to --samples/--seed.
        #[arg(long)]
        basis: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Both walks side by side.
    Compare {
        #[arg(long, value_enum, default_value = "computational")]
        mode: ModeArg,
        #[arg(long, default_value_t = 12)]
        tmax: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Full amplitude table after t steps.
    Evolve {
        #[arg(long, value_enum)]
        walk: WalkArg,
        #[arg(long)]
        t: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Outcome probabilities and entanglement of one coin measurement.
    Measure {
        #[arg(long, value_enum)]
        walk: WalkArg,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value = "computational")]
        basis: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Significant digits for CSV floats.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WalkArg {
    Alternate,
    Grover,
}

impl From<WalkArg> for WalkKind {
    fn from(w: WalkArg) -> Self {
        match w {
            WalkArg::Alternate => WalkKind::Alternate,
            WalkArg::Grover => WalkKind::Grover,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Computational,
    Optimal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// A validated request.
#[derive(Debug, Clone)]
pub enum RunConfig {
    SweepTime {
        walk: WalkKind,
        initial: CoinVector,
        basis: CoinBasis,
        tmax: usize,
    },
    Grid {
        t: usize,
        initial: CoinVector,
        grid: GridSpec,
    },
    RandomRun {
        tmin: usize,
        tmax: usize,
        samples: usize,
        seed: u64,
    },
    Compare {
        mode: CompareMode,
        tmax: usize,
    },
    Evolve {
        walk: WalkKind,
        initial: CoinVector,
        t: usize,
    },
    Measure {
        walk: WalkKind,
        initial: CoinVector,
        basis: CoinBasis,
        t: usize,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parses radians: a decimal, or `pi`, `pi/N`, `K*pi`, `K*pi/N`. Multiples of
/// π are evaluated as `(K/N)·π` so `pi/4` and `pi/2` are exact grid points.
pub fn parse_angle(s: &str) -> Result<f64, CliError> {
    let s = s.trim();
    let bad = || usage(format!("cannot parse angle `{s}`"));
    let value = if let Some(idx) = s.find("pi") {
        let (head, tail) = (&s[..idx], &s[idx + 2..]);
        let k = match head.trim_end_matches('*') {
            "" => 1.0,
            "-" => -1.0,
            h => h.parse::<f64>().map_err(|_| bad())?,
        };
        let n = match tail {
            "" => 1.0,
            t => t
                .strip_prefix('/')
                .ok_or_else(bad)?
                .parse::<f64>()
                .map_err(|_| bad())?,
        };
        if n == 0.0 {
            return Err(bad());
        }
        (k / n) * PI
    } else {
        s.parse::<f64>().map_err(|_| bad())?
    };
    if !value.is_finite() {
        return Err(bad());
    }
    Ok(value)
}

/// Parses a fixed basis for `walk`: `computational`, `qubit:THETA,PHI`,
/// `grover-max` or `grover-min`.
pub fn parse_basis(spec: &str, walk: WalkKind) -> Result<CoinBasis, CliError> {
    let spec = spec.trim();
    if let Some(params) = spec.strip_prefix("qubit:") {
        if walk != WalkKind::Alternate {
            return Err(usage("qubit bases apply only to --walk alternate"));
        }
        let (theta, phi) = params
            .split_once(',')
            .ok_or_else(|| usage("expected qubit:THETA,PHI"))?;
        return qubit_basis(parse_angle(theta)?, parse_angle(phi)?)
            .map_err(|e| usage(e.to_string()));
    }
    match spec {
        "computational" => Ok(computational_basis(walk.coin_dim()).expect("2 or 4")),
        "grover-max" | "grover-min" if walk != WalkKind::Grover => {
            Err(usage(format!("{spec} applies only to --walk grover")))
        }
        "grover-max" => Ok(grover_max_basis()),
        "grover-min" => Ok(grover_min_basis()),
        s if s.starts_with("random:") => {
            Err(usage("random bases are only available through random-run"))
        }
        s => Err(usage(format!("unknown basis `{s}`"))),
    }
}

fn parse_random_basis(spec: &str) -> Result<(usize, u64), CliError> {
    let params = spec
        .trim()
        .strip_prefix("random:")
        .ok_or_else(|| usage("random-run accepts only --basis random:SAMPLES,SEED"))?;
    let (samples, seed) = params
        .split_once(',')
        .ok_or_else(|| usage("expected random:SAMPLES,SEED"))?;
    let samples = samples
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad sample count `{samples}`")))?;
    let seed = seed
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad seed `{seed}`")))?;
    Ok((samples, seed))
}

fn initial_coin(walk: WalkKind, alpha: Option<&str>) -> Result<CoinVector, CliError> {
    match (walk, alpha) {
        (WalkKind::Alternate, None) => Ok(alternate_initial(std::f64::consts::FRAC_PI_2)),
        (WalkKind::Alternate, Some(a)) => Ok(alternate_initial(parse_angle(a)?)),
        (WalkKind::Grover, None) => Ok(grover_initial()),
        (WalkKind::Grover, Some(_)) => Err(usage("--alpha applies only to --walk alternate")),
    }
}

fn at_least_one(name: &str, v: usize) -> Result<usize, CliError> {
    if v < 1 {
        return Err(usage(format!("--{name} must be at least 1")));
    }
    Ok(v)
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::SweepTime { output, .. }
            | Command::Grid { output, .. }
            | Command::RandomRun { output, .. }
            | Command::Compare { output, .. }
            | Command::Evolve { output, .. }
            | Command::Measure { output, .. } => output,
        }
    }

    pub fn validate(&self) -> Result<RunConfig, CliError> {
        Ok(match self {
            Command::SweepTime {
                walk,
                basis,
                tmax,
                alpha,
                ..
            } => {
                let walk = WalkKind::from(*walk);
                RunConfig::SweepTime {
                    walk,
                    initial: initial_coin(walk, alpha.as_deref())?,
                    basis: parse_basis(basis, walk)?,
                    tmax: at_least_one("tmax", *tmax)?,
                }
            }
            Command::Grid {
                t,
                theta_points,
                phi_points,
                alpha,
                ..
            } => RunConfig::Grid {
                t: at_least_one("t", *t)?,
                initial: initial_coin(WalkKind::Alternate, alpha.as_deref())?,
                grid: GridSpec::new(*theta_points, *phi_points)
                    .map_err(|e| usage(e.to_string()))?,
            },
            Command::RandomRun {
                tmin,
                tmax,
                samples,
                seed,
                basis,
                ..
            } => {
                let (samples, seed) = match (basis, samples, seed) {
                    (Some(b), None, None) => parse_random_basis(b)?,
                    (Some(_), _, _) => {
                        return Err(usage(
                            "give either --basis random:... or --samples/--seed, not both",
                        ))
                    }
                    (None, samples, Some(seed)) => (samples.unwrap_or(500), *seed),
                    (None, _, None) => return Err(usage("random-run requires an explicit --seed")),
                };
                if tmin > tmax {
                    return Err(usage(format!("--tmin {tmin} exceeds --tmax {tmax}")));
                }
                RunConfig::RandomRun {
                    tmin: *tmin,
                    tmax: *tmax,
                    samples: at_least_one("samples", samples)?,
                    seed,
                }
            }
            Command::Compare { mode, tmax, .. } => RunConfig::Compare {
                mode: match mode {
                    ModeArg::Computational => CompareMode::Computational,
                    ModeArg::Optimal => CompareMode::Optimal,
                },
                tmax: at_least_one("tmax", *tmax)?,
            },
            Command::Evolve { walk, t, alpha, .. } => {
                let walk = WalkKind::from(*walk);
                RunConfig::Evolve {
                    walk,
                    initial: initial_coin(walk, alpha.as_deref())?,
                    t: *t,
                }
            }
            Command::Measure {
                walk,
                t,
                basis,
                alpha,
                ..
            } => {
                let walk = WalkKind::from(*walk);
                RunConfig::Measure {
                    walk,
                    initial: initial_coin(walk, alpha.as_deref())?,
                    basis: parse_basis(basis, walk)?,
                    t: *t,
                }
            }
        })
    }
}
