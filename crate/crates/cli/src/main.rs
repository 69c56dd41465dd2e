//! `qwalk` command-line experiment runner.

mod config;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qwalk::entanglement::spatial_entanglement;
use qwalk::explore::{compare_walks, grid_search_qubit, random_basis_run, sweep_time};
use qwalk::measurement::measure_coin;
use qwalk::walk::evolve;
use thiserror::Error;

use config::{Cli, RunConfig};
use output::{Cell, Table};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numerical(#[from] qwalk::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

fn run(config: &RunConfig) -> Result<Table, CliError> {
    Ok(match config {
        RunConfig::SweepTime {
            walk,
            initial,
            basis,
            tmax,
        } => {
            let mut table = Table::new(vec!["t", "entropy"]);
            for (t, e) in sweep_time(*walk, initial, basis, *tmax)? {
                table.rows.push(vec![Cell::Int(t as i64), Cell::Float(e)]);
            }
            table
        }
        RunConfig::Grid { t, initial, grid } => {
            let surface = grid_search_qubit(*t, initial, *grid)?;
            let mut table = Table::new(vec!["theta", "phi", "entropy"]);
            let cells = |p: &qwalk::explore::SurfacePoint| {
                vec![
                    Cell::Float(p.theta),
                    Cell::Float(p.phi),
                    Cell::Float(p.entropy),
                ]
            };
            table.rows = surface.rows.iter().map(cells).collect();
            table.summary.push(("argmax", cells(&surface.argmax)));
            table.summary.push(("argmin", cells(&surface.argmin)));
            table
        }
        RunConfig::RandomRun {
            tmin,
            tmax,
            samples,
            seed,
        } => {
            let run = random_basis_run(*tmin, *tmax, *samples, *seed)?;
            let mut table = Table::new(vec!["sample", "t", "entropy"]);
            for r in run.rows {
                table.rows.push(vec![
                    Cell::Int(r.sample_index as i64),
                    Cell::Int(r.t as i64),
                    Cell::Float(r.entropy),
                ]);
            }
            table
        }
        RunConfig::Compare { mode, tmax } => {
            let mut table = Table::new(vec![
                "t",
                "alternate_entropy",
                "grover_entropy",
                "difference",
            ]);
            for r in compare_walks(*tmax, *mode)? {
                table.rows.push(vec![
                    Cell::Int(r.t as i64),
                    Cell::Float(r.alternate),
                    Cell::Float(r.grover),
                    Cell::Float(r.difference),
                ]);
            }
            table
        }
        RunConfig::Evolve { walk, initial, t } => {
            let state = evolve(*walk, initial, *t)?;
            let mut table = Table::new(vec!["x", "y", "coin", "re", "im"]);
            for (p, c, a) in state.iter() {
                table.rows.push(vec![
                    Cell::Int(p.x),
                    Cell::Int(p.y),
                    Cell::Int(c as i64),
                    Cell::Float(a.re),
                    Cell::Float(a.im),
                ]);
            }
            table
        }
        RunConfig::Measure {
            walk,
            initial,
            basis,
            t,
        } => {
            let state = evolve(*walk, initial, *t)?;
            let mut table = Table::new(vec!["outcome", "probability", "entropy"]);
            for o in measure_coin(&state, basis)? {
                let entropy = match &o.post_state {
                    Some(post) => Cell::Float(spatial_entanglement(post)?),
                    None => Cell::Missing,
                };
                table.rows.push(vec![
                    Cell::Int(o.index as i64),
                    Cell::Float(o.probability),
                    entropy,
                ]);
            }
            table
        }
    })
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let config = cli.command.validate()?;
    let out = cli.command.output();
    let text = run(&config)?.render(out.format, out.precision as usize);
    match &out.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qwalk: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
