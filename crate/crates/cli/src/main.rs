#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use deltashell::command::{run, Command};

const EXIT_USAGE: u8 = 2;
const EXIT_DOMAIN: u8 = 3;

/// Bound states of a Dirac particle in a spherical delta-shell potential.
#[derive(Parser, Debug)]
#[command(name = "deltashell", version)]
struct Cli {
    /// Write the CSV here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Bound-state energies of one channel.
    Solve {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        coupling: f64,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        kappa: i32,
    },
    /// Ground-state energy over a coupling grid.
    Sweep {
        /// Comma-separated radii.
        #[arg(long, value_delimiter = ',', required = true)]
        rho: Vec<f64>,
        #[arg(long, default_value_t = 0.0)]
        coupling_min: f64,
        #[arg(long, default_value_t = 3.2)]
        coupling_max: f64,
        #[arg(long, default_value_t = 321)]
        steps: usize,
    },
    /// Critical coupling where the ground state meets the Dirac sea.
    Critical {
        #[arg(long)]
        rho: f64,
        #[arg(long, default_value_t = 0)]
        branch: u32,
    },
    /// Matching-based alpha against the printed closed forms.
    Compare {
        #[arg(long)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: f64,
    },
    /// Square-well regularization against the sharp shell.
    Oracle {
        #[arg(long)]
        rho: f64,
        #[arg(long)]
        coupling: f64,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.05,0.025,0.0125")]
        widths: Vec<f64>,
    },
}

impl Sub {
    fn into_command(self) -> Result<Command, String> {
        Ok(match self {
            Sub::Solve { rho, coupling, kappa } => Command::Solve { rho, coupling, kappa },
            Sub::Sweep {
                rho,
                coupling_min,
                coupling_max,
                steps,
            } => {
                if steps < 2 {
                    return Err("--steps must be at least 2".into());
                }
                if !(coupling_min < coupling_max) {
                    return Err("--coupling-min must be below --coupling-max".into());
                }
                Command::Sweep {
                    rhos: rho,
                    coupling_min,
                    coupling_max,
                    steps,
                }
            }
            Sub::Critical { rho, branch } => Command::Critical { rho, branch },
            Sub::Compare { rho, epsilon } => Command::Compare { rho, epsilon },
            Sub::Oracle { rho, coupling, widths } => Command::Oracle { rho, coupling, widths },
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let command = match cli.command.into_command() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let csv = match run(&command) {
        Ok(csv) => csv,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, csv) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
        }
        None => print!("{csv}"),
    }
    ExitCode::SUCCESS
}
