//! The command set behind the `deltashell` binary, rendered as CSV.
//!
//! Floats are written with 12 significant digits (trailing zeros kept,
//! exponent form outside `1e-5 ≤ |x| < 1e12`), `.` as decimal separator,
//! `,` as delimiter and `\n` line endings. Every table starts with one
//! header line.

use crate::error::Result;
use crate::kinematics::DimensionlessPoint;
use crate::matching::AlphaComparison;
use crate::oracle::convergence_study;
use crate::solver::{critical_coupling, find_bound_states, sweep, BoundStatus};

pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    /// Bound states of one channel at one `(ρ, A)`.
    Solve { rho: f64, coupling: f64, kappa: i32 },
    /// Ground-state energy over a coupling grid for several radii.
    Sweep {
        rhos: Vec<f64>,
        coupling_min: f64,
        coupling_max: f64,
        steps: usize,
    },
    /// Coupling at which the ground state reaches the Dirac sea.
    Critical { rho: f64, branch: u32 },
    /// Matching-based `α` against the two printed closed forms.
    Compare { rho: f64, epsilon: f64 },
    /// Square-well regularization against the sharp shell.
    Oracle { rho: f64, coupling: f64, widths: Vec<f64> },
}

/// Formats `x` with [`SIGNIFICANT_DIGITS`] significant digits.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let decimals = SIGNIFICANT_DIGITS - 1;
    // Round once in exponent form; its exponent is the post-rounding one.
    let sci = format!("{:.*e}", decimals, x);
    let exp: i32 = sci[sci.find('e').expect("exponent form") + 1..]
        .parse()
        .expect("integer exponent");
    if x == 0.0 || (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let places = (decimals as i32 - exp).max(0) as usize;
        format!("{:.*}", places, x)
    } else {
        sci
    }
}

fn opt(x: Option<f64>) -> String {
    x.map(format_float).unwrap_or_default()
}

/// Runs `command` and returns the CSV text, header included.
pub fn run(command: &Command) -> Result<String> {
    let mut out = String::new();
    match command {
        Command::Solve { rho, coupling, kappa } => {
            out.push_str("rho,coupling,kappa,status,energy\n");
            let result = find_bound_states(*rho, *coupling, *kappa)?;
            let prefix = format!(
                "{},{},{},{}",
                format_float(*rho),
                format_float(*coupling),
                kappa,
                result.status
            );
            if result.status == BoundStatus::Bound {
                for e in result.energies.iter().rev() {
                    out.push_str(&format!("{prefix},{}\n", format_float(*e)));
                }
            } else {
                out.push_str(&format!("{prefix},\n"));
            }
        }
        Command::Sweep {
            rhos,
            coupling_min,
            coupling_max,
            steps,
        } => {
            out.push_str("rho,coupling_A,status,epsilon\n");
            for row in sweep(rhos, *coupling_min, *coupling_max, *steps)? {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    format_float(row.rho),
                    format_float(row.coupling),
                    row.state.status(),
                    opt(row.state.energy())
                ));
            }
        }
        Command::Critical { rho, branch } => {
            out.push_str("rho,branch,a_crit\n");
            let c = critical_coupling(*rho, *branch)?;
            out.push_str(&format!(
                "{},{},{}\n",
                format_float(c.rho),
                c.branch_index,
                format_float(c.a_crit)
            ));
        }
        Command::Compare { rho, epsilon } => {
            out.push_str("rho,epsilon,alpha_matching,alpha_avn_printed,autoval_residual_at_matching_alpha\n");
            let point = DimensionlessPoint::new(*epsilon, *rho)?;
            let c = AlphaComparison::at(&point)?;
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                format_float(*rho),
                format_float(*epsilon),
                format_float(c.alpha_matching),
                format_float(c.alpha_avn_printed),
                format_float(c.autoval_residual)
            ));
        }
        Command::Oracle { rho, coupling, widths } => {
            out.push_str("width,epsilon_well,epsilon_delta,abs_error\n");
            for row in convergence_study(*rho, *coupling, widths)? {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    format_float(row.width),
                    opt(row.epsilon_well),
                    opt(row.epsilon_delta),
                    opt(row.error)
                ));
            }
        }
    }
    Ok(out)
}
