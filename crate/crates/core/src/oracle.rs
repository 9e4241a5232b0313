//! Independent check of the matching conditions: the delta shell is replaced
//! by a square well of width `w` and depth `A/w` centred on `ρ`, and the radial
//! equations are integrated straight through it.
//!
//! In natural units the radial pair reads
//!
//! ```text
//! dF/dr =  κF/r − (ε − V − 1)·G
//! dG/dr = −κG/r + (ε − V + 1)·F
//! ```
//!
//! With `F = R sin θ`, `G = R cos θ` this becomes
//!
//! ```text
//! dθ/dr    =  κ·sin 2θ / r + cos 2θ − (ε − V)
//! d ln R/dr = −κ·cos 2θ / r + sin 2θ
//! ```
//!
//! which is integrated instead of `(F, G)`: `θ` never blows up when `G`
//! crosses zero, and the violent rotation inside a deep well is just a steep
//! linear drift of `θ`.

use crate::error::{Error, Result};
use crate::kinematics::{DimensionlessPoint, QuantumChannel};
use crate::matching::{inner_ratio, outer_ratio, wrap_half_pi};
use crate::par;
use crate::solver::{ground_state_energy, scan_roots, ScanConfig};

/// Integration steps across the well.
pub const STEPS_PER_WELL: usize = 400;

/// A square well of total strength `A` standing in for the delta shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WellProfile {
    rho: f64,
    width: f64,
    coupling: f64,
}

impl WellProfile {
    pub fn new(rho: f64, coupling: f64, width: f64) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::DegenerateShell(rho));
        }
        if !(width > 0.0) || !(width < rho) {
            return Err(Error::WellProfile { rho, width });
        }
        if !(coupling >= 0.0) || !coupling.is_finite() {
            return Err(Error::Coupling(coupling));
        }
        Ok(Self { rho, width, coupling })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    /// Depth in units of `mc²`; `depth · width = A`.
    pub fn depth(&self) -> f64 {
        self.coupling / self.width
    }

    pub fn inner_edge(&self) -> f64 {
        self.rho - 0.5 * self.width
    }

    pub fn outer_edge(&self) -> f64 {
        self.rho + 0.5 * self.width
    }
}

/// Polar form of the reduced radial amplitudes `G = r·g`, `F = r·f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialState {
    pub r: f64,
    /// `atan2(F, G)`, continued without wrapping.
    pub angle: f64,
    /// `ln sqrt(F² + G²)` relative to the starting point.
    pub log_norm: f64,
}

impl RadialState {
    /// `F/G`.
    pub fn ratio(&self) -> f64 {
        self.angle.tan()
    }

    pub fn f(&self) -> f64 {
        self.log_norm.exp() * self.angle.sin()
    }

    pub fn g(&self) -> f64 {
        self.log_norm.exp() * self.angle.cos()
    }
}

fn derivative(kappa: f64, epsilon: f64, potential: f64, r: f64, angle: f64) -> (f64, f64) {
    let (s2, c2) = (2.0 * angle).sin_cos();
    let d_angle = kappa * s2 / r + c2 - (epsilon - potential);
    let d_log = -kappa * c2 / r + s2;
    (d_angle, d_log)
}

/// Integrates from `r_start` to `r_end` in `steps` classical Runge–Kutta steps
/// under a constant potential `potential`.
fn integrate_segment(
    kappa: f64,
    epsilon: f64,
    potential: f64,
    start: RadialState,
    r_end: f64,
    steps: usize,
) -> Result<RadialState> {
    let h = (r_end - start.r) / steps as f64;
    let mut state = start;
    for i in 0..steps {
        let r = start.r + h * i as f64;
        let (a, l) = (state.angle, state.log_norm);
        let k1 = derivative(kappa, epsilon, potential, r, a);
        let k2 = derivative(kappa, epsilon, potential, r + 0.5 * h, a + 0.5 * h * k1.0);
        let k3 = derivative(kappa, epsilon, potential, r + 0.5 * h, a + 0.5 * h * k2.0);
        let k4 = derivative(kappa, epsilon, potential, r + h, a + h * k3.0);
        state.angle = a + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
        state.log_norm = l + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
        state.r = r + h;
        if !state.angle.is_finite() || !state.log_norm.is_finite() {
            return Err(Error::IntegrationFailure(state.r));
        }
    }
    state.r = r_end;
    Ok(state)
}

/// Starts from the regular free solution at the inner edge of the well and
/// integrates across it; the returned state sits at the outer edge.
pub fn integrate_radial(profile: &WellProfile, epsilon: f64, kappa: i32) -> Result<RadialState> {
    let channel = QuantumChannel::from_kappa(kappa)?;
    let r_in = profile.inner_edge();
    let start_ratio = inner_ratio(&DimensionlessPoint::new(epsilon, r_in)?, channel)?;
    let start = RadialState {
        r: r_in,
        angle: start_ratio.atan(),
        log_norm: 0.0,
    };
    // V = −depth inside the well
    integrate_segment(
        f64::from(kappa),
        epsilon,
        -profile.depth(),
        start,
        profile.outer_edge(),
        STEPS_PER_WELL,
    )
}

/// Wrapped phase difference between the integrated solution and the
/// decaying free solution at the outer edge of the well.
pub fn well_mismatch(profile: &WellProfile, epsilon: f64, kappa: i32) -> Result<f64> {
    let channel = QuantumChannel::from_kappa(kappa)?;
    let state = integrate_radial(profile, epsilon, kappa)?;
    let outer = outer_ratio(&DimensionlessPoint::new(epsilon, profile.outer_edge())?, channel)?;
    Ok(wrap_half_pi(state.angle - outer.atan()))
}

/// Highest bound energy of the regularized problem in channel `kappa`, or
/// `None` if the well binds nothing.
pub fn well_bound_state(profile: &WellProfile, kappa: i32) -> Result<Option<f64>> {
    let config = ScanConfig::default();
    QuantumChannel::from_kappa(kappa)?;
    let found = scan_roots(
        |eps| well_mismatch(profile, eps, kappa),
        -1.0 + config.edge_gap,
        1.0 - config.edge_gap,
        config.cells,
    )?;
    Ok(found.roots.last().copied())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub width: f64,
    pub epsilon_well: Option<f64>,
    pub epsilon_delta: Option<f64>,
    /// `|ε_well − ε_delta|` when both are bound.
    pub error: Option<f64>,
}

/// Ground-state energy of the square well for each width next to the sharp
/// delta-shell result.
pub fn convergence_study(rho: f64, coupling: f64, widths: &[f64]) -> Result<Vec<ConvergenceRow>> {
    if widths.is_empty() {
        return Err(Error::Invalid("at least one width is required"));
    }
    let profiles = widths
        .iter()
        .map(|&w| WellProfile::new(rho, coupling, w))
        .collect::<Result<Vec<_>>>()?;
    let delta = ground_state_energy(rho, coupling)?.energy();
    par::try_map(&profiles, |profile| {
        let well = well_bound_state(profile, -1)?;
        Ok(ConvergenceRow {
            width: profile.width(),
            epsilon_well: well,
            epsilon_delta: delta,
            error: well.zip(delta).map(|(a, b)| (a - b).abs()),
        })
    })
}
