//! Bound-state energies as roots of the wrapped phase mismatch, the two
//! characteristic couplings of the ground state, and coupling sweeps.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::kinematics::{DimensionlessPoint, QuantumChannel};
use crate::matching::{phase_mismatch, PhasePair, ShellCoupling};
use crate::par;

/// Distance kept from the continuum edges `ε = ±1`.
pub const EDGE_GAP: f64 = 1.0e-8;
/// Default number of bracket cells across the gap.
pub const DEFAULT_CELLS: usize = 2000;
/// Density multiplier for the rescan pass.
pub const REFINE_FACTOR: usize = 4;
/// A bisected sign change is a root only if the mismatch there is below this;
/// otherwise it was a wrap discontinuity (`|m| ≈ π/2`).
const ROOT_ACCEPT: f64 = 1.0e-6;
/// Roots closer than this are merged.
const ROOT_MERGE: f64 = 1.0e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundStatus {
    Bound,
    /// Coupling too weak for the state to have left the upper continuum.
    Unbound,
    /// The state has crossed `ε = −1` into the Dirac sea.
    Supercritical,
}

impl BoundStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundStatus::Bound => "BOUND",
            BoundStatus::Unbound => "UNBOUND",
            BoundStatus::Supercritical => "SUPERCRITICAL",
        }
    }
}

impl std::fmt::Display for BoundStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of a bound-state search at one `(ρ, A, κ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    pub rho: f64,
    pub coupling: f64,
    pub kappa: i32,
    pub status: BoundStatus,
    /// Strictly increasing; empty unless `status` is [`BoundStatus::Bound`].
    pub energies: Vec<f64>,
    /// Sign changes inspected, including rejected wrap discontinuities.
    pub bracket_count: usize,
}

/// Grid used by the bracket scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub cells: usize,
    pub edge_gap: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            cells: DEFAULT_CELLS,
            edge_gap: EDGE_GAP,
        }
    }
}

/// Roots of a wrapped-phase function on `[lo, hi]`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Roots {
    pub roots: Vec<f64>,
    pub brackets: usize,
}

/// Scans `f` on a uniform grid of `cells` cells over `[lo, hi]` and bisects
/// every sign change to full floating-point resolution. Sign changes where
/// `|f|` stays large are discontinuities of the wrap and are dropped.
///
/// If nothing is found but `|f|` dips close to zero at an interior grid
/// point, the scan is repeated once at [`REFINE_FACTOR`] times the density to
/// catch a near-tangent pair.
pub fn scan_roots<F>(f: F, lo: f64, hi: f64, cells: usize) -> Result<Roots>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let first = scan_once(&f, lo, hi, cells)?;
    if !first.0.roots.is_empty() || !first.1 {
        return Ok(first.0);
    }
    let (mut second, _) = scan_once(&f, lo, hi, cells * REFINE_FACTOR)?;
    second.brackets += first.0.brackets;
    Ok(second)
}

/// One pass; the flag reports whether a refinement looks worthwhile.
fn scan_once<F>(f: &F, lo: f64, hi: f64, cells: usize) -> Result<(Roots, bool)>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let cells = cells.max(1);
    let step = (hi - lo) / cells as f64;
    let xs: Vec<f64> = (0..=cells)
        .map(|i| if i == cells { hi } else { lo + step * i as f64 })
        .collect();
    let values = par::try_map(&xs, |&x| f(x))?;

    let mut out = Roots::default();
    for (i, w) in values.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        if a == 0.0 {
            out.roots.push(xs[i]);
            continue;
        }
        if a.signum() == b.signum() || b == 0.0 {
            continue;
        }
        out.brackets += 1;
        let (x, m) = bisect(f, xs[i], xs[i + 1], a)?;
        if m.abs() < ROOT_ACCEPT {
            out.roots.push(x);
        }
    }
    if values[cells] == 0.0 {
        out.roots.push(hi);
    }
    out.roots.sort_by(f64::total_cmp);
    out.roots.dedup_by(|b, a| (*b - *a).abs() < ROOT_MERGE);

    let mut suspicious = false;
    if out.roots.is_empty() {
        for i in 1..cells {
            let (l, c, r) = (values[i - 1].abs(), values[i].abs(), values[i + 1].abs());
            let slope = (values[i + 1] - values[i - 1]).abs();
            if c < l && c < r && c < 2.0 * slope {
                suspicious = true;
                break;
            }
        }
    }
    Ok((out, suspicious))
}

/// Bisects until the bracket can no longer be split; returns the endpoint
/// with the smaller `|f|`.
fn bisect<F>(f: &F, mut lo: f64, mut hi: f64, f_lo: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let sign_lo = f_lo.signum();
    let mut best = (lo, f_lo);
    let mut f_hi = f64::NAN;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok((mid, 0.0));
        }
        if fm.signum() == sign_lo {
            lo = mid;
            best = (lo, fm);
        } else {
            hi = mid;
            f_hi = fm;
        }
    }
    if f_hi.is_finite() && f_hi.abs() < best.1.abs() {
        best = (hi, f_hi);
    }
    Ok(best)
}

fn check_rho(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::DegenerateShell(rho))
    }
}

/// All bound states of channel `kappa` for shell radius `rho` and coupling `coupling`.
pub fn find_bound_states(rho: f64, coupling: f64, kappa: i32) -> Result<SpectrumResult> {
    find_bound_states_with(rho, coupling, kappa, &ScanConfig::default())
}

pub fn find_bound_states_with(rho: f64, coupling: f64, kappa: i32, config: &ScanConfig) -> Result<SpectrumResult> {
    check_rho(rho)?;
    let channel = QuantumChannel::from_kappa(kappa)?;
    let shell = ShellCoupling::new(coupling)?;
    let lo = -1.0 + config.edge_gap;
    let hi = 1.0 - config.edge_gap;
    let mismatch = |eps: f64| phase_mismatch(&DimensionlessPoint::new(eps, rho)?, channel, coupling);
    let found = scan_roots(mismatch, lo, hi, config.cells)?;

    let status = if !found.roots.is_empty() {
        BoundStatus::Bound
    } else {
        empty_status(rho, channel, &shell, config)?
    };
    Ok(SpectrumResult {
        rho,
        coupling,
        kappa,
        status,
        energies: found.roots,
        bracket_count: found.brackets,
    })
}

/// Status when no root exists. The binding angle `θ_inner − θ_outer` runs
/// from its value at the upper edge (detachment) to its value at the lower
/// edge (diving) as `ε` decreases; an unmatched coupling on the first branch
/// is unbound if it is nearer the upper end, supercritical otherwise. Any
/// later branch means a state has already dived.
fn empty_status(rho: f64, channel: QuantumChannel, shell: &ShellCoupling, config: &ScanConfig) -> Result<BoundStatus> {
    if shell.branch() > 0 {
        return Ok(BoundStatus::Supercritical);
    }
    let (top, bottom) = if channel == QuantumChannel::GROUND {
        (threshold_coupling(rho)?, critical_coupling(rho, 0)?.a_crit)
    } else {
        let edge =
            |eps: f64| -> Result<f64> { Ok(PhasePair::at(&DimensionlessPoint::new(eps, rho)?, channel)?.jump()) };
        (edge(1.0 - config.edge_gap)?, edge(-1.0 + config.edge_gap)?)
    };
    Ok(if shell.reduced() < 0.5 * (top + bottom) {
        BoundStatus::Unbound
    } else {
        BoundStatus::Supercritical
    })
}

/// Ground-state (`κ = −1`) energy, or the reason there is none.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroundState {
    Bound(f64),
    Unbound,
    Supercritical,
}

impl GroundState {
    pub fn status(&self) -> BoundStatus {
        match self {
            GroundState::Bound(_) => BoundStatus::Bound,
            GroundState::Unbound => BoundStatus::Unbound,
            GroundState::Supercritical => BoundStatus::Supercritical,
        }
    }

    pub fn energy(&self) -> Option<f64> {
        match *self {
            GroundState::Bound(e) => Some(e),
            _ => None,
        }
    }
}

/// Energy of the `κ = −1` state that detaches at [`threshold_coupling`] and
/// dives at the first [`critical_coupling`].
///
/// Beyond that first critical coupling the state is reported as
/// supercritical for good, even though the `π`-periodic spectrum brings a new
/// `κ = −1` level out of the upper continuum once `A > π + A_th`; that level
/// is still listed by [`find_bound_states`].
pub fn ground_state_energy(rho: f64, coupling: f64) -> Result<GroundState> {
    ground_state_energy_with(rho, coupling, &ScanConfig::default())
}

pub fn ground_state_energy_with(rho: f64, coupling: f64, config: &ScanConfig) -> Result<GroundState> {
    check_rho(rho)?;
    ShellCoupling::new(coupling)?;
    if coupling >= critical_coupling(rho, 0)?.a_crit {
        return Ok(GroundState::Supercritical);
    }
    let result = find_bound_states_with(rho, coupling, -1, config)?;
    Ok(match result.status {
        BoundStatus::Bound => GroundState::Bound(*result.energies.last().expect("bound result has a root")),
        BoundStatus::Unbound => GroundState::Unbound,
        BoundStatus::Supercritical => GroundState::Supercritical,
    })
}

/// Coupling at which the ground state reaches the Dirac sea.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriticalCoupling {
    pub rho: f64,
    pub a_crit: f64,
    pub branch_index: u32,
}

/// Solutions of `tan A = −3/(2ρ)`: `A = π − arctan(3/(2ρ)) + branch·π`.
/// Branch 0 is the smallest positive one.
pub fn critical_coupling(rho: f64, branch: u32) -> Result<CriticalCoupling> {
    check_rho(rho)?;
    Ok(CriticalCoupling {
        rho,
        a_crit: PI - (1.5 / rho).atan() + PI * f64::from(branch),
        branch_index: branch,
    })
}

/// `A_th = arctan(1/(2ρ))`, the coupling at which the ground state leaves `ε = 1`.
pub fn threshold_coupling(rho: f64) -> Result<f64> {
    check_rho(rho)?;
    Ok((0.5 / rho).atan())
}

/// One row of a coupling sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub rho: f64,
    pub coupling: f64,
    pub state: GroundState,
}

/// The `steps` couplings `A_min + i·(A_max − A_min)/(steps − 1)`.
pub fn coupling_grid(a_min: f64, a_max: f64, steps: usize) -> Result<Vec<f64>> {
    if !(a_min < a_max) || !a_min.is_finite() || !a_max.is_finite() {
        return Err(Error::Invalid("coupling range must satisfy A_min < A_max"));
    }
    if steps < 2 {
        return Err(Error::Invalid("a sweep needs at least two steps"));
    }
    let span = a_max - a_min;
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            if i == steps - 1 {
                a_max
            } else {
                a_min + span * i as f64 / last
            }
        })
        .collect())
}

fn sweep_points(rho_list: &[f64], a_min: f64, a_max: f64, steps: usize) -> Result<Vec<(f64, f64)>> {
    for &rho in rho_list {
        check_rho(rho)?;
    }
    let couplings = coupling_grid(a_min, a_max, steps)?;
    let mut rhos = rho_list.to_vec();
    rhos.sort_by(f64::total_cmp);
    Ok(rhos
        .iter()
        .flat_map(|&rho| couplings.iter().map(move |&a| (rho, a)))
        .collect())
}

fn sweep_row(&(rho, coupling): &(f64, f64)) -> Result<SweepRow> {
    Ok(SweepRow {
        rho,
        coupling,
        state: ground_state_energy(rho, coupling)?,
    })
}

/// Ground-state energy over a grid of couplings for each radius, ordered by
/// `(ρ, A)`. Rows are evaluated in parallel when the `parallel` feature is on;
/// the output does not depend on it.
pub fn sweep(rho_list: &[f64], a_min: f64, a_max: f64, steps: usize) -> Result<Vec<SweepRow>> {
    let points = sweep_points(rho_list, a_min, a_max, steps)?;
    par::try_map(&points, sweep_row)
}

/// [`sweep`] on the calling thread only.
pub fn sweep_sequential(rho_list: &[f64], a_min: f64, a_max: f64, steps: usize) -> Result<Vec<SweepRow>> {
    let points = sweep_points(rho_list, a_min, a_max, steps)?;
    points.iter().map(sweep_row).collect()
}
