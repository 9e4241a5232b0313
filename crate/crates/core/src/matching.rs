//! Matching of the inner and outer free solutions across the delta shell.
//!
//! Crossing the shell rotates the column `(F, G)` by the coupling angle
//! `A = a/ħc`, so `F² + G²` is continuous while the phase
//! `θ = arctan(F/G)` drops by exactly `A`. A bound state is an energy at which
//! the regular inner solution, rotated by `A`, lands on the decaying outer one.
//!
//! All root finding is done on [`phase_mismatch`], which is bounded and
//! periodic in `A`; `α = tan A` is only reported, never solved for.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::kinematics::{DimensionlessPoint, QuantumChannel};
use crate::special::{ik_ratio, Region};

/// Coupling strength `A = a/ħc` of the shell, with `α = tan A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellCoupling {
    angle: f64,
}

impl ShellCoupling {
    pub fn new(angle: f64) -> Result<Self> {
        if !(angle >= 0.0) || !angle.is_finite() {
            return Err(Error::Coupling(angle));
        }
        Ok(Self { angle })
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// `tan A`, or `None` on a pole of the tangent.
    pub fn alpha(&self) -> Option<f64> {
        let reduced = self.angle - PI * (self.angle / PI).round();
        if (reduced.abs() - FRAC_PI_2).abs() < 1e-15 {
            None
        } else {
            Some(self.angle.tan())
        }
    }

    /// How many times the coupling has wound through `π`; the physics only
    /// sees `A` modulo `π`.
    pub fn branch(&self) -> u32 {
        (self.angle / PI).floor() as u32
    }

    /// `A` reduced into `[0, π)`.
    pub fn reduced(&self) -> f64 {
        self.angle - PI * f64::from(self.branch())
    }
}

/// The rotation carrying `(F₋, G₋)` just inside the shell to `(F₊, G₊)` just outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    entries: [[f64; 2]; 2],
}

impl TransferMatrix {
    pub fn new(angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::Coupling(angle));
        }
        let (s, c) = angle.sin_cos();
        Ok(Self {
            entries: [[c, -s], [s, c]],
        })
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.entries
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// Applies the matrix to the column `(F, G)`.
    pub fn apply(&self, f: f64, g: f64) -> (f64, f64) {
        let m = &self.entries;
        (m[0][0] * f + m[0][1] * g, m[1][0] * f + m[1][1] * g)
    }
}

/// Shorthand for [`TransferMatrix::new`].
pub fn transfer_matrix(angle: f64) -> Result<TransferMatrix> {
    TransferMatrix::new(angle)
}

/// The ratio form of the jump: `F₊/G₊ = (t − α)/(1 + α·t)` with `t = F₋/G₋`.
pub fn mobius_jump(ratio_inside: f64, alpha: f64) -> f64 {
    (ratio_inside - alpha) / (1.0 + alpha * ratio_inside)
}

/// `F_I/G_I` at the shell: the regular solution's ratio, `q·I_{l_lower+½}(s0)/I_{l_upper+½}(s0)`.
pub fn inner_ratio(point: &DimensionlessPoint, channel: QuantumChannel) -> Result<f64> {
    Ok(point.q() * ik_ratio(channel, point.s0(), Region::Inner)?)
}

/// `F_II/G_II` at the shell: the decaying solution's ratio, `−q·K_{l_lower+½}(s0)/K_{l_upper+½}(s0)`.
pub fn outer_ratio(point: &DimensionlessPoint, channel: QuantumChannel) -> Result<f64> {
    Ok(-point.q() * ik_ratio(channel, point.s0(), Region::Outer)?)
}

/// Spinor phases `θ = arctan(F/G)` on either side of the shell, principal branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePair {
    pub theta_inner: f64,
    pub theta_outer: f64,
}

impl PhasePair {
    pub fn at(point: &DimensionlessPoint, channel: QuantumChannel) -> Result<Self> {
        Ok(Self {
            theta_inner: inner_ratio(point, channel)?.atan(),
            theta_outer: outer_ratio(point, channel)?.atan(),
        })
    }

    /// `θ_inner − θ_outer`: the coupling angle that would bind at this point.
    pub fn jump(&self) -> f64 {
        self.theta_inner - self.theta_outer
    }
}

/// Maps an angle into `(−π/2, π/2]` by subtracting the nearest multiple of `π`.
pub fn wrap_half_pi(angle: f64) -> f64 {
    let mut w = angle - PI * (angle / PI).round();
    if w <= -FRAC_PI_2 {
        w += PI;
    } else if w > FRAC_PI_2 {
        w -= PI;
    }
    w
}

/// `wrap(θ_inner − θ_outer − A)`; zero exactly when the rotated inner solution
/// matches the outer one, modulo `π`.
pub fn phase_mismatch(point: &DimensionlessPoint, channel: QuantumChannel, angle: f64) -> Result<f64> {
    let phases = PhasePair::at(point, channel)?;
    Ok(wrap_half_pi(phases.jump() - angle))
}

/// The `α = tan A` that binds a state at `point`, from the ratio path:
/// `tan(θ_inner − θ_outer) = (t_in − t_out)/(1 + t_in·t_out)`.
pub fn alpha_from_ratios(point: &DimensionlessPoint, channel: QuantumChannel) -> Result<f64> {
    let t_in = inner_ratio(point, channel)?;
    let t_out = outer_ratio(point, channel)?;
    let den = 1.0 + t_in * t_out;
    let num = t_in - t_out;
    if den.abs() <= f64::EPSILON * num.abs() {
        return Err(Error::TangentPole);
    }
    Ok(num / den)
}

/// The binding `α` at `point`.
///
/// For `κ = −1` this is the closed form obtained by eliminating `F/G` between
/// the jump condition and the two free-region ratios,
/// `α = u0·(1 + g0·s0) / (g0·u0² − (1 − g0)(1 + s0))`; other channels go
/// through [`alpha_from_ratios`].
pub fn alpha_matching(point: &DimensionlessPoint, channel: QuantumChannel) -> Result<f64> {
    if channel.kappa() != -1 {
        return alpha_from_ratios(point, channel);
    }
    let (s, u, g) = (point.s0(), point.u0(), point.g0());
    let num = u * (1.0 + g * s);
    let den = g * u * u - point.one_minus_g0() * (1.0 + s);
    if den.abs() <= f64::EPSILON * num.abs() {
        return Err(Error::TangentPole);
    }
    Ok(num / den)
}

/// The closed-form eigenvalue equation exactly as printed in the source
/// article, `α = s0·u0·(1 + g0·s0) / (u0² − (s0 + 1)·s0·(1 − g0))`.
///
/// Kept for comparison only: its denominator lacks the factor `tanh s0 = g0·s0`
/// on `u0²`, so it agrees with [`alpha_matching`] only as `ε → −1`.
pub fn alpha_avn_printed(point: &DimensionlessPoint) -> Result<f64> {
    let (s, u, g) = (point.s0(), point.u0(), point.g0());
    let num = s * u * (1.0 + g * s);
    let den = u * u - (s + 1.0) * s * point.one_minus_g0();
    if den == 0.0 || den.abs() <= f64::EPSILON * num.abs() {
        return Err(Error::Pole);
    }
    Ok(num / den)
}

/// Left minus right side of the printed transcendental equation
///
/// `p(1 + 1/s0) + α·p²(1 + 1/s0)·c = p·c − α`, with `p = q` and
/// `c = (1 − tanh s0)/tanh s0`.
pub fn autoval_residual(point: &DimensionlessPoint, alpha: f64) -> f64 {
    let p = point.q();
    let s = point.s0();
    let t = s.tanh();
    let c = (1.0 - t) / t;
    let lhs = p * (1.0 + 1.0 / s) + alpha * p * p * (1.0 + 1.0 / s) * c;
    let rhs = p * c - alpha;
    lhs - rhs
}

/// The three closed-form readings of the eigenvalue condition side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaComparison {
    pub alpha_matching: f64,
    pub alpha_avn_printed: f64,
    /// Residual of the printed transcendental equation at `alpha_matching`.
    pub autoval_residual: f64,
}

impl AlphaComparison {
    pub fn at(point: &DimensionlessPoint) -> Result<Self> {
        let alpha_matching = alpha_matching(point, QuantumChannel::GROUND)?;
        Ok(Self {
            alpha_matching,
            alpha_avn_printed: alpha_avn_printed(point)?,
            autoval_residual: autoval_residual(point, alpha_matching),
        })
    }
}
