//! Quantum numbers of a radial Dirac channel and the dimensionless
//! parameterization of a point in the (energy, shell radius) plane.
//!
//! Units are natural throughout: energies in `mc²`, lengths in `ħ/mc`,
//! couplings in `ħc`.

use crate::error::{Error, Result};

/// Below this value of `s0` the ratio `tanh(s0)/s0` is taken from its Taylor series.
pub const G0_SERIES_CUTOFF: f64 = 1.0e-2;

/// One partial wave of the radial Dirac problem.
///
/// `j` is stored doubled (`two_j = 2j`) so it stays an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumChannel {
    kappa: i32,
    two_j: u32,
    l_upper: u32,
    l_lower: u32,
}

impl QuantumChannel {
    /// The `κ = −1` (`s_{1/2}`) channel that carries the ground state.
    pub const GROUND: QuantumChannel = QuantumChannel {
        kappa: -1,
        two_j: 1,
        l_upper: 0,
        l_lower: 1,
    };

    pub fn from_kappa(kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::ZeroKappa);
        }
        let abs = kappa.unsigned_abs();
        let (l_upper, l_lower) = if kappa > 0 { (abs, abs - 1) } else { (abs - 1, abs) };
        Ok(Self {
            kappa,
            two_j: 2 * abs - 1,
            l_upper,
            l_lower,
        })
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    /// Total angular momentum `j = |κ| − 1/2`.
    pub fn j(&self) -> f64 {
        f64::from(self.two_j) / 2.0
    }

    /// Twice the total angular momentum.
    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    /// Orbital number of the upper (large) component `g`.
    pub fn l_upper(&self) -> u32 {
        self.l_upper
    }

    /// Orbital number of the lower (small) component `f`.
    pub fn l_lower(&self) -> u32 {
        self.l_lower
    }
}

/// Shorthand for [`QuantumChannel::from_kappa`].
pub fn channel_from_kappa(kappa: i32) -> Result<QuantumChannel> {
    QuantumChannel::from_kappa(kappa)
}

/// A point `(ε, ρ)` together with the derived quantities every matching
/// formula consumes.
///
/// * `s0 = ρ·sqrt(1 − ε²)`, the decay constant times the shell radius (`k·r0`)
/// * `u0 = ρ·(1 + ε)`
/// * `g0 = tanh(s0)/s0`
/// * `q = s0/u0 = sqrt((1 − ε)/(1 + ε))`, the kinematic prefactor `kħc/(E + mc²)`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessPoint {
    epsilon: f64,
    rho: f64,
    s0: f64,
    u0: f64,
    g0: f64,
    q: f64,
}

impl DimensionlessPoint {
    pub fn new(epsilon: f64, rho: f64) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::DegenerateShell(rho));
        }
        if !(epsilon > -1.0 && epsilon < 1.0) {
            return Err(Error::SpectralRange(epsilon));
        }
        // (1 − ε)(1 + ε) keeps full relative precision near both ends.
        let one_minus = 1.0 - epsilon;
        let one_plus = 1.0 + epsilon;
        let s0 = rho * (one_minus * one_plus).sqrt();
        let u0 = rho * one_plus;
        let q = (one_minus / one_plus).sqrt();
        Ok(Self {
            epsilon,
            rho,
            s0,
            u0,
            g0: tanh_over_x(s0),
            q,
        })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn s0(&self) -> f64 {
        self.s0
    }

    pub fn u0(&self) -> f64 {
        self.u0
    }

    pub fn g0(&self) -> f64 {
        self.g0
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `1 − g0`, evaluated without cancellation for small `s0`.
    pub fn one_minus_g0(&self) -> f64 {
        one_minus_tanh_over_x(self.s0)
    }

    /// The same energy at a different shell radius.
    pub fn with_rho(&self, rho: f64) -> Result<Self> {
        Self::new(self.epsilon, rho)
    }
}

/// Shorthand for [`DimensionlessPoint::new`].
pub fn dimensionless_point(epsilon: f64, rho: f64) -> Result<DimensionlessPoint> {
    DimensionlessPoint::new(epsilon, rho)
}

/// `tanh(x)/x`, with the series `1 − x²/3 + 2x⁴/15` below [`G0_SERIES_CUTOFF`].
pub fn tanh_over_x(x: f64) -> f64 {
    if x < G0_SERIES_CUTOFF {
        tanh_over_x_series(x)
    } else {
        x.tanh() / x
    }
}

pub(crate) fn tanh_over_x_series(x: f64) -> f64 {
    let x2 = x * x;
    1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0
}

fn one_minus_tanh_over_x(x: f64) -> f64 {
    if x < 0.1 {
        // 1 − tanh(x)/x = x²/3 − 2x⁴/15 + 17x⁶/315 − 62x⁸/2835 + 1382x¹⁰/155925 − 21844x¹²/6081075 + …
        const C: [f64; 6] = [
            1.0 / 3.0,
            -2.0 / 15.0,
            17.0 / 315.0,
            -62.0 / 2835.0,
            1382.0 / 155_925.0,
            -21844.0 / 6_081_075.0,
        ];
        let x2 = x * x;
        x2 * C.iter().rev().fold(0.0, |acc, c| acc * x2 + c)
    } else {
        1.0 - x.tanh() / x
    }
}
