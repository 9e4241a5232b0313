//! Modified Bessel functions of half-integer order `ν = l + 1/2` on the
//! positive real axis.
//!
//! Internally everything is carried in exponentially scaled form,
//! `e^{−x}·I_ν(x)` and `e^{x}·K_ν(x)`, so that products and ratios never
//! overflow or underflow for the arguments a sweep produces.

use std::f64::consts::{FRAC_2_PI, PI};

use crate::error::{Error, Result};
use crate::kinematics::QuantumChannel;

/// Arguments below this use the ascending power series.
pub const SERIES_CUTOFF: f64 = 1.0e-2;

/// The `l = 1` closed form `cosh x − sinh x / x` cancels badly below this.
const CLOSED_FORM_I1_CUTOFF: f64 = 1.0;

/// Order `ν = l + 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfIntegerOrder(pub u32);

impl HalfIntegerOrder {
    pub fn l(self) -> u32 {
        self.0
    }

    pub fn nu(self) -> f64 {
        f64::from(self.0) + 0.5
    }
}

/// Which free-region solution a ratio refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `r < r0`, regular at the origin (`I` functions).
    Inner,
    /// `r > r0`, decaying at infinity (`K` functions).
    Outer,
}

fn check_arg(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::BesselArgument(x))
    }
}

/// `I_{l+1/2}(x)`.
pub fn bessel_i_half(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x < SERIES_CUTOFF {
        return Ok(i_series(l, x));
    }
    Ok(i_scaled_unchecked(l, x) * x.exp())
}

/// `e^{−x}·I_{l+1/2}(x)`.
pub fn bessel_i_half_scaled(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    if x < SERIES_CUTOFF {
        return Ok(i_series(l, x) * (-x).exp());
    }
    Ok(i_scaled_unchecked(l, x))
}

/// `K_{l+1/2}(x)`.
pub fn bessel_k_half(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    Ok(k_scaled_unchecked(l, x) * (-x).exp())
}

/// `e^{x}·K_{l+1/2}(x)`.
pub fn bessel_k_half_scaled(l: u32, x: f64) -> Result<f64> {
    check_arg(x)?;
    Ok(k_scaled_unchecked(l, x))
}

/// Bessel-function part of the spinor ratio `F/G` at argument `x = k·r`,
/// without the kinematic prefactor: `I_{l_lower+½}/I_{l_upper+½}` for the
/// inner region and `K_{l_lower+½}/K_{l_upper+½}` for the outer one.
pub fn ik_ratio(channel: QuantumChannel, x: f64, region: Region) -> Result<f64> {
    check_arg(x)?;
    let (lo, up) = (channel.l_lower(), channel.l_upper());
    let ratio = match region {
        Region::Inner if channel.kappa() == -1 => coth_minus_inv(x),
        Region::Outer if channel.kappa() == -1 => 1.0 + 1.0 / x,
        Region::Inner => {
            if x < SERIES_CUTOFF {
                i_series(lo, x) / i_series(up, x)
            } else {
                i_scaled_unchecked(lo, x) / i_scaled_unchecked(up, x)
            }
        }
        Region::Outer => k_scaled_unchecked(lo, x) / k_scaled_unchecked(up, x),
    };
    Ok(ratio)
}

/// `I_{3/2}(x)/I_{1/2}(x) = coth x − 1/x`.
fn coth_minus_inv(x: f64) -> f64 {
    if x < SERIES_CUTOFF {
        // x/3 − x³/45 + 2x⁵/945 − x⁷/4725
        let x2 = x * x;
        x * (1.0 / 3.0 + x2 * (-1.0 / 45.0 + x2 * (2.0 / 945.0 - x2 / 4725.0)))
    } else if x < CLOSED_FORM_I1_CUTOFF {
        miller_ratios(1, x)[0]
    } else {
        1.0 / x.tanh() - 1.0 / x
    }
}

/// `e^{−x}·I_{1/2}(x) = sqrt(2/(πx))·(1 − e^{−2x})/2`.
fn i0_scaled(x: f64) -> f64 {
    (FRAC_2_PI / x).sqrt() * 0.5 * -(-2.0 * x).exp_m1()
}

fn i_scaled_unchecked(l: u32, x: f64) -> f64 {
    let seed = i0_scaled(x);
    match l {
        0 => seed,
        1 if x >= CLOSED_FORM_I1_CUTOFF => {
            // sqrt(2/(πx))·(cosh x − sinh x / x)·e^{−x}
            let e2 = (-2.0 * x).exp();
            (FRAC_2_PI / x).sqrt() * 0.5 * ((1.0 + e2) - (1.0 - e2) / x)
        }
        _ => miller_ratios(l, x).iter().fold(seed, |acc, r| acc * r),
    }
}

/// Successive ratios `I_{m+1/2}/I_{m−1/2}` for `m = 1..=l`, by backward
/// recurrence of `I_{ν−1} − I_{ν+1} = (2ν/x)·I_ν` started well above `l`.
fn miller_ratios(l: u32, x: f64) -> Vec<f64> {
    let start = l as usize + 32 + (2.0 * x).ceil() as usize;
    let mut ratio = 0.0;
    let mut out = vec![0.0; l as usize];
    for m in (1..=start).rev() {
        // ratio holds I_{m+1/2}/I_{m−1/2} after this step
        let nu = m as f64 + 0.5;
        ratio = 1.0 / (2.0 * nu / x + ratio);
        if m <= l as usize {
            out[m - 1] = ratio;
        }
    }
    out
}

/// Upward recurrence `K_{ν+1} = K_{ν−1} + (2ν/x)·K_ν` from the two closed forms.
fn k_scaled_unchecked(l: u32, x: f64) -> f64 {
    let k0 = (PI / (2.0 * x)).sqrt();
    if l == 0 {
        return k0;
    }
    let mut prev = k0;
    let mut cur = k0 * (1.0 + 1.0 / x);
    for m in 1..l {
        let nu = m as f64 + 0.5;
        let next = prev + 2.0 * nu / x * cur;
        prev = cur;
        cur = next;
    }
    cur
}

/// Ascending series `Σ_k (x/2)^{ν+2k} / (k!·Γ(ν+k+1))`.
fn i_series(l: u32, x: f64) -> f64 {
    let nu = f64::from(l) + 0.5;
    let half = 0.5 * x;
    // Γ(3/2) = √π/2, then Γ(z+1) = z·Γ(z)
    let mut gamma = PI.sqrt() * 0.5;
    for m in 1..=l {
        gamma *= f64::from(m) + 0.5;
    }
    let mut term = half.powf(nu) / gamma;
    let mut sum = term;
    let h2 = half * half;
    for k in 1..64 {
        let kf = f64::from(k);
        term *= h2 / (kf * (nu + kf));
        sum += term;
        if k >= 3 && term < sum * 1e-17 {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::channel_from_kappa;
    use approx::assert_relative_eq;

    #[test]
    fn printed_closed_forms() {
        assert_relative_eq!(
            bessel_i_half(0, 1.0).unwrap(),
            (2.0 / PI).sqrt() * 1f64.sinh(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            bessel_i_half(0, 1.0).unwrap(),
            0.937_674_888_245_488,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            bessel_k_half(0, 1.0).unwrap(),
            0.461_068_504_447_894_4,
            max_relative = 1e-14
        );
    }

    #[test]
    fn k_ratio_is_one_plus_inverse() {
        for x in [1e-3, 0.3, 1.0, 7.5, 40.0] {
            let r = bessel_k_half_scaled(1, x).unwrap() / bessel_k_half_scaled(0, x).unwrap();
            assert_relative_eq!(r, 1.0 + 1.0 / x, max_relative = 1e-15);
        }
    }

    #[test]
    fn i_ratio_small_argument() {
        for x in [1e-4, 1e-3, 5e-3] {
            let r = bessel_i_half(1, x).unwrap() / bessel_i_half(0, x).unwrap();
            assert_relative_eq!(r, x / 3.0, max_relative = x * x);
        }
    }

    #[test]
    fn large_argument_stays_finite() {
        let k = bessel_k_half(0, 20.0).unwrap();
        assert!(k > 0.0 && k.is_finite());
        assert!(bessel_k_half(3, 700.0).unwrap() >= 0.0);
        assert!(bessel_i_half_scaled(3, 1e4).unwrap().is_finite());
        let r = ik_ratio(channel_from_kappa(-3).unwrap(), 800.0, Region::Inner).unwrap();
        assert!(r.is_finite() && r > 0.0);
    }

    #[test]
    fn rejects_non_positive_argument() {
        assert_eq!(bessel_i_half(0, 0.0), Err(Error::BesselArgument(0.0)));
        assert_eq!(bessel_k_half(1, -1.0), Err(Error::BesselArgument(-1.0)));
        assert!(ik_ratio(QuantumChannel::GROUND, f64::NAN, Region::Inner).is_err());
    }

    #[test]
    fn ground_channel_ratios() {
        let ch = QuantumChannel::GROUND;
        assert_relative_eq!(
            ik_ratio(ch, 1.0, Region::Inner).unwrap(),
            0.313_035_285_499_331_3,
            max_relative = 1e-14
        );
        assert_eq!(ik_ratio(ch, 1.0, Region::Outer).unwrap(), 2.0);
        let x = 1e-4;
        assert_relative_eq!(ik_ratio(ch, x, Region::Inner).unwrap(), x / 3.0, max_relative = 1e-8);
    }

    #[test]
    fn ground_ratio_paths_agree() {
        for i in 0..200 {
            let x = 10f64.powf(-3.0 + 4.5 * i as f64 / 199.0);
            let reduced = coth_minus_inv(x);
            let generic = if x < SERIES_CUTOFF {
                i_series(1, x) / i_series(0, x)
            } else {
                miller_ratios(1, x)[0]
            };
            assert_relative_eq!(reduced, generic, max_relative = 1e-13);
        }
    }

    #[test]
    fn series_switchover_is_continuous() {
        for l in 0..=3 {
            let x = SERIES_CUTOFF;
            let s = i_series(l, x);
            let m = i_scaled_unchecked(l, x) * x.exp();
            assert_relative_eq!(s, m, max_relative = 1e-13);
        }
    }

    #[test]
    fn ratios_monotone_and_positive() {
        for kappa in [-3, -2, -1, 1, 2, 3] {
            let ch = channel_from_kappa(kappa).unwrap();
            let grid: Vec<f64> = (0..400).map(|i| 10f64.powf(-3.0 + 4.5 * i as f64 / 399.0)).collect();
            let inner: Vec<f64> = grid.iter().map(|&x| ik_ratio(ch, x, Region::Inner).unwrap()).collect();
            let outer: Vec<f64> = grid.iter().map(|&x| ik_ratio(ch, x, Region::Outer).unwrap()).collect();
            assert!(inner.iter().chain(&outer).all(|&r| r > 0.0));
            // l_lower > l_upper for κ < 0, and the roles swap for κ > 0
            let rising = |v: &[f64]| v.windows(2).all(|w| w[1] > w[0]);
            let falling = |v: &[f64]| v.windows(2).all(|w| w[1] < w[0]);
            if kappa < 0 {
                assert!(rising(&inner) && falling(&outer), "kappa {kappa}");
            } else {
                assert!(falling(&inner) && rising(&outer), "kappa {kappa}");
            }
        }
    }
}
