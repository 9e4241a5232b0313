//! Reference evaluations that share no code path with the library.

#![allow(dead_code)]

use std::f64::consts::PI;
use std::io::Write;

/// `I_ν(x)` from the ascending series `Σ_k (x/2)^{ν+2k} / (k!·Γ(ν+k+1))`,
/// summed until the terms stop contributing. `ν` must be a half-integer.
pub fn bessel_i_series(nu: f64, x: f64) -> f64 {
    // Γ(ν+1) by recurrence from Γ(1/2) = √π
    let mut gamma = PI.sqrt();
    let mut z = 0.5;
    while z < nu + 1.0 - 1e-9 {
        gamma *= z;
        z += 1.0;
    }
    let half = 0.5 * x;
    let mut term = half.powf(nu) / gamma;
    let mut sum = 0.0;
    let mut k = 0.0;
    loop {
        sum += term;
        k += 1.0;
        term *= half * half / (k * (nu + k));
        if term < 1e-18 * sum && k > 2.0 * half {
            break;
        }
    }
    sum
}

/// `e^{x}·K_ν(x)` from the trapezoid rule on `∫_0^∞ e^{−x(cosh t − 1)}·cosh(νt) dt`,
/// which converges geometrically in the step for this entire, even integrand.
pub fn bessel_k_scaled_quadrature(nu: f64, x: f64) -> f64 {
    let h = 0.02;
    let f = |t: f64| (-x * (t.cosh() - 1.0)).exp() * (nu * t).cosh();
    let mut sum = 0.5 * f(0.0);
    let mut i = 1;
    loop {
        let t = h * i as f64;
        let v = f(t);
        sum += v;
        // past the peak and negligible
        if v < 1e-19 * sum && x * t.sinh() > nu * 2.0 {
            break;
        }
        i += 1;
    }
    sum * h
}

/// Log-spaced grid of `n` points on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi.ln() - lo.ln()) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// One line per criterion, written past the test harness' output capture.
pub fn report(criterion: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "[acceptance] {criterion}: {verdict} ({detail})");
}

/// `[a, b, …]` in exponent form with three significant digits.
pub fn sci_list(values: &[f64]) -> String {
    let items: Vec<String> = values.iter().map(|v| format!("{v:.2e}")).collect();
    format!("[{}]", items.join(", "))
}
