use thiserror::Error;

/// Failures raised by the solver. Each variant names the domain condition
/// that was violated so callers (the CLI in particular) can report it verbatim.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("DEGENERATE_SHELL: shell radius must be positive, got rho = {0}")]
    DegenerateShell(f64),
    #[error("SPECTRAL_RANGE: energy must lie in the open interval (-1, 1), got epsilon = {0}")]
    SpectralRange(f64),
    #[error("DOMAIN: kappa = 0 is not a Dirac channel")]
    ZeroKappa,
    #[error("DOMAIN: Bessel argument must be positive and finite, got x = {0}")]
    BesselArgument(f64),
    #[error("DOMAIN: coupling must be finite and non-negative, got A = {0}")]
    Coupling(f64),
    #[error("TANGENT_POLE: phase difference sits on a pole of the tangent")]
    TangentPole,
    #[error("POLE: denominator of the closed-form eigenvalue equation vanishes")]
    Pole,
    #[error("DOMAIN: invalid well profile (rho = {rho}, width = {width})")]
    WellProfile { rho: f64, width: f64 },
    #[error("INTEGRATION_FAILURE: non-finite state at r = {0}")]
    IntegrationFailure(f64),
    #[error("DOMAIN: {0}")]
    Invalid(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
