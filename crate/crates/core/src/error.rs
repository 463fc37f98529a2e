//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("missing parameter `{0}`")]
    MissingField(&'static str),

    #[error("parameter `{name}` must be non-negative, got {value}")]
    NegativeRate { name: &'static str, value: f64 },

    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("parameter `{name}` must be finite")]
    NonFinite { name: &'static str },

    #[error(
        "inconsistent detuning `{name}`: given {given} but omega - omega_d = {derived} \
         (relative mismatch {rel:.3e})"
    )]
    InconsistentDetuning {
        name: &'static str,
        given: f64,
        derived: f64,
        rel: f64,
    },

    #[error("mean-field denominator vanishes (resonant degeneracy): |den|/scale = {rel:.3e}")]
    SingularMeanField { rel: f64 },

    #[error("singular linear system in the stationary mean-field solve")]
    SingularLinearSystem,

    #[error(
        "self-consistent mean field did not converge after {iterations} iterations \
         (last residual {residual:.3e})"
    )]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("transmission coefficient undefined at zero drive power")]
    ZeroPowerTransmission,

    #[error("drift matrix is unstable (margin {margin:.6e} rad/s); no steady state exists")]
    Unstable { margin: f64 },

    #[error("eigenvalue computation failed (non-finite matrix entries)")]
    EigenFailure,

    #[error(
        "covariance integration did not reach tolerance before t_max \
         (t = {t_reached:.3e} s, residual {residual:.3e})"
    )]
    IntegrationTimeout { t_reached: f64, residual: f64 },

    #[error("covariance integration diverged (unstable model)")]
    IntegrationDiverged,

    #[error("covariance matrix is not positive definite (min eigenvalue {min_eig:.3e})")]
    NotPositiveDefinite { min_eig: f64 },

    #[error(
        "symplectic-eigenvalue routes disagree: eigenvalue route {nu_eig:.12e}, \
         closed form {nu_closed:.12e}"
    )]
    MethodDisagreement { nu_eig: f64, nu_closed: f64 },

    #[error("mode pair must name two distinct modes")]
    DegenerateModePair,

    #[error("invalid sweep specification: {0}")]
    InvalidSweep(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}
