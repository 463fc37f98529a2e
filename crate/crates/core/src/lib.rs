//! Simulation library for a two-cavity magnomechanical system: two microwave
//! cavities linked by a transmission line, with a magnon mode (coupled to the
//! second cavity) that interacts with a phonon mode through magnetostriction.
//!
//! The crate covers the stationary mean-field amplitudes of the driven system,
//! the directional effective magnomechanical coupling, forward/backward
//! transmission coefficients and their isolation ratio, the linearized
//! quadrature-fluctuation model (drift and diffusion matrices), the
//! steady-state covariance matrix from the Lyapunov equation, bipartite
//! logarithmic negativity for all mode pairs, and named parameter sweeps that
//! tabulate these observables over grids.
//!
//! All frequencies, rates and detunings are stored internally as angular
//! frequencies (rad/s). Configuration values are ordinary frequencies in Hz
//! unless explicitly flagged angular; see [`params`].

pub mod constants;
pub mod entanglement;
pub mod error;
pub mod fluctuation;
pub mod lyapunov;
pub mod mean_field;
pub mod params;
pub mod scenarios;
pub mod transmission;
pub mod validation;

pub use error::Error;
pub use params::{Direction, DriveConfig, ParamsBuilder, SystemParams};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
