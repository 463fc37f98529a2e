//! Physical constants (CODATA 2018) and the few fixed model defaults.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K (exact since the 2019 SI redefinition).
pub const K_BOLTZMANN: f64 = 1.380_649e-23;

/// Gyromagnetic ratio of the uniform-precession magnon mode, rad/s per Oe
/// (γ/2π = 2.8 MHz/Oe).
pub const GYROMAGNETIC_RATIO: f64 = 2.0 * std::f64::consts::PI * 2.8e6;

/// Default total spin number of the magnetic sphere.
pub const DEFAULT_N_SPINS: f64 = 2.8e17;

/// Default Kerr coefficient, rad/s (K/2π = 8×10⁻¹⁰ Hz).
pub const DEFAULT_KERR_K: f64 = 2.0 * std::f64::consts::PI * 8e-10;

/// Relative tolerance for the (ω, ω_d, Δ) consistency check on construction.
pub const DETUNING_CONSISTENCY_TOL: f64 = 1e-9;
