//! Linearized quadrature-fluctuation model: drift matrix A, diffusion matrix
//! D and stability classification.
//!
//! Quadratures are ordered (X_a, Y_a, X_c, Y_c, X_m, Y_m, X_b, Y_b) with
//! δX = (δo + δo†)/√2, δY = (δo − δo†)/(i√2), so the vacuum variance is 1/2.
//!
//! The phonon sub-block is [[−κ_b, ω_b], [−ω_b, −κ_b]]: re-deriving the
//! quadrature equations from the fluctuation dynamics gives −ω_b at row 8,
//! column 7, which keeps the decoupled phonon oscillatory and damped
//! (eigenvalues −κ_b ± iω_b) instead of exponentially unstable.

use nalgebra::SMatrix;

use crate::mean_field::EffectiveCoupling;
use crate::params::SystemParams;
use crate::{Error, Result};

pub type Matrix8 = SMatrix<f64, 8, 8>;

/// Drift and diffusion matrices of the four-mode quadrature dynamics.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftModel {
    pub a_matrix: Matrix8,
    pub d_matrix: Matrix8,
    pub g_mb_used: f64,
}

/// Outcome of the eigenvalue-based stability check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilityReport {
    pub stable: bool,
    /// −max Re λ(A); positive for stable models.
    pub margin: f64,
}

/// Build the drift matrix for the given directional coupling and thermal
/// phonon occupancy.
pub fn drift_matrix(params: &SystemParams, g_eff: &EffectiveCoupling, n_b: f64) -> DriftModel {
    let g = g_eff.value;
    let (da, dc, dmt) = (params.delta_a, params.delta_c, params.delta_m_tilde);
    let (ka, kc, km, kb) = (
        params.kappa_a,
        params.kappa_c,
        params.kappa_m,
        params.kappa_b,
    );
    let (gac, gcm, wb) = (params.g_ac, params.g_cm, params.omega_b);

    let mut a = Matrix8::zeros();
    a[(0, 0)] = -ka;
    a[(0, 1)] = da;
    a[(0, 3)] = gac;
    a[(1, 0)] = -da;
    a[(1, 1)] = -ka;
    a[(1, 2)] = -gac;
    a[(2, 1)] = gac;
    a[(2, 2)] = -kc;
    a[(2, 3)] = dc;
    a[(2, 5)] = gcm;
    a[(3, 0)] = -gac;
    a[(3, 2)] = -dc;
    a[(3, 3)] = -kc;
    a[(3, 4)] = -gcm;
    a[(4, 3)] = gcm;
    a[(4, 4)] = -km;
    a[(4, 5)] = dmt;
    a[(4, 6)] = -g;
    a[(5, 2)] = -gcm;
    a[(5, 4)] = -dmt;
    a[(5, 5)] = -km;
    a[(6, 6)] = -kb;
    a[(6, 7)] = wb;
    a[(7, 5)] = g;
    a[(7, 6)] = -wb;
    a[(7, 7)] = -kb;

    let mut d = Matrix8::zeros();
    let kb_th = (2.0 * n_b + 1.0) * kb;
    for (i, v) in [ka, ka, kc, kc, km, km, kb_th, kb_th].into_iter().enumerate() {
        d[(i, i)] = v;
    }

    DriftModel {
        a_matrix: a,
        d_matrix: d,
        g_mb_used: g,
    }
}

/// Complex eigenvalues of an 8×8 real matrix.
pub(crate) fn eigenvalues8(a: &Matrix8) -> Result<Vec<num_complex::Complex64>> {
    if a.iter().any(|v| !v.is_finite()) {
        return Err(Error::EigenFailure);
    }
    let eig = a.complex_eigenvalues();
    Ok(eig.iter().map(|z| num_complex::Complex64::new(z.re, z.im)).collect())
}

/// Largest |λ| of the drift matrix; sets the integration step scale.
pub fn spectral_radius(model: &DriftModel) -> Result<f64> {
    let eig = eigenvalues8(&model.a_matrix)?;
    Ok(eig.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Exact eigenvalue-based stability classification.
pub fn stability(model: &DriftModel) -> Result<StabilityReport> {
    let eig = eigenvalues8(&model.a_matrix)?;
    let max_re = eig.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    Ok(StabilityReport {
        stable: max_re < 0.0,
        margin: -max_re,
    })
}
