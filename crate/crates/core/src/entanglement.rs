//! Bipartite logarithmic negativity from the four-mode covariance matrix.
//!
//! The minimum symplectic eigenvalue ν⁻ of the partially transposed two-mode
//! covariance matrix is computed along two independent routes — the spectrum
//! of Ω·Ṽ and the closed form from the 2×2 block determinants — and the two
//! must agree before a value is accepted.
//!
//! With the vacuum variance at 1/2, separability sits at ν⁻ = 1/2 and the
//! default normalization is E_N = max[0, −ln 2ν⁻]. The `TwoLn`
//! convention (E_N = max[0, −2 ln ν⁻]) is kept for comparison output; under
//! the covariance normalization used here it reports nonzero values for
//! manifestly separable states, so it is not the default.

use nalgebra::{Matrix4, SMatrix};
use num_complex::Complex64;

use crate::fluctuation::Matrix8;
use crate::lyapunov::CovarianceMatrix;
use crate::params::Direction;
use crate::transmission::IsoValue;
use crate::{Error, Result};

/// One of the four bosonic modes, in quadrature-block order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    CavityA,
    CavityC,
    Magnon,
    Phonon,
}

impl Mode {
    pub fn index(self) -> usize {
        match self {
            Mode::CavityA => 0,
            Mode::CavityC => 1,
            Mode::Magnon => 2,
            Mode::Phonon => 3,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Mode::CavityA => "a",
            Mode::CavityC => "c",
            Mode::Magnon => "m",
            Mode::Phonon => "b",
        }
    }
}

/// An unordered pair of distinct modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModePair {
    pub first: Mode,
    pub second: Mode,
}

impl ModePair {
    pub fn new(first: Mode, second: Mode) -> Result<Self> {
        if first == second {
            return Err(Error::DegenerateModePair);
        }
        Ok(Self { first, second })
    }

    /// "ac", "cm", "mb", "ab", ... — the label used in column names.
    pub fn label(&self) -> String {
        format!("{}{}", self.first.short_name(), self.second.short_name())
    }

    /// The four pairs reported by the entanglement sweeps.
    pub fn standard_pairs() -> [ModePair; 4] {
        [
            ModePair {
                first: Mode::CavityA,
                second: Mode::CavityC,
            },
            ModePair {
                first: Mode::CavityC,
                second: Mode::Magnon,
            },
            ModePair {
                first: Mode::Magnon,
                second: Mode::Phonon,
            },
            ModePair {
                first: Mode::CavityA,
                second: Mode::Phonon,
            },
        ]
    }
}

/// Normalization of the logarithmic negativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LognegConvention {
    /// E_N = max[0, −ln 2ν⁻]; zero exactly at the vacuum threshold ν⁻ = 1/2.
    #[default]
    ConsistentHalf,
    /// E_N = max[0, −2 ln ν⁻] as a comparison convention.
    TwoLn,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementReport {
    pub pair: ModePair,
    pub nu_minus: f64,
    pub e_n: f64,
    pub direction: Direction,
}

/// 4×4 marginal covariance of a mode pair: the principal submatrix of the
/// pair's quadrature rows and columns, first mode's (X, Y) first.
pub fn reduce_cm(v: &CovarianceMatrix, pair: &ModePair) -> Matrix4<f64> {
    reduce_raw(&v.v, pair)
}

pub(crate) fn reduce_raw(v: &Matrix8, pair: &ModePair) -> Matrix4<f64> {
    let idx = [
        2 * pair.first.index(),
        2 * pair.first.index() + 1,
        2 * pair.second.index(),
        2 * pair.second.index() + 1,
    ];
    Matrix4::from_fn(|i, j| v[(idx[i], idx[j])])
}

fn two_mode_symplectic_form() -> Matrix4<f64> {
    let mut omega = Matrix4::zeros();
    omega[(0, 1)] = 1.0;
    omega[(1, 0)] = -1.0;
    omega[(2, 3)] = 1.0;
    omega[(3, 2)] = -1.0;
    omega
}

/// ν⁻ from the spectrum of Ω·Ṽ: the symplectic eigenvalues appear as ±iν
/// pairs, so ν⁻ is the smallest |Im λ|.
fn nu_minus_eigen_route(v_pt: &Matrix4<f64>) -> Result<f64> {
    let k = two_mode_symplectic_form() * v_pt;
    if k.iter().any(|x| !x.is_finite()) {
        return Err(Error::EigenFailure);
    }
    let eig = k.complex_eigenvalues();
    Ok(eig.iter().map(|z| z.im.abs()).fold(f64::INFINITY, f64::min))
}

/// ν⁻ from the block-determinant closed form
/// ν⁻ = √[(Σ̃ − √(Σ̃² − 4 det V))/2], Σ̃ = det A + det B − 2 det C.
fn nu_minus_closed_form(v4: &Matrix4<f64>) -> f64 {
    let a = v4.fixed_view::<2, 2>(0, 0);
    let b = v4.fixed_view::<2, 2>(2, 2);
    let c = v4.fixed_view::<2, 2>(0, 2);
    let det_a = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
    let det_b = b[(0, 0)] * b[(1, 1)] - b[(0, 1)] * b[(1, 0)];
    let det_c = c[(0, 0)] * c[(1, 1)] - c[(0, 1)] * c[(1, 0)];
    let sigma = det_a + det_b - 2.0 * det_c;
    let det_v = v4.determinant();
    let disc = (sigma * sigma - 4.0 * det_v).max(0.0);
    (0.5 * (sigma - disc.sqrt())).max(0.0).sqrt()
}

/// Both ν⁻ routes side by side (eigenvalue route, closed form), without the
/// agreement gate. Used by diagnostics and the acceptance checks.
pub fn nu_minus_both_routes(v4: &Matrix4<f64>) -> Result<(f64, f64)> {
    let mut pt = *v4;
    for k in 0..4 {
        pt[(3, k)] = -pt[(3, k)];
        pt[(k, 3)] = -pt[(k, 3)];
    }
    Ok((nu_minus_eigen_route(&pt)?, nu_minus_closed_form(v4)))
}

/// Minimum symplectic eigenvalue of the partially transposed covariance
/// matrix (the second mode's Y quadrature is flipped; the spectrum is the
/// same when the first mode is flipped instead).
pub fn min_symplectic_eigenvalue_pt(v4: &Matrix4<f64>) -> Result<f64> {
    // Symmetry and positive definiteness gate.
    let scale = v4.iter().fold(0.0f64, |acc, x| acc.max(x.abs())).max(1.0);
    for i in 0..4 {
        for j in (i + 1)..4 {
            if (v4[(i, j)] - v4[(j, i)]).abs() > 1e-9 * scale {
                return Err(Error::NotPositiveDefinite { min_eig: f64::NAN });
            }
        }
    }
    let min_eig = v4
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &x| acc.min(x));
    if min_eig <= 0.0 {
        return Err(Error::NotPositiveDefinite { min_eig });
    }

    let mut pt = *v4;
    for k in 0..4 {
        pt[(3, k)] = -pt[(3, k)];
        pt[(k, 3)] = -pt[(k, 3)];
    }

    let nu_eig = nu_minus_eigen_route(&pt)?;
    let nu_closed = nu_minus_closed_form(v4);
    let tol = 1e-10f64.max(1e-12 * nu_closed.abs());
    if (nu_eig - nu_closed).abs() > tol {
        return Err(Error::MethodDisagreement { nu_eig, nu_closed });
    }
    Ok(nu_closed)
}

/// Logarithmic negativity from ν⁻ under the chosen normalization.
pub fn log_negativity(nu_minus: f64, convention: LognegConvention) -> f64 {
    assert!(nu_minus > 0.0, "nu_minus must be positive");
    match convention {
        LognegConvention::ConsistentHalf => (-(2.0 * nu_minus).ln()).max(0.0),
        LognegConvention::TwoLn => (-2.0 * nu_minus.ln()).max(0.0),
    }
}

/// Full pipeline for one pair: reduce, partial-transpose, E_N.
pub fn entanglement_of_pair(
    v: &CovarianceMatrix,
    pair: &ModePair,
    convention: LognegConvention,
    direction: Direction,
) -> Result<EntanglementReport> {
    let v4 = reduce_cm(v, pair);
    let nu_minus = min_symplectic_eigenvalue_pt(&v4)?;
    Ok(EntanglementReport {
        pair: *pair,
        nu_minus,
        e_n: log_negativity(nu_minus, convention),
        direction,
    })
}

/// Entanglement isolation ratio 20·log₁₀(E_12/E_21) in dB: the signed
/// infinity sentinel marks one-way entanglement, both-zero maps to 0 dB.
pub fn entanglement_isolation(e12: f64, e21: f64) -> IsoValue {
    assert!(e12 >= 0.0 && e21 >= 0.0);
    match (e12 > 0.0, e21 > 0.0) {
        (true, true) => IsoValue::Db(20.0 * (e12 / e21).log10()),
        (true, false) => IsoValue::PosInf,
        (false, true) => IsoValue::NegInf,
        (false, false) => IsoValue::Db(0.0),
    }
}

/// Two-mode squeezed vacuum covariance in this normalization: diagonal
/// blocks cosh(2r)/2·I, off-diagonal sinh(2r)/2·diag(1, −1).
pub fn two_mode_squeezed_cm(r: f64) -> Matrix4<f64> {
    let ch = (2.0 * r).cosh() * 0.5;
    let sh = (2.0 * r).sinh() * 0.5;
    let mut v = Matrix4::zeros();
    for i in 0..4 {
        v[(i, i)] = ch;
    }
    v[(0, 2)] = sh;
    v[(2, 0)] = sh;
    v[(1, 3)] = -sh;
    v[(3, 1)] = -sh;
    v
}

/// Bona fide/PPT check helper: smallest eigenvalue of the Hermitian matrix
/// V + iΩ/2 for a (possibly partially transposed) two-mode covariance.
pub fn uncertainty_min_eigenvalue(v4: &Matrix4<f64>) -> f64 {
    let omega = two_mode_symplectic_form();
    let h = SMatrix::<Complex64, 4, 4>::from_fn(|i, j| {
        Complex64::new(v4[(i, j)], 0.5 * omega[(i, j)])
    });
    h.symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &x| acc.min(x))
}
