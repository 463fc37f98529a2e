//! Named parameter sweeps (the fig2a…fig5 presets) and the generic grid
//! runner that evaluates the full pipeline — mean field → directional
//! coupling → drift matrix → stability → Lyapunov → entanglement, plus the
//! transmission observables — at every grid point.
//!
//! Records are ordered by grid index regardless of the worker count, and
//! per-point failures (instability, singular mean field, …) are recorded in
//! the record's flags column instead of aborting the sweep.

use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::entanglement::{
    entanglement_of_pair, LognegConvention, Mode, ModePair,
};
use crate::fluctuation::{drift_matrix, stability};
use crate::lyapunov::solve_lyapunov;
use crate::mean_field::{
    effective_coupling, steady_state_closed_form, steady_state_self_consistent,
    EffectiveCoupling, MeanFieldMethod,
};
use crate::params::{Direction, DriveConfig, ParamsBuilder, SystemParams};
use crate::transmission::{transmission_point, IsoValue};
use crate::validation::validation_report;
use crate::{Error, Result};

const TAU: f64 = std::f64::consts::TAU;

/// Parameter scanned by a sweep axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisParam {
    /// Probe power P (sets P_a = P_c = P), watts.
    PowerWatts,
    /// Magnon drive power, watts.
    MagnonPowerWatts,
    /// Bath temperature, kelvin.
    TemperatureKelvin,
    /// Δ_a in units of ω_b (ω_a follows, ω_d fixed).
    DeltaAOverOmegaB,
    /// Δ_c in units of ω_b.
    DeltaCOverOmegaB,
    /// Δ̃_m in units of ω_b.
    DeltaMTildeOverOmegaB,
    /// Cavity–cavity coupling in units of ω_b.
    GAcOverOmegaB,
    /// Phonon linewidth κ_b/2π in Hz.
    KappaBHz,
}

impl AxisParam {
    pub fn column_name(self) -> &'static str {
        match self {
            AxisParam::PowerWatts => "P_watts",
            AxisParam::MagnonPowerWatts => "P_m_watts",
            AxisParam::TemperatureKelvin => "T_kelvin",
            AxisParam::DeltaAOverOmegaB => "delta_a_over_omega_b",
            AxisParam::DeltaCOverOmegaB => "delta_c_over_omega_b",
            AxisParam::DeltaMTildeOverOmegaB => "delta_m_tilde_over_omega_b",
            AxisParam::GAcOverOmegaB => "g_ac_over_omega_b",
            AxisParam::KappaBHz => "kappa_b_hz",
        }
    }

    pub fn from_key(key: &str) -> Result<Self> {
        Ok(match key {
            "p_watts" => AxisParam::PowerWatts,
            "p_m_watts" => AxisParam::MagnonPowerWatts,
            "temperature_k" => AxisParam::TemperatureKelvin,
            "delta_a_over_omega_b" => AxisParam::DeltaAOverOmegaB,
            "delta_c_over_omega_b" => AxisParam::DeltaCOverOmegaB,
            "delta_m_tilde_over_omega_b" => AxisParam::DeltaMTildeOverOmegaB,
            "g_ac_over_omega_b" => AxisParam::GAcOverOmegaB,
            "kappa_b_hz" => AxisParam::KappaBHz,
            other => {
                return Err(Error::InvalidSweep(format!("unknown axis parameter `{other}`")))
            }
        })
    }

    fn apply(self, p: &mut SystemParams, value: f64) {
        match self {
            AxisParam::PowerWatts => {
                p.p_a = value;
                p.p_c = value;
            }
            AxisParam::MagnonPowerWatts => p.p_m = value,
            AxisParam::TemperatureKelvin => p.temperature = value,
            AxisParam::DeltaAOverOmegaB => {
                p.delta_a = value * p.omega_b;
                p.omega_a = p.omega_d + p.delta_a;
            }
            AxisParam::DeltaCOverOmegaB => {
                p.delta_c = value * p.omega_b;
                p.omega_c = p.omega_d + p.delta_c;
            }
            AxisParam::DeltaMTildeOverOmegaB => p.delta_m_tilde = value * p.omega_b,
            AxisParam::GAcOverOmegaB => p.g_ac = value * p.omega_b,
            AxisParam::KappaBHz => p.kappa_b = TAU * value,
        }
    }
}

/// One sweep axis: a parameter and a strictly monotone value grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    pub param: AxisParam,
    pub values: Vec<f64>,
}

impl SweepAxis {
    pub fn linspace(param: AxisParam, start: f64, stop: f64, points: usize) -> Self {
        let values = if points == 1 {
            vec![start]
        } else {
            (0..points)
                .map(|i| start + (stop - start) * i as f64 / (points - 1) as f64)
                .collect()
        };
        Self { param, values }
    }
}

/// Tabulated observable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Observable {
    T12,
    T21,
    TisoDb,
    Entanglement(ModePair),
    EntanglementIso(ModePair),
    StabilityMargin,
}

impl Observable {
    pub fn from_key(key: &str) -> Result<Self> {
        let pair_of = |label: &str| -> Result<ModePair> {
            let mode = |ch: char| -> Result<Mode> {
                Ok(match ch {
                    'a' => Mode::CavityA,
                    'c' => Mode::CavityC,
                    'm' => Mode::Magnon,
                    'b' => Mode::Phonon,
                    other => {
                        return Err(Error::InvalidSweep(format!("unknown mode letter `{other}`")))
                    }
                })
            };
            let chars: Vec<char> = label.chars().collect();
            if chars.len() != 2 {
                return Err(Error::InvalidSweep(format!("bad pair label `{label}`")));
            }
            ModePair::new(mode(chars[0])?, mode(chars[1])?)
        };
        Ok(match key {
            "T12" => Observable::T12,
            "T21" => Observable::T21,
            "Tiso" => Observable::TisoDb,
            "stability_margin" => Observable::StabilityMargin,
            k if k.starts_with("E_") && k.ends_with("_iso") => {
                Observable::EntanglementIso(pair_of(&k[2..k.len() - 4])?)
            }
            k if k.starts_with("E_") => Observable::Entanglement(pair_of(&k[2..])?),
            other => {
                return Err(Error::InvalidSweep(format!("unknown observable `{other}`")))
            }
        })
    }

    fn needs_pipeline(self) -> bool {
        matches!(
            self,
            Observable::Entanglement(_)
                | Observable::EntanglementIso(_)
                | Observable::StabilityMargin
        )
    }

    fn needs_transmission(self) -> bool {
        matches!(self, Observable::T12 | Observable::T21 | Observable::TisoDb)
    }
}

/// Where the drift matrix takes its magnomechanical coupling from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CouplingSource {
    /// Directional value from the drive amplitudes at each grid point.
    Derived,
    /// Fixed value in rad/s, independent of drives and direction.
    Fixed(f64),
}

/// A validated sweep description.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub base: SystemParams,
    pub axes: Vec<SweepAxis>,
    pub directions: Vec<Direction>,
    pub outputs: Vec<Observable>,
    pub coupling: CouplingSource,
    pub mean_field: MeanFieldMethod,
    pub convention: LognegConvention,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.axes.is_empty() || self.axes.len() > 2 {
            return Err(Error::InvalidSweep(format!(
                "need 1 or 2 axes, got {}",
                self.axes.len()
            )));
        }
        for axis in &self.axes {
            if axis.values.is_empty() {
                return Err(Error::InvalidSweep("empty axis grid".into()));
            }
            let increasing = axis.values.windows(2).all(|w| w[1] > w[0]);
            let decreasing = axis.values.windows(2).all(|w| w[1] < w[0]);
            if axis.values.len() > 1 && !increasing && !decreasing {
                return Err(Error::InvalidSweep(format!(
                    "grid for {} is not strictly monotone",
                    axis.param.column_name()
                )));
            }
        }
        if self.outputs.is_empty() {
            return Err(Error::InvalidSweep("no observables requested".into()));
        }
        if self.directions.is_empty() {
            return Err(Error::InvalidSweep("no drive directions".into()));
        }
        let magnon_only = self.directions.contains(&Direction::MagnonOnly);
        if magnon_only && self.directions.len() > 1 {
            return Err(Error::InvalidSweep(
                "magnon_only cannot be combined with probe directions".into(),
            ));
        }
        let fwd = self.directions.contains(&Direction::Forward);
        let bwd = self.directions.contains(&Direction::Backward);
        for out in &self.outputs {
            if let Observable::EntanglementIso(_) = out {
                if !(fwd && bwd) {
                    return Err(Error::InvalidSweep(
                        "entanglement isolation needs both forward and backward directions".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn needs_pipeline(&self) -> bool {
        self.outputs.iter().any(|o| o.needs_pipeline())
    }

    fn needs_transmission(&self) -> bool {
        self.outputs.iter().any(|o| o.needs_transmission())
    }

    fn needs_validation(&self) -> bool {
        self.needs_pipeline() && matches!(self.coupling, CouplingSource::Derived)
    }

    /// Pairs whose entanglement must be computed per direction.
    fn pairs(&self) -> Vec<ModePair> {
        let mut pairs = Vec::new();
        for out in &self.outputs {
            let p = match out {
                Observable::Entanglement(p) | Observable::EntanglementIso(p) => *p,
                _ => continue,
            };
            if !pairs.contains(&p) {
                pairs.push(p);
            }
        }
        pairs
    }
}

/// A table cell. Signed infinities are the isolation sentinels; `Null`
/// marks observables that do not exist at the point (no steady state,
/// undefined coefficient).
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Bool(bool),
    Text(String),
    PosInf,
    NegInf,
    Null,
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Float(v) => Some(*v),
            _ => None,
        }
    }

    fn from_iso(iso: IsoValue) -> Cell {
        match iso {
            IsoValue::Db(v) => Cell::Float(v),
            IsoValue::PosInf => Cell::PosInf,
            IsoValue::NegInf => Cell::NegInf,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub columns: Vec<String>,
    pub records: Vec<SweepRecord>,
}

impl SweepResult {
    /// Index of a column by name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }
}

fn direction_suffixed(base: &str, direction: Direction) -> String {
    match direction.suffix() {
        Some(sfx) => format!("{base}_{sfx}"),
        None => base.to_string(),
    }
}

fn build_columns(spec: &SweepSpec) -> Vec<String> {
    let mut cols: Vec<String> = spec
        .axes
        .iter()
        .map(|a| a.param.column_name().to_string())
        .collect();
    if spec.needs_pipeline() {
        for &d in &spec.directions {
            cols.push(direction_suffixed("stable", d));
        }
    }
    if spec.needs_validation() {
        for &d in &spec.directions {
            cols.push(direction_suffixed("validation_ok", d));
        }
    }
    for out in &spec.outputs {
        match out {
            Observable::T12 => cols.push("T12".into()),
            Observable::T21 => cols.push("T21".into()),
            Observable::TisoDb => cols.push("Tiso_db".into()),
            Observable::Entanglement(pair) => {
                for &d in &spec.directions {
                    cols.push(direction_suffixed(&format!("E_{}", pair.label()), d));
                }
            }
            Observable::EntanglementIso(pair) => {
                cols.push(format!("E_{}_iso_db", pair.label()));
            }
            Observable::StabilityMargin => {
                for &d in &spec.directions {
                    cols.push(direction_suffixed("stability_margin", d));
                }
            }
        }
    }
    cols.push("flags".into());
    cols
}

/// Per-direction pipeline outcome at one grid point.
struct DirOutcome {
    stable: Option<bool>,
    margin: Option<f64>,
    e_n: BTreeMap<ModePair, Option<f64>>,
    validation_ok: Option<bool>,
}

fn error_token(e: &Error) -> &'static str {
    match e {
        Error::SingularMeanField { .. } | Error::SingularLinearSystem => "singular",
        Error::Unstable { .. } => "unstable",
        Error::NonConvergence { .. } => "noconv",
        Error::EigenFailure => "eigfail",
        Error::NotPositiveDefinite { .. } => "notpd",
        Error::MethodDisagreement { .. } => "nu_disagree",
        Error::IntegrationTimeout { .. } | Error::IntegrationDiverged => "noconv",
        _ => "error",
    }
}

fn evaluate_direction(
    spec: &SweepSpec,
    params: &SystemParams,
    direction: Direction,
    pairs: &[ModePair],
    flags: &mut Vec<String>,
) -> DirOutcome {
    let sfx = direction.suffix().unwrap_or("m");
    let mut outcome = DirOutcome {
        stable: None,
        margin: None,
        e_n: pairs.iter().map(|p| (*p, None)).collect(),
        validation_ok: None,
    };

    let drives = match DriveConfig::from_params(params, direction) {
        Ok(d) => Some(d),
        Err(e) => {
            flags.push(format!("{}_{sfx}", error_token(&e)));
            None
        }
    };

    let coupling = match spec.coupling {
        CouplingSource::Fixed(value) => Ok(EffectiveCoupling { value, direction }),
        CouplingSource::Derived => match &drives {
            Some(d) => effective_coupling(params, d),
            None => Err(Error::InvalidSweep("no drives".into())),
        },
    };
    let coupling = match coupling {
        Ok(c) => c,
        Err(e) => {
            flags.push(format!("{}_{sfx}", error_token(&e)));
            return outcome;
        }
    };

    if spec.needs_validation() {
        if let Some(d) = &drives {
            let state = match spec.mean_field {
                MeanFieldMethod::ClosedForm => steady_state_closed_form(params, d),
                MeanFieldMethod::SelfConsistent => {
                    steady_state_self_consistent(params, d, 1e-10, 1000).map(|r| r.state)
                }
            };
            if let Ok(ss) = state {
                let report = validation_report(params, &ss, d);
                outcome.validation_ok = Some(report.occupancy_ok && report.kerr_ok);
            }
        }
    }

    let n_b = params.thermal_phonon_occupancy();
    let model = drift_matrix(params, &coupling, n_b);
    let report = match stability(&model) {
        Ok(r) => r,
        Err(e) => {
            flags.push(format!("{}_{sfx}", error_token(&e)));
            return outcome;
        }
    };
    outcome.stable = Some(report.stable);
    outcome.margin = Some(report.margin);
    if !report.stable {
        flags.push(format!("unstable_{sfx}"));
        return outcome;
    }

    let sol = match solve_lyapunov(&model) {
        Ok(s) => s,
        Err(e) => {
            flags.push(format!("{}_{sfx}", error_token(&e)));
            return outcome;
        }
    };
    if sol.ill_conditioned {
        flags.push(format!("lyapunov_warn_{sfx}"));
    }
    for pair in pairs {
        match entanglement_of_pair(&sol.cov, pair, spec.convention, direction) {
            Ok(rep) => {
                outcome.e_n.insert(*pair, Some(rep.e_n));
            }
            Err(e) => flags.push(format!("{}_{}_{sfx}", error_token(&e), pair.label())),
        }
    }
    outcome
}

fn evaluate_point(spec: &SweepSpec, coords: &[f64]) -> SweepRecord {
    let mut params = spec.base.clone();
    for (axis, &v) in spec.axes.iter().zip(coords) {
        axis.param.apply(&mut params, v);
    }

    let mut cells: Vec<Cell> = coords.iter().map(|&v| Cell::Float(v)).collect();
    let mut flags: Vec<String> = Vec::new();
    let pairs = spec.pairs();

    let outcomes: Vec<DirOutcome> = if spec.needs_pipeline() {
        spec.directions
            .iter()
            .map(|&d| evaluate_direction(spec, &params, d, &pairs, &mut flags))
            .collect()
    } else {
        Vec::new()
    };

    if spec.needs_pipeline() {
        for o in &outcomes {
            cells.push(o.stable.map_or(Cell::Null, Cell::Bool));
        }
    }
    if spec.needs_validation() {
        for o in &outcomes {
            cells.push(o.validation_ok.map_or(Cell::Null, Cell::Bool));
        }
    }

    let trans = if spec.needs_transmission() {
        match transmission_point(&params, params.p_a, spec.mean_field) {
            Ok(tp) => {
                if tp.t12.is_none() {
                    flags.push("t_undefined_p0".into());
                }
                Some(tp)
            }
            Err(e) => {
                flags.push(error_token(&e).to_string());
                None
            }
        }
    } else {
        None
    };

    let e_of = |d: Direction, pair: &ModePair| -> Option<f64> {
        let idx = spec.directions.iter().position(|&x| x == d)?;
        outcomes.get(idx).and_then(|o| o.e_n.get(pair).copied().flatten())
    };

    for out in &spec.outputs {
        match out {
            Observable::T12 => cells.push(
                trans
                    .as_ref()
                    .and_then(|t| t.t12)
                    .map_or(Cell::Null, Cell::Float),
            ),
            Observable::T21 => cells.push(
                trans
                    .as_ref()
                    .and_then(|t| t.t21)
                    .map_or(Cell::Null, Cell::Float),
            ),
            Observable::TisoDb => cells.push(
                trans
                    .as_ref()
                    .map_or(Cell::Null, |t| Cell::from_iso(t.t_iso_db)),
            ),
            Observable::Entanglement(pair) => {
                for (i, _) in spec.directions.iter().enumerate() {
                    let v = outcomes
                        .get(i)
                        .and_then(|o| o.e_n.get(pair).copied().flatten());
                    cells.push(v.map_or(Cell::Null, Cell::Float));
                }
            }
            Observable::EntanglementIso(pair) => {
                let e12 = e_of(Direction::Forward, pair);
                let e21 = e_of(Direction::Backward, pair);
                cells.push(match (e12, e21) {
                    (Some(a), Some(b)) => {
                        Cell::from_iso(crate::entanglement::entanglement_isolation(a, b))
                    }
                    _ => Cell::Null,
                });
            }
            Observable::StabilityMargin => {
                for (i, _) in spec.directions.iter().enumerate() {
                    let v = outcomes.get(i).and_then(|o| o.margin);
                    cells.push(v.map_or(Cell::Null, Cell::Float));
                }
            }
        }
    }

    cells.push(Cell::Text(flags.join(";")));
    SweepRecord { cells }
}

/// Run a sweep on `parallelism` worker threads. Records come back in grid
/// order (first axis outermost) independent of the worker count.
pub fn run_sweep(spec: &SweepSpec, parallelism: usize) -> Result<SweepResult> {
    spec.validate()?;
    let columns = build_columns(spec);

    let grid: Vec<Vec<f64>> = match spec.axes.len() {
        1 => spec.axes[0].values.iter().map(|&v| vec![v]).collect(),
        2 => {
            let (a, b) = (&spec.axes[0].values, &spec.axes[1].values);
            a.iter()
                .flat_map(|&x| b.iter().map(move |&y| vec![x, y]))
                .collect()
        }
        _ => unreachable!("validated"),
    };

    let threads = parallelism.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidSweep(format!("thread pool: {e}")))?;
    let records: Vec<SweepRecord> = pool.install(|| {
        grid.par_iter()
            .map(|coords| evaluate_point(spec, coords))
            .collect()
    });

    let result = SweepResult { columns, records };
    debug_assert!(result
        .records
        .iter()
        .all(|r| r.cells.len() == result.columns.len()));
    Ok(result)
}

/// Common base for the figure presets: ν_a = 10 GHz, ν_b = 10 MHz,
/// Δ_a = Δ_c = −ω_b, Δ̃_m = 0.9 ω_b, κ = κ_m = 2π×1 MHz, κ_b = 2π×100 Hz,
/// g_cm = 2π×3.2 MHz, g_mb = 2π×0.3 Hz, P_m = 94.5 mW, T = 20 mK.
fn base_builder(g_ac_hz: f64) -> ParamsBuilder {
    ParamsBuilder {
        omega_a: Some(1.0e10),
        omega_b: Some(1.0e7),
        delta_a: Some(-1.0e7),
        delta_c: Some(-1.0e7),
        delta_m_tilde: Some(0.9e7),
        g_ac: Some(g_ac_hz),
        g_cm: Some(3.2e6),
        g_mb: Some(0.3),
        kappa_a: Some(1.0e6),
        kappa_c: Some(1.0e6),
        kappa_m: Some(1.0e6),
        kappa_b: Some(100.0),
        p_m_watts: Some(94.5e-3),
        temperature_k: Some(0.020),
        ..ParamsBuilder::default()
    }
}

/// Raw parameter record behind a named preset, for callers that need to
/// override individual fields before building.
pub fn preset_builder(name: &str) -> Result<ParamsBuilder> {
    Ok(match name {
        "fig2a" | "fig2c" => base_builder(1.0e7),
        "fig2b" | "fig2d" | "fig4" => base_builder(3.2e6),
        "fig3" => {
            let mut b = base_builder(3.2e6);
            b.p_m_watts = Some(1.85e-3);
            b
        }
        "fig5" => {
            let mut b = base_builder(3.2e6);
            b.p_a_watts = Some(0.5);
            b.p_c_watts = Some(0.5);
            b
        }
        other => return Err(Error::UnknownPreset(other.to_string())),
    })
}

fn preset_base(name: &str) -> SystemParams {
    preset_builder(name)
        .and_then(|b| b.build())
        .expect("preset base parameters are valid")
}

pub const PRESET_NAMES: [&str; 7] = ["fig2a", "fig2b", "fig2c", "fig2d", "fig3", "fig4", "fig5"];

/// One-line description per preset, for `list`-style output.
pub fn preset_description(name: &str) -> Result<&'static str> {
    Ok(match name {
        "fig2a" | "fig2c" => {
            "transmission coefficients and isolation vs probe power, matched coupling g_ac = ω_b"
        }
        "fig2b" | "fig2d" => {
            "transmission coefficients and isolation vs probe power, asymmetric coupling g_ac = 0.32 ω_b"
        }
        "fig3" => "pairwise entanglement maps vs the two cavity detunings at fixed coupling",
        "fig4" => "forward/backward entanglement and isolation vs probe power",
        "fig5" => "forward/backward entanglement vs bath temperature at P = 0.5 W",
        other => return Err(Error::UnknownPreset(other.to_string())),
    })
}

/// Build the sweep for a named preset.
///
/// The transmission presets scan 201 points except the asymmetric-coupling
/// family, which uses a 20001-point grid so the sampled isolation peak near
/// the backward transmission zero is resolved. The detuning map is 101×101.
pub fn preset(name: &str) -> Result<SweepSpec> {
    let transmission_outputs = vec![Observable::T12, Observable::T21, Observable::TisoDb];
    let pair_mb = ModePair::new(Mode::Magnon, Mode::Phonon).expect("distinct");
    let pair_ab = ModePair::new(Mode::CavityA, Mode::Phonon).expect("distinct");
    let pair_ac = ModePair::new(Mode::CavityA, Mode::CavityC).expect("distinct");
    let pair_cm = ModePair::new(Mode::CavityC, Mode::Magnon).expect("distinct");

    let spec = match name {
        "fig2a" | "fig2c" => SweepSpec {
            base: preset_base(name),
            axes: vec![SweepAxis::linspace(AxisParam::PowerWatts, 0.0, 0.2, 201)],
            directions: vec![Direction::Forward, Direction::Backward],
            outputs: transmission_outputs,
            coupling: CouplingSource::Derived,
            mean_field: MeanFieldMethod::ClosedForm,
            convention: LognegConvention::ConsistentHalf,
        },
        "fig2b" | "fig2d" => SweepSpec {
            base: preset_base(name),
            axes: vec![SweepAxis::linspace(AxisParam::PowerWatts, 0.0, 0.2, 20001)],
            directions: vec![Direction::Forward, Direction::Backward],
            outputs: transmission_outputs,
            coupling: CouplingSource::Derived,
            mean_field: MeanFieldMethod::ClosedForm,
            convention: LognegConvention::ConsistentHalf,
        },
        "fig3" => SweepSpec {
            base: preset_base(name),
            axes: vec![
                SweepAxis::linspace(AxisParam::DeltaAOverOmegaB, -2.0, 2.0, 101),
                SweepAxis::linspace(AxisParam::DeltaCOverOmegaB, -2.0, 2.0, 101),
            ],
            directions: vec![Direction::MagnonOnly],
            outputs: vec![
                Observable::Entanglement(pair_ac),
                Observable::Entanglement(pair_cm),
                Observable::Entanglement(pair_mb),
                Observable::Entanglement(pair_ab),
                Observable::StabilityMargin,
            ],
            coupling: CouplingSource::Fixed(TAU * 2.5e6),
            mean_field: MeanFieldMethod::ClosedForm,
            convention: LognegConvention::ConsistentHalf,
        },
        "fig4" => SweepSpec {
            base: preset_base(name),
            // The backward cavity–phonon entanglement cuts off near 1 W, so
            // the power grid extends to 2 W to capture both branches.
            axes: vec![SweepAxis::linspace(AxisParam::PowerWatts, 0.0, 2.0, 201)],
            directions: vec![Direction::Forward, Direction::Backward],
            outputs: vec![
                Observable::Entanglement(pair_mb),
                Observable::EntanglementIso(pair_mb),
                Observable::Entanglement(pair_ab),
                Observable::EntanglementIso(pair_ab),
                Observable::StabilityMargin,
            ],
            coupling: CouplingSource::Derived,
            mean_field: MeanFieldMethod::ClosedForm,
            convention: LognegConvention::ConsistentHalf,
        },
        "fig5" => SweepSpec {
            base: preset_base(name),
            axes: vec![SweepAxis::linspace(
                AxisParam::TemperatureKelvin,
                0.0,
                0.3,
                201,
            )],
            directions: vec![Direction::Forward, Direction::Backward],
            outputs: vec![
                Observable::Entanglement(pair_mb),
                Observable::EntanglementIso(pair_mb),
                Observable::Entanglement(pair_ab),
                Observable::EntanglementIso(pair_ab),
                Observable::StabilityMargin,
            ],
            coupling: CouplingSource::Derived,
            mean_field: MeanFieldMethod::ClosedForm,
            convention: LognegConvention::ConsistentHalf,
        },
        other => return Err(Error::UnknownPreset(other.to_string())),
    };
    Ok(spec)
}
