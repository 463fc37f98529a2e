//! TOML configuration schema and its resolution into a sweep description.

use std::path::PathBuf;

use serde::Deserialize;

use magsim_core::entanglement::LognegConvention;
use magsim_core::mean_field::MeanFieldMethod;
use magsim_core::params::{Direction, ParamsBuilder, SystemParams};
use magsim_core::scenarios::{
    preset, preset_builder, AxisParam, CouplingSource, Observable, SweepAxis, SweepSpec,
};

use crate::run::CliError;

const TAU: f64 = std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl OutputFormat {
    pub fn from_key(key: &str) -> Result<Self, CliError> {
        match key {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(CliError::Config(format!(
                "key `format` must be \"csv\" or \"json\", got \"{other}\""
            ))),
        }
    }
}

/// Flat parameter overrides with unit-suffixed keys. `*_hz` values are
/// ordinary frequencies (rad/s when `angular = true`), powers are in mW.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    angular: Option<bool>,
    omega_a_hz: Option<f64>,
    omega_c_hz: Option<f64>,
    omega_m_hz: Option<f64>,
    omega_b_hz: Option<f64>,
    omega_d_hz: Option<f64>,
    b0_oe: Option<f64>,
    delta_a_hz: Option<f64>,
    delta_c_hz: Option<f64>,
    delta_m_hz: Option<f64>,
    delta_m_tilde_hz: Option<f64>,
    g_ac_hz: Option<f64>,
    g_cm_hz: Option<f64>,
    g_mb_hz: Option<f64>,
    kappa_a_hz: Option<f64>,
    kappa_c_hz: Option<f64>,
    kappa_m_hz: Option<f64>,
    kappa_b_hz: Option<f64>,
    p_a_mw: Option<f64>,
    p_c_mw: Option<f64>,
    p_m_mw: Option<f64>,
    temperature_k: Option<f64>,
    n_spins: Option<f64>,
    kerr_k_hz: Option<f64>,
}

impl RawParams {
    fn is_empty(&self) -> bool {
        let r = self;
        r.angular.is_none()
            && r.omega_a_hz.is_none()
            && r.omega_c_hz.is_none()
            && r.omega_m_hz.is_none()
            && r.omega_b_hz.is_none()
            && r.omega_d_hz.is_none()
            && r.b0_oe.is_none()
            && r.delta_a_hz.is_none()
            && r.delta_c_hz.is_none()
            && r.delta_m_hz.is_none()
            && r.delta_m_tilde_hz.is_none()
            && r.g_ac_hz.is_none()
            && r.g_cm_hz.is_none()
            && r.g_mb_hz.is_none()
            && r.kappa_a_hz.is_none()
            && r.kappa_c_hz.is_none()
            && r.kappa_m_hz.is_none()
            && r.kappa_b_hz.is_none()
            && r.p_a_mw.is_none()
            && r.p_c_mw.is_none()
            && r.p_m_mw.is_none()
            && r.temperature_k.is_none()
            && r.n_spins.is_none()
            && r.kerr_k_hz.is_none()
    }

    fn apply(&self, b: &mut ParamsBuilder) {
        if let Some(v) = self.angular {
            b.angular = v;
        }
        macro_rules! copy {
            ($($src:ident => $dst:ident),* $(,)?) => {
                $(if let Some(v) = self.$src { b.$dst = Some(v); })*
            };
        }
        copy!(
            omega_a_hz => omega_a,
            omega_c_hz => omega_c,
            omega_m_hz => omega_m,
            omega_b_hz => omega_b,
            omega_d_hz => omega_d,
            b0_oe => b0_oe,
            delta_a_hz => delta_a,
            delta_c_hz => delta_c,
            delta_m_hz => delta_m,
            delta_m_tilde_hz => delta_m_tilde,
            g_ac_hz => g_ac,
            g_cm_hz => g_cm,
            g_mb_hz => g_mb,
            kappa_a_hz => kappa_a,
            kappa_c_hz => kappa_c,
            kappa_m_hz => kappa_m,
            kappa_b_hz => kappa_b,
            temperature_k => temperature_k,
            n_spins => n_spins,
            kerr_k_hz => kerr_k,
        );
        if let Some(v) = self.p_a_mw {
            b.p_a_watts = Some(v * 1e-3);
        }
        if let Some(v) = self.p_c_mw {
            b.p_c_watts = Some(v * 1e-3);
        }
        if let Some(v) = self.p_m_mw {
            b.p_m_watts = Some(v * 1e-3);
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAxis {
    param: String,
    start: f64,
    stop: f64,
    points: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    axis: Vec<RawAxis>,
    directions: Vec<String>,
    outputs: Vec<String>,
    /// Fixed magnomechanical coupling in Hz; omitted means the coupling is
    /// derived from the drives at every grid point.
    coupling_fixed_hz: Option<f64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    scenario: Option<String>,
    out: Option<String>,
    format: Option<String>,
    threads: Option<usize>,
    logneg_convention: Option<String>,
    gmb_2pi: Option<bool>,
    meanfield_mode: Option<String>,
    params: Option<RawParams>,
    sweep: Option<RawSweep>,
}

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub scenario: Option<String>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub threads: Option<usize>,
    pub logneg_convention: LognegConvention,
    /// Interpret the quoted fixed-coupling value of the detuning-map
    /// preset as "G/2π in Hz" (default) rather than rad/s.
    pub gmb_2pi: bool,
    pub meanfield_mode: MeanFieldMethod,
    raw_params: RawParams,
    raw_sweep: Option<RawSweep>,
}

/// Parse and validate a configuration document.
pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let raw: RawConfig =
        toml::from_str(text).map_err(|e| CliError::Config(format!("config error: {e}")))?;

    let format = match raw.format.as_deref() {
        Some(key) => OutputFormat::from_key(key)?,
        None => OutputFormat::Csv,
    };
    if let Some(t) = raw.threads {
        if t < 1 {
            return Err(CliError::Config("key `threads` must be >= 1".into()));
        }
    }
    let logneg_convention = match raw.logneg_convention.as_deref() {
        None | Some("consistent") => LognegConvention::ConsistentHalf,
        Some("two_ln") => LognegConvention::TwoLn,
        Some(other) => {
            return Err(CliError::Config(format!(
                "key `logneg_convention` must be \"consistent\" or \"two_ln\", got \"{other}\""
            )))
        }
    };
    let meanfield_mode = match raw.meanfield_mode.as_deref() {
        None | Some("closed_form") => MeanFieldMethod::ClosedForm,
        Some("self_consistent") => MeanFieldMethod::SelfConsistent,
        Some(other) => {
            return Err(CliError::Config(format!(
                "key `meanfield_mode` must be \"closed_form\" or \"self_consistent\", got \"{other}\""
            )))
        }
    };
    if raw.scenario.is_some() && raw.sweep.is_some() {
        return Err(CliError::Config(
            "`scenario` and `[sweep]` are mutually exclusive".into(),
        ));
    }

    Ok(RunConfig {
        scenario: raw.scenario,
        out: raw.out.map(PathBuf::from),
        format,
        threads: raw.threads,
        logneg_convention,
        gmb_2pi: raw.gmb_2pi.unwrap_or(true),
        meanfield_mode,
        raw_params: raw.params.unwrap_or_default(),
        raw_sweep: raw.sweep,
    })
}

fn parse_direction(key: &str) -> Result<Direction, CliError> {
    match key {
        "forward" => Ok(Direction::Forward),
        "backward" => Ok(Direction::Backward),
        "magnon_only" => Ok(Direction::MagnonOnly),
        other => Err(CliError::Config(format!(
            "unknown direction \"{other}\" (expected forward, backward or magnon_only)"
        ))),
    }
}

impl RunConfig {
    /// System parameters: the preset base (when a scenario is named) merged
    /// with the `[params]` overrides, or the overrides alone.
    pub fn build_params(&self) -> Result<SystemParams, CliError> {
        let mut builder = match &self.scenario {
            Some(name) => preset_builder(name).map_err(|e| CliError::Config(e.to_string()))?,
            None => ParamsBuilder::new(),
        };
        self.raw_params.apply(&mut builder);
        builder
            .build()
            .map_err(|e| CliError::Config(e.to_string()))
    }

    /// Full sweep description.
    pub fn build_spec(&self) -> Result<SweepSpec, CliError> {
        let mut spec = match (&self.scenario, &self.raw_sweep) {
            (Some(name), None) => {
                let mut spec = preset(name).map_err(|e| CliError::Config(e.to_string()))?;
                if !self.raw_params.is_empty() {
                    spec.base = self.build_params()?;
                }
                if !self.gmb_2pi {
                    if let CouplingSource::Fixed(v) = spec.coupling {
                        spec.coupling = CouplingSource::Fixed(v / TAU);
                    }
                }
                spec
            }
            (None, Some(raw)) => {
                let base = self.build_params()?;
                let mut axes = Vec::new();
                for ax in &raw.axis {
                    if ax.points == 0 {
                        return Err(CliError::Config(format!(
                            "axis `{}` needs at least one point",
                            ax.param
                        )));
                    }
                    let param = AxisParam::from_key(&ax.param)
                        .map_err(|e| CliError::Config(e.to_string()))?;
                    axes.push(SweepAxis::linspace(param, ax.start, ax.stop, ax.points));
                }
                let mut directions = Vec::new();
                for d in &raw.directions {
                    let d = parse_direction(d)?;
                    if !directions.contains(&d) {
                        directions.push(d);
                    }
                }
                let mut outputs = Vec::new();
                for key in &raw.outputs {
                    let o = Observable::from_key(key)
                        .map_err(|e| CliError::Config(e.to_string()))?;
                    if !outputs.contains(&o) {
                        outputs.push(o);
                    }
                }
                let coupling = match raw.coupling_fixed_hz {
                    Some(hz) => CouplingSource::Fixed(TAU * hz),
                    None => CouplingSource::Derived,
                };
                SweepSpec {
                    base,
                    axes,
                    directions,
                    outputs,
                    coupling,
                    mean_field: MeanFieldMethod::ClosedForm,
                    convention: LognegConvention::ConsistentHalf,
                }
            }
            (None, None) => {
                return Err(CliError::Config(
                    "config must name a `scenario` or define a `[sweep]` table".into(),
                ))
            }
            (Some(_), Some(_)) => unreachable!("rejected at parse"),
        };
        spec.convention = self.logneg_convention;
        spec.mean_field = self.meanfield_mode;
        spec.validate().map_err(|e| CliError::Config(e.to_string()))?;
        Ok(spec)
    }
}
