//! wasm-bindgen surface for the static demo page in `www/`.
//!
//! Three operations: one-point evaluation, α–γ surfaces of concurrence and
//! discord, and the sudden-death curve γ_esd(α).

use qdiscord::correlations::{discord_with, OptimizerConfig};
use qdiscord::experiments::{
    esd_gamma, evolve, linspace, sweep_over, ChannelConfig, NoiseKind, StateFamily,
};
use wasm_bindgen::prelude::*;

// The demo trades grid density for responsiveness; the simplex polish still
// drives each maximization to 1e-10.
const DEMO_OPTIMIZER: OptimizerConfig =
    OptimizerConfig { theta_steps: 12, phi_steps: 24, tolerance: 1e-10, max_iterations: 500 };

pub fn parse_config(channel: &str, state: &str, q: f64) -> Result<ChannelConfig, String> {
    let kind = match channel {
        "dephasing" => NoiseKind::Dephasing,
        "gad" => NoiseKind::Gad,
        "depolarizing" => NoiseKind::Depolarizing,
        "dephasing+gad" => NoiseKind::DephasingPlusGad,
        other => return Err(format!("unknown channel {other:?}")),
    };
    let family = match state {
        "werner" => StateFamily::Werner,
        "phi" => StateFamily::Phi,
        other => return Err(format!("unknown state family {other:?}")),
    };
    ChannelConfig::new(kind, family, q).map_err(|e| e.to_string())
}

/// JSON report for a single (α, γ).
pub fn point_json(channel: &str, state: &str, q: f64, alpha: f64, gamma: f64) -> Result<String, String> {
    let config = parse_config(channel, state, q)?;
    let rho = evolve(&config, alpha, gamma).map_err(|e| e.to_string())?;
    let report = discord_with(&rho, &DEMO_OPTIMIZER).map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Row-major (α outer, γ inner) concurrence and discord on a `steps × steps`
/// grid over [0, 1]².
#[wasm_bindgen]
pub struct Surfaces {
    steps: usize,
    concurrence: Vec<f64>,
    discord: Vec<f64>,
}

#[wasm_bindgen]
impl Surfaces {
    #[wasm_bindgen(getter)]
    pub fn steps(&self) -> usize {
        self.steps
    }

    #[wasm_bindgen(getter)]
    pub fn concurrence(&self) -> Vec<f64> {
        self.concurrence.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn discord(&self) -> Vec<f64> {
        self.discord.clone()
    }
}

pub fn compute_surfaces(channel: &str, state: &str, q: f64, steps: usize) -> Result<Surfaces, String> {
    if steps < 2 {
        return Err(format!("need at least 2 grid steps, got {steps}"));
    }
    let config = parse_config(channel, state, q)?;
    let axis = linspace(0.0, 1.0, steps);
    let grid = sweep_over(&config, &axis, &axis, &DEMO_OPTIMIZER).map_err(|e| e.to_string())?;
    Ok(Surfaces {
        steps,
        concurrence: grid.rows.iter().map(|r| r.report.concurrence).collect(),
        discord: grid.rows.iter().map(|r| r.report.discord).collect(),
    })
}

/// γ_esd for `n` evenly spaced α in [0, 1]; NaN where entanglement never
/// dies at finite γ.
pub fn compute_esd_curve(channel: &str, state: &str, q: f64, n: usize) -> Result<Vec<f64>, String> {
    let config = parse_config(channel, state, q)?;
    linspace(0.0, 1.0, n)
        .into_iter()
        .map(|a| {
            esd_gamma(&config, a, 1e-6)
                .map(|r| r.gamma_esd.unwrap_or(f64::NAN))
                .map_err(|e| e.to_string())
        })
        .collect()
}

#[wasm_bindgen]
pub fn point(channel: &str, state: &str, q: f64, alpha: f64, gamma: f64) -> Result<String, JsValue> {
    point_json(channel, state, q, alpha, gamma).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn surfaces(channel: &str, state: &str, q: f64, steps: usize) -> Result<Surfaces, JsValue> {
    compute_surfaces(channel, state, q, steps).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = esdCurve)]
pub fn esd_curve(channel: &str, state: &str, q: f64, n: usize) -> Result<Vec<f64>, JsValue> {
    compute_esd_curve(channel, state, q, n).map_err(|e| JsValue::from_str(&e))
}
