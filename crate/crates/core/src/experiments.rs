//! (α, γ) sweeps over the four noise configurations, sudden-death search and
//! discord positivity scans.

use serde::{Deserialize, Serialize};

use crate::channels::{apply_two_qubit, compose, dephasing, depolarizing, gad, KrausChannel};
use crate::correlations::{concurrence_general, discord_with, CorrelationReport, OptimizerConfig};
use crate::error::{check_unit, Error, Result};
use crate::qmat::DensityMatrix;
use crate::states::{phi_state, werner};

/// Concurrence below this counts as zero.
pub const ZERO_CONCURRENCE: f64 = 1e-12;
/// Discord above this counts as alive.
pub const DISCORD_MARGIN: f64 = 1e-7;
pub const DEFAULT_STEPS: usize = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoiseKind {
    Dephasing,
    Gad,
    Depolarizing,
    /// Dephasing followed by GAD on each qubit, both at the same γ.
    DephasingPlusGad,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StateFamily {
    Werner,
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelConfig {
    pub kind: NoiseKind,
    /// GAD asymptotic ground-state population; ignored without a GAD factor.
    pub q: f64,
    pub state_family: StateFamily,
}

impl ChannelConfig {
    pub fn new(kind: NoiseKind, state_family: StateFamily, q: f64) -> Result<Self> {
        check_unit("q", q)?;
        Ok(ChannelConfig { kind, q, state_family })
    }

    /// Per-qubit channel at decoherence degree γ.
    pub fn channel(&self, gamma: f64) -> Result<KrausChannel> {
        match self.kind {
            NoiseKind::Dephasing => dephasing(gamma),
            NoiseKind::Gad => gad(gamma, self.q),
            NoiseKind::Depolarizing => depolarizing(gamma),
            NoiseKind::DephasingPlusGad => compose(&dephasing(gamma)?, &gad(gamma, self.q)?),
        }
    }

    pub fn initial_state(&self, alpha: f64) -> Result<DensityMatrix> {
        match self.state_family {
            StateFamily::Werner => werner(alpha),
            StateFamily::Phi => phi_state(alpha),
        }
    }
}

/// State at (α, γ) for a configuration.
pub fn evolve(config: &ChannelConfig, alpha: f64, gamma: f64) -> Result<DensityMatrix> {
    let rho0 = config.initial_state(alpha)?;
    let ch = config.channel(gamma)?;
    apply_two_qubit(&rho0, &ch, &ch)
}

/// `n` evenly spaced points on `[lo, hi]`, endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![lo],
        _ => (0..n)
            .map(|i| if i == n - 1 { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub gamma: f64,
    pub report: CorrelationReport,
}

/// Results on the Cartesian (α, γ) grid, α outer and γ inner.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub config: ChannelConfig,
    pub alphas: Vec<f64>,
    pub gammas: Vec<f64>,
    pub rows: Vec<SweepRow>,
}

impl SweepGrid {
    pub fn row(&self, i_alpha: usize, i_gamma: usize) -> &SweepRow {
        &self.rows[i_alpha * self.gammas.len() + i_gamma]
    }
}

/// Uniform `n_alpha × n_gamma` sweep over [0, 1]².
pub fn sweep(config: &ChannelConfig, n_alpha: usize, n_gamma: usize) -> Result<SweepGrid> {
    if n_alpha < 2 || n_gamma < 2 {
        return Err(Error::InvalidState(format!(
            "sweep needs at least 2 points per axis, got {n_alpha}×{n_gamma}"
        )));
    }
    sweep_over(config, &linspace(0.0, 1.0, n_alpha), &linspace(0.0, 1.0, n_gamma), &OptimizerConfig::default())
}

/// Sweep over explicit axes. Cells are independent and may be evaluated in
/// parallel; results are gathered by index.
pub fn sweep_over(
    config: &ChannelConfig,
    alphas: &[f64],
    gammas: &[f64],
    optimizer: &OptimizerConfig,
) -> Result<SweepGrid> {
    let cells: Vec<(f64, f64)> =
        alphas.iter().flat_map(|&a| gammas.iter().map(move |&g| (a, g))).collect();
    let eval = |&(alpha, gamma): &(f64, f64)| -> Result<SweepRow> {
        let rho = evolve(config, alpha, gamma)?;
        Ok(SweepRow { alpha, gamma, report: discord_with(&rho, optimizer)? })
    };

    #[cfg(feature = "parallel")]
    let rows = {
        use rayon::prelude::*;
        cells.par_iter().map(eval).collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let rows = cells.iter().map(eval).collect::<Result<Vec<_>>>()?;

    Ok(SweepGrid { config: *config, alphas: alphas.to_vec(), gammas: gammas.to_vec(), rows })
}

/// Concurrence only, on the same grid layout as [`sweep_over`].
pub fn concurrence_surface(config: &ChannelConfig, alphas: &[f64], gammas: &[f64]) -> Result<Vec<f64>> {
    alphas
        .iter()
        .flat_map(|&a| gammas.iter().map(move |&g| (a, g)))
        .map(|(a, g)| concurrence_general(&evolve(config, a, g)?))
        .collect()
}

/// Sudden-death location along one α trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EsdResult {
    pub alpha: f64,
    /// First γ at which concurrence vanishes; `None` if it only reaches zero
    /// asymptotically, or the initial state is not entangled.
    pub gamma_esd: Option<f64>,
    pub bracket_width: f64,
}

fn concurrence_at(config: &ChannelConfig, alpha: f64, gamma: f64) -> Result<f64> {
    concurrence_general(&evolve(config, alpha, gamma.clamp(0.0, 1.0))?)
}

/// Bisection for the first zero of concurrence in γ ∈ [0, 1]. Relies on
/// concurrence being non-increasing in γ under these Markovian channels.
pub fn esd_gamma(config: &ChannelConfig, alpha: f64, tol: f64) -> Result<EsdResult> {
    if !(tol > 0.0 && tol < 1.0) {
        return Err(Error::ParamOutOfRange { name: "tol", value: tol });
    }
    let none = EsdResult { alpha, gamma_esd: None, bracket_width: 0.0 };
    if concurrence_at(config, alpha, 0.0)? < ZERO_CONCURRENCE {
        return Ok(none);
    }
    let near_end = 1.0 - tol;
    if concurrence_at(config, alpha, near_end)? >= ZERO_CONCURRENCE {
        return Ok(none);
    }
    let (mut lo, mut hi) = (0.0, near_end);
    while hi - lo >= tol {
        let mid = 0.5 * (lo + hi);
        if concurrence_at(config, alpha, mid)? < ZERO_CONCURRENCE {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // a zero only inside the last tol-interval is indistinguishable from
    // vanishing at γ = 1
    if hi == near_end {
        return Ok(none);
    }
    Ok(EsdResult { alpha, gamma_esd: Some(0.5 * (lo + hi)), bracket_width: hi - lo })
}

/// Check an [`EsdResult`]: concurrence positive just before, zero just after.
pub fn verify_esd(config: &ChannelConfig, esd: &EsdResult) -> Result<bool> {
    match esd.gamma_esd {
        None => Ok(true),
        Some(g) => {
            let before = concurrence_at(config, esd.alpha, g - esd.bracket_width)?;
            let after = concurrence_at(config, esd.alpha, g + esd.bracket_width)?;
            Ok(before >= ZERO_CONCURRENCE && after < ZERO_CONCURRENCE)
        }
    }
}

/// Grid for [`discord_positivity_scan`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanBounds {
    pub alpha: (f64, f64),
    pub n_alpha: usize,
    pub gamma: (f64, f64),
    pub n_gamma: usize,
}

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds { alpha: (0.05, 0.95), n_alpha: 19, gamma: (0.0, 0.95), n_gamma: 20 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscordMinimum {
    pub alpha: f64,
    pub gamma: f64,
    pub discord: f64,
}

/// Smallest discord over the grid. The grid stays away from the separable
/// endpoints α ∈ {0, 1} and from γ = 1.
pub fn discord_positivity_scan(config: &ChannelConfig, bounds: &ScanBounds) -> Result<DiscordMinimum> {
    let (a0, a1) = bounds.alpha;
    let (g0, g1) = bounds.gamma;
    if !(0.05 <= a0 && a0 <= a1 && a1 <= 0.95) {
        return Err(Error::ParamOutOfRange { name: "alpha bounds", value: if a0 < 0.05 { a0 } else { a1 } });
    }
    if !(0.0 <= g0 && g0 <= g1 && g1 <= 0.95) {
        return Err(Error::ParamOutOfRange { name: "gamma bounds", value: if g0 < 0.0 { g0 } else { g1 } });
    }
    let grid = sweep_over(
        config,
        &linspace(a0, a1, bounds.n_alpha),
        &linspace(g0, g1, bounds.n_gamma),
        &OptimizerConfig::default(),
    )?;
    grid.rows
        .iter()
        .map(|r| DiscordMinimum { alpha: r.alpha, gamma: r.gamma, discord: r.report.discord })
        .min_by(|x, y| x.discord.total_cmp(&y.discord))
        .ok_or_else(|| Error::InvalidState("empty scan grid".into()))
}
