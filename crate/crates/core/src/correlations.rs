//! Entanglement and correlation measures for two-qubit states.
//!
//! All information quantities are in bits. Classical correlation is the
//! maximum entropy reduction of one qubit achievable by a rank-one projective
//! measurement on the other; discord is mutual information minus that
//! maximum. The maximization runs a dense (θ, φ) grid followed by a
//! Nelder–Mead polish from the best grid point.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{check_unit, Error, Result};
use crate::qmat::{
    c, clamp_psd, hermitian_eigensystem, kron, matrix_sqrt_psd, pauli, CMat, CMat2, DensityMatrix, C64,
};
use crate::simplex;
use crate::states::{partial_trace, BlochCorrelationForm, Subsystem, XState};

/// Outcomes with probability below this contribute nothing to the
/// conditional entropy.
pub const DEGENERATE_PROB: f64 = 1e-14;
/// Negative discord down to this value is treated as round-off.
pub const DISCORD_FLOOR: f64 = -1e-9;
/// Largest |c₀| accepted as Bell diagonal.
pub const BELL_DIAGONAL_TOL: f64 = 1e-12;

/// Angles of the measured basis
/// `|ψ₁⟩ = cos θ|0⟩ + e^{iφ} sin θ|1⟩`, `|ψ₂⟩ = e^{−iφ} sin θ|0⟩ − cos θ|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementBasis {
    pub theta: f64,
    pub phi: f64,
}

impl MeasurementBasis {
    pub fn new(theta: f64, phi: f64) -> Self {
        MeasurementBasis { theta, phi }
    }

    pub fn computational() -> Self {
        MeasurementBasis { theta: 0.0, phi: 0.0 }
    }

    /// Basis vector for outcome `k ∈ {1, 2}`.
    pub fn vector(&self, k: usize) -> [C64; 2] {
        let (s, co) = self.theta.sin_cos();
        let phase = C64::from_polar(1.0, self.phi);
        match k {
            1 => [c(co, 0.0), phase * s],
            2 => [phase.conj() * s, c(-co, 0.0)],
            _ => panic!("measurement outcome must be 1 or 2, got {k}"),
        }
    }

    pub fn projector(&self, k: usize) -> CMat2 {
        let v = self.vector(k);
        CMat::outer(&v, &v)
    }

    /// Same projector pair, angles folded into θ ∈ [0, π), φ ∈ [0, 2π).
    fn normalized(self) -> Self {
        MeasurementBasis { theta: self.theta.rem_euclid(PI), phi: self.phi.rem_euclid(2.0 * PI) }
    }
}

/// Von Neumann entropy in bits of a Hermitian unit-trace matrix.
pub fn entropy<const N: usize>(m: &CMat<N>) -> Result<f64> {
    let eig = hermitian_eigensystem(m).map_err(|e| Error::InvalidState(e.to_string()))?;
    let tr: f64 = eig.values.iter().sum();
    if (tr - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidState(format!("trace {tr}")));
    }
    let mut s = 0.0;
    for &lambda in &eig.values {
        let p = clamp_psd(lambda).map_err(|e| Error::InvalidState(e.to_string()))?;
        s -= xlog2x(p.min(1.0));
    }
    Ok(s.max(0.0))
}

pub fn state_entropy(rho: &DensityMatrix) -> f64 {
    entropy(rho.mat()).expect("validated density matrix")
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Closed-form entropy of a qubit state, used on the optimizer's hot path.
fn qubit_entropy(m: &CMat2) -> f64 {
    let mean = 0.5 * (m.0[0][0].re + m.0[1][1].re);
    let half_gap = 0.5 * (m.0[0][0].re - m.0[1][1].re);
    let r = (half_gap * half_gap + m.0[0][1].norm_sqr()).sqrt();
    let hi = (mean + r).clamp(0.0, 1.0);
    let lo = (mean - r).clamp(0.0, 1.0);
    -(xlog2x(hi) + xlog2x(lo))
}

/// `I = S(ρ_A) + S(ρ_B) − S(ρ)`
pub fn mutual_information(rho: &DensityMatrix) -> f64 {
    let sa = qubit_entropy(&partial_trace(rho, Subsystem::A));
    let sb = qubit_entropy(&partial_trace(rho, Subsystem::B));
    sa + sb - state_entropy(rho)
}

/// One outcome of a projective measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalOutcome {
    pub probability: f64,
    /// Post-measurement state of the unmeasured qubit; `I/2` when degenerate.
    pub state: CMat2,
    pub degenerate: bool,
}

fn project(rho: &DensityMatrix, v: &[C64; 2], measured: Subsystem) -> CMat2 {
    // ⟨ψ|_measured ρ |ψ⟩_measured, a 2×2 operator on the other qubit
    let m = rho.mat();
    let mut out = CMat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = c(0.0, 0.0);
            for k in 0..2 {
                for l in 0..2 {
                    let (r, col) = match measured {
                        Subsystem::B => (2 * i + k, 2 * j + l),
                        Subsystem::A => (2 * k + i, 2 * l + j),
                    };
                    acc += v[k].conj() * m.0[r][col] * v[l];
                }
            }
            out.0[i][j] = acc;
        }
    }
    out
}

/// Measure qubit B in `basis` and return outcome `k ∈ {1, 2}` with the
/// resulting state of qubit A.
pub fn conditional_state(rho: &DensityMatrix, basis: &MeasurementBasis, k: usize) -> ConditionalOutcome {
    conditional_state_on(rho, basis, k, Subsystem::B)
}

/// As [`conditional_state`], measuring the chosen subsystem.
pub fn conditional_state_on(
    rho: &DensityMatrix,
    basis: &MeasurementBasis,
    k: usize,
    measured: Subsystem,
) -> ConditionalOutcome {
    let unnormalized = project(rho, &basis.vector(k), measured);
    let probability = unnormalized.trace().re.max(0.0);
    if probability < DEGENERATE_PROB {
        return ConditionalOutcome {
            probability,
            state: CMat2::identity().scale_re(0.5),
            degenerate: true,
        };
    }
    ConditionalOutcome { probability, state: unnormalized.scale_re(1.0 / probability), degenerate: false }
}

/// `S(ρ_unmeasured) − Σ_k p_k S(ρ_{·|k})` for one measurement basis.
pub fn measurement_gain(rho: &DensityMatrix, basis: &MeasurementBasis, measured: Subsystem) -> f64 {
    let kept = match measured {
        Subsystem::A => Subsystem::B,
        Subsystem::B => Subsystem::A,
    };
    let before = qubit_entropy(&partial_trace(rho, kept));
    let after: f64 = (1..=2)
        .map(|k| {
            let out = conditional_state_on(rho, basis, k, measured);
            if out.degenerate {
                0.0
            } else {
                out.probability * qubit_entropy(&out.state)
            }
        })
        .sum();
    before - after
}

/// Settings for the measurement maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimizerConfig {
    /// Grid points over θ ∈ [0, π/2], endpoints included.
    pub theta_steps: usize,
    /// Grid points over φ ∈ [0, 2π), endpoint excluded.
    pub phi_steps: usize,
    /// Simplex stops when the spread of objective values falls below this.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig { theta_steps: 64, phi_steps: 128, tolerance: 1e-10, max_iterations: 500 }
    }
}

/// Classical correlation measuring qubit B, with the maximizing basis.
pub fn classical_correlation(rho: &DensityMatrix) -> Result<(f64, MeasurementBasis)> {
    classical_correlation_with(rho, Subsystem::B, &OptimizerConfig::default())
}

pub fn classical_correlation_with(
    rho: &DensityMatrix,
    measured: Subsystem,
    config: &OptimizerConfig,
) -> Result<(f64, MeasurementBasis)> {
    let objective = |x: [f64; 2]| measurement_gain(rho, &MeasurementBasis::new(x[0], x[1]), measured);

    let dtheta = FRAC_PI_2 / (config.theta_steps.max(2) - 1) as f64;
    let dphi = 2.0 * PI / config.phi_steps.max(1) as f64;
    let mut best = ([0.0, 0.0], f64::NEG_INFINITY);
    for i in 0..config.theta_steps.max(2) {
        let theta = i as f64 * dtheta;
        // at the poles φ is irrelevant
        let phis = if i == 0 { 1 } else { config.phi_steps.max(1) };
        for j in 0..phis {
            let x = [theta, j as f64 * dphi];
            let v = objective(x);
            if v > best.1 {
                best = (x, v);
            }
        }
    }

    let polished = simplex::maximize(objective, best.0, [dtheta, dphi], config.tolerance, config.max_iterations);
    if !polished.converged {
        return Err(Error::OptimizerDidNotConverge(polished.iterations));
    }
    let (point, value) = if polished.value >= best.1 { (polished.point, polished.value) } else { best };
    Ok((value, MeasurementBasis::new(point[0], point[1]).normalized()))
}

/// Correlation measures of one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub concurrence: f64,
    pub mutual_info: f64,
    pub classical_corr: f64,
    pub discord: f64,
    pub argmax_basis: MeasurementBasis,
}

/// Concurrence, mutual information, classical correlation (measuring B) and
/// discord.
pub fn discord(rho: &DensityMatrix) -> Result<CorrelationReport> {
    discord_with(rho, &OptimizerConfig::default())
}

pub fn discord_with(rho: &DensityMatrix, config: &OptimizerConfig) -> Result<CorrelationReport> {
    let mutual_info = mutual_information(rho);
    let (mut classical_corr, argmax_basis) = classical_correlation_with(rho, Subsystem::B, config)?;
    let raw = mutual_info - classical_corr;
    if (DISCORD_FLOOR..0.0).contains(&raw) {
        classical_corr = mutual_info;
    }
    Ok(CorrelationReport {
        concurrence: concurrence_general(rho)?,
        mutual_info,
        classical_corr,
        discord: mutual_info - classical_corr,
        argmax_basis,
    })
}

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The λ_i are the eigenvalues of `√(√ρ·ρ̃·√ρ)` with
/// `ρ̃ = (σ₂⊗σ₂)ρ*(σ₂⊗σ₂)`; this Hermitian matrix has the same spectrum as
/// the square root of `ρρ̃`.
pub fn concurrence_general(rho: &DensityMatrix) -> Result<f64> {
    let yy = kron(&pauli::sigma_y(), &pauli::sigma_y());
    let flipped = yy * rho.mat().conj() * yy;
    let root = matrix_sqrt_psd(rho.mat()).map_err(|e| Error::InvalidState(e.to_string()))?;
    let inner = (root * flipped * root).hermitian_part();
    let r = matrix_sqrt_psd(&inner).map_err(|e| Error::InvalidState(e.to_string()))?;
    let lambda = hermitian_eigensystem(&r).map_err(|e| Error::InvalidState(e.to_string()))?.values;
    Ok((lambda[0] - lambda[1] - lambda[2] - lambda[3]).clamp(0.0, 1.0))
}

/// `C = 2·max{0, |ρ₁₄| − √(ρ₂₂ρ₃₃), |ρ₂₃| − √(ρ₁₁ρ₄₄)}`
pub fn concurrence_x(x: &XState) -> f64 {
    let [p1, p2, p3, p4] = x.populations();
    let l1 = x.rho14().norm() - (p2 * p3).sqrt();
    let l2 = x.rho23().norm() - (p1 * p4).sqrt();
    (2.0 * l1.max(l2).max(0.0)).min(1.0)
}

/// Closed-form concurrence of a dephased Werner state as derived from the
/// Kraus evolution: `max{0, α(1−γ) − (1−α)/2}`.
pub fn concurrence_dephasing_werner(alpha: f64, gamma: f64) -> Result<f64> {
    check_unit("alpha", alpha)?;
    check_unit("gamma", gamma)?;
    Ok((alpha * (1.0 - gamma) - (1.0 - alpha) / 2.0).max(0.0))
}

/// The published compact expression `α(3/2 − 2γ) − 1/2` (clipped at zero).
/// Kept for comparison only; it does not follow from the dephasing channel.
pub fn published_concurrence_dephasing_werner(alpha: f64, gamma: f64) -> Result<f64> {
    check_unit("alpha", alpha)?;
    check_unit("gamma", gamma)?;
    Ok((alpha * (1.5 - 2.0 * gamma) - 0.5).max(0.0))
}

/// The published compact discord for dephased Werner states,
/// `[F(a+b) + F(a−b)]/4 − F(a)/2` with `F(x) = x log₂ x`, `a = 1−α`,
/// `b = 2α(1−γ)`. Evaluated verbatim; it disagrees with the numerical and
/// Bell-diagonal values, and is undefined once `a − b ≤ 0`.
pub fn published_discord_dephasing_werner(alpha: f64, gamma: f64) -> Result<f64> {
    check_unit("alpha", alpha)?;
    check_unit("gamma", gamma)?;
    let a = 1.0 - alpha;
    let b = 2.0 * alpha * (1.0 - gamma);
    if a - b <= 0.0 {
        return Err(Error::DomainExceeded(a - b));
    }
    Ok((xlog2x(a + b) + xlog2x(a - b)) / 4.0 - xlog2x(a) / 2.0)
}

/// Discord of a Bell-diagonal state `¼[I + Σ c_j σ_j⊗σ_j]` in closed form:
/// `Q = ½[(1−c)log₂(1−c) + (1+c)log₂(1+c)]` with `c = max_j |c_j|`.
pub fn discord_bell_diagonal(form: &BlochCorrelationForm) -> Result<f64> {
    if form.c0.abs() > BELL_DIAGONAL_TOL {
        return Err(Error::NotBellDiagonal(form.c0));
    }
    let [c1, c2, c3] = form.c;
    let eigenvalues = [
        (1.0 - c1 - c2 - c3) / 4.0,
        (1.0 - c1 + c2 + c3) / 4.0,
        (1.0 + c1 - c2 + c3) / 4.0,
        (1.0 + c1 + c2 - c3) / 4.0,
    ];
    if eigenvalues.iter().any(|&l| l < -1e-12) {
        return Err(Error::InvalidState(format!("Bell-diagonal eigenvalues {eigenvalues:?}")));
    }
    let joint: f64 = -eigenvalues.iter().map(|&l| xlog2x(l.max(0.0))).sum::<f64>();
    let mutual_info = 2.0 - joint;
    let cmax = c1.abs().max(c2.abs()).max(c3.abs()).min(1.0);
    let classical = 0.5 * (xlog2x(1.0 - cmax) + xlog2x(1.0 + cmax));
    Ok(mutual_info - classical)
}
