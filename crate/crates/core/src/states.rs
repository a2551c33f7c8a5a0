//! Initial states and alternative two-qubit representations.
//!
//! Basis order is |00⟩, |01⟩, |10⟩, |11⟩, so the coherence usually written
//! ρ₁₄ is `get(0, 3)` and ρ₂₃ is `get(1, 2)`.

use serde::{Deserialize, Serialize};

use crate::error::{check_unit, Error, Result};
use crate::qmat::{c, kron, pauli, CMat2, CMat4, DensityMatrix, C64};

/// Entries that must vanish for an X state.
pub const X_FORM_TOL: f64 = 1e-10;
/// Round-trip tolerance when projecting onto the symmetric Bloch form.
pub const BLOCH_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

/// `(1−α)·I/4 + α·|Ψ⁻⟩⟨Ψ⁻|` with `|Ψ⁻⟩ = (|01⟩ − |10⟩)/√2`.
pub fn werner(alpha: f64) -> Result<DensityMatrix> {
    check_unit("alpha", alpha)?;
    let mut m = CMat4::diag([
        (1.0 - alpha) / 4.0,
        (1.0 + alpha) / 4.0,
        (1.0 + alpha) / 4.0,
        (1.0 - alpha) / 4.0,
    ]);
    m.0[1][2] = c(-alpha / 2.0, 0.0);
    m.0[2][1] = c(-alpha / 2.0, 0.0);
    DensityMatrix::new(m)
}

/// `|Φ⟩ = √(1−α)|00⟩ + √α|11⟩`
pub fn phi_state(alpha: f64) -> Result<DensityMatrix> {
    check_unit("alpha", alpha)?;
    let mut m = CMat4::diag([1.0 - alpha, 0.0, 0.0, alpha]);
    let coh = (alpha * (1.0 - alpha)).sqrt();
    m.0[0][3] = c(coh, 0.0);
    m.0[3][0] = c(coh, 0.0);
    DensityMatrix::new(m)
}

/// Two-qubit state whose only nonzero entries are on the diagonal and the
/// anti-diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    populations: [f64; 4],
    rho14: C64,
    rho23: C64,
}

impl XState {
    pub fn new(populations: [f64; 4], rho14: C64, rho23: C64) -> Result<Self> {
        if populations.iter().any(|&p| !(p >= 0.0)) {
            return Err(Error::InvalidState(format!("negative population in {populations:?}")));
        }
        let total: f64 = populations.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState(format!("populations sum to {total}")));
        }
        let [p1, p2, p3, p4] = populations;
        if rho14.norm() > (p1 * p4).sqrt() + 1e-12 || rho23.norm() > (p2 * p3).sqrt() + 1e-12 {
            return Err(Error::InvalidState("X-state coherence exceeds positivity bound".into()));
        }
        Ok(XState { populations, rho14, rho23 })
    }

    pub fn populations(&self) -> [f64; 4] {
        self.populations
    }

    pub fn rho14(&self) -> C64 {
        self.rho14
    }

    pub fn rho23(&self) -> C64 {
        self.rho23
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        let mut m = CMat4::diag(self.populations);
        m.0[0][3] = self.rho14;
        m.0[3][0] = self.rho14.conj();
        m.0[1][2] = self.rho23;
        m.0[2][1] = self.rho23.conj();
        DensityMatrix::new(m)
    }
}

/// Extract the X-state parameters; fails if any of ρ₁₂, ρ₁₃, ρ₂₄, ρ₃₄ is
/// non-negligible.
pub fn to_x_state(rho: &DensityMatrix) -> Result<XState> {
    const EXCLUDED: [(&str, usize, usize); 4] =
        [("rho12", 0, 1), ("rho13", 0, 2), ("rho24", 1, 3), ("rho34", 2, 3)];
    for (entry, i, j) in EXCLUDED {
        let magnitude = rho.get(i, j).norm();
        if magnitude >= X_FORM_TOL {
            return Err(Error::NotXForm { entry, magnitude });
        }
    }
    let populations = std::array::from_fn(|i| rho.get(i, i).re);
    XState::new(populations, rho.get(0, 3), rho.get(1, 2))
}

/// `ρ = ¼[I + c₀(σ₃⊗I + I⊗σ₃) + Σ_j c_j σ_j⊗σ_j]`
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochCorrelationForm {
    pub c0: f64,
    pub c: [f64; 3],
}

fn pauli_products() -> [CMat4; 3] {
    [
        kron(&pauli::sigma_x(), &pauli::sigma_x()),
        kron(&pauli::sigma_y(), &pauli::sigma_y()),
        kron(&pauli::sigma_z(), &pauli::sigma_z()),
    ]
}

pub fn from_bloch(form: &BlochCorrelationForm) -> Result<DensityMatrix> {
    let z = pauli::sigma_z();
    let id = CMat2::identity();
    let local = kron(&z, &id) + kron(&id, &z);
    let mut m = CMat4::identity() + local.scale_re(form.c0);
    for (cj, sj) in form.c.iter().zip(pauli_products()) {
        m = m + sj.scale_re(*cj);
    }
    DensityMatrix::new(m.scale_re(0.25)).map_err(|e| Error::NotRepresentable(e.to_string()))
}

pub fn to_bloch(rho: &DensityMatrix) -> Result<BlochCorrelationForm> {
    let z_a = kron(&pauli::sigma_z(), &CMat2::identity());
    let c0 = (*rho.mat() * z_a).trace().re;
    let c = pauli_products().map(|s| (*rho.mat() * s).trace().re);
    let form = BlochCorrelationForm { c0, c };
    let rebuilt = from_bloch(&form)?;
    let diff = rebuilt.mat().max_abs_diff(rho.mat());
    if diff > BLOCH_TOL {
        return Err(Error::NotRepresentable(format!(
            "projection differs from the state by {diff:e}"
        )));
    }
    Ok(form)
}

/// Reduced state of the subsystem `keep`, tracing out the other qubit.
pub fn partial_trace(rho: &DensityMatrix, keep: Subsystem) -> CMat2 {
    partial_trace_mat(rho.mat(), keep)
}

pub(crate) fn partial_trace_mat(m: &CMat4, keep: Subsystem) -> CMat2 {
    let mut out = CMat2::zeros();
    for i in 0..2 {
        for j in 0..2 {
            out.0[i][j] = match keep {
                Subsystem::A => m.0[2 * i][2 * j] + m.0[2 * i + 1][2 * j + 1],
                Subsystem::B => m.0[i][j] + m.0[2 + i][2 + j],
            };
        }
    }
    out
}
