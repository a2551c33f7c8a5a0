//! Single-qubit Kraus channels and their independent action on two qubits.
//!
//! Each qubit couples to its own bath, so the two-qubit map is
//! `ρ ↦ Σ_{μ,ν} (E_μ⊗E_ν) ρ (E_μ⊗E_ν)†`. Channels are parameterized by the
//! decoherence degree γ ∈ [0, 1]; physical time only enters via
//! [`DecayClock::gamma`].
//!
//! Two operators are not taken verbatim from the usual printed forms: the
//! second dephasing operator is `diag(0, √γ)` and the third GAD operator is
//! `√(1−q)·diag(√(1−γ), 1)`. Those are the only choices consistent with
//! `Σ E†E = I` and with the closed-form matrix-element evolutions, and every
//! constructor checks completeness before returning.

use crate::error::{check_unit, Error, Result};
use crate::qmat::{kron, pauli, CMat2, CMat4, DensityMatrix};

/// Entrywise tolerance on `Σ E†E = I`.
pub const COMPLETENESS_TOL: f64 = 1e-12;

/// Decay rate Γ and elapsed time t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayClock {
    pub rate: f64,
    pub time: f64,
}

impl DecayClock {
    pub fn new(rate: f64, time: f64) -> Result<Self> {
        if !(rate >= 0.0) {
            return Err(Error::NegativeInput { name: "rate", value: rate });
        }
        if !(time >= 0.0) {
            return Err(Error::NegativeInput { name: "time", value: time });
        }
        Ok(DecayClock { rate, time })
    }

    /// `γ = 1 − exp(−Γt)`
    pub fn gamma(&self) -> f64 {
        -(-self.rate * self.time).exp_m1()
    }
}

/// `γ = 1 − exp(−Γt)` for a decay rate and elapsed time.
pub fn gamma_of(rate: f64, time: f64) -> Result<f64> {
    DecayClock::new(rate, time).map(|clock| clock.gamma())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChannelKind {
    Identity,
    Dephasing { gamma: f64 },
    GeneralizedAmplitudeDamping { gamma: f64, q: f64 },
    Depolarizing { gamma: f64 },
    Composed,
}

/// An ordered Kraus set for one qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    kind: ChannelKind,
    operators: Vec<CMat2>,
}

impl KrausChannel {
    /// Build a channel from raw operators, checking completeness.
    pub fn from_operators(kind: ChannelKind, operators: Vec<CMat2>) -> Result<Self> {
        let channel = KrausChannel { kind, operators };
        let defect = channel.completeness_defect();
        if !(defect <= COMPLETENESS_TOL) {
            return Err(Error::InvalidChannel(format!(
                "{kind:?}: Σ E†E deviates from I by {defect:e}"
            )));
        }
        Ok(channel)
    }

    pub fn identity() -> Self {
        KrausChannel { kind: ChannelKind::Identity, operators: vec![CMat2::identity()] }
    }

    pub fn kind(&self) -> ChannelKind {
        self.kind
    }

    pub fn operators(&self) -> &[CMat2] {
        &self.operators
    }

    /// `max |(Σ E†E − I)_ij|`
    pub fn completeness_defect(&self) -> f64 {
        let sum: CMat2 = self.operators.iter().map(|e| e.adjoint() * *e).sum();
        sum.max_abs_diff(&CMat2::identity())
    }

    /// Apply to a single-qubit density matrix.
    pub fn apply_single(&self, rho: &CMat2) -> CMat2 {
        self.operators.iter().map(|e| e.sandwich(rho)).sum()
    }
}

/// Phase damping: `{diag(1, √(1−γ)), diag(0, √γ)}`.
pub fn dephasing(gamma: f64) -> Result<KrausChannel> {
    check_unit("gamma", gamma)?;
    KrausChannel::from_operators(
        ChannelKind::Dephasing { gamma },
        vec![
            CMat2::diag([1.0, (1.0 - gamma).sqrt()]),
            CMat2::diag([0.0, gamma.sqrt()]),
        ],
    )
}

/// Generalized amplitude damping. `q` is the asymptotic ground-state
/// population; `q = 1` is zero-temperature amplitude damping.
pub fn gad(gamma: f64, q: f64) -> Result<KrausChannel> {
    check_unit("gamma", gamma)?;
    check_unit("q", q)?;
    let keep = (1.0 - gamma).sqrt();
    KrausChannel::from_operators(
        ChannelKind::GeneralizedAmplitudeDamping { gamma, q },
        vec![
            CMat2::diag([1.0, keep]).scale_re(q.sqrt()),
            pauli::lowering().scale_re((q * gamma).sqrt()),
            CMat2::diag([keep, 1.0]).scale_re((1.0 - q).sqrt()),
            pauli::raising().scale_re(((1.0 - q) * gamma).sqrt()),
        ],
    )
}

/// Depolarizing: `{√(1−3γ/4)·I, √(γ/4)·σ₁, √(γ/4)·σ₂, √(γ/4)·σ₃}`.
pub fn depolarizing(gamma: f64) -> Result<KrausChannel> {
    check_unit("gamma", gamma)?;
    let p = (gamma / 4.0).sqrt();
    KrausChannel::from_operators(
        ChannelKind::Depolarizing { gamma },
        vec![
            CMat2::identity().scale_re((1.0 - 0.75 * gamma).sqrt()),
            pauli::sigma_x().scale_re(p),
            pauli::sigma_y().scale_re(p),
            pauli::sigma_z().scale_re(p),
        ],
    )
}

/// Sequential composition: `first` acts, then `second`. The operator list is
/// `{F_ν·E_μ}` ordered with `μ` outer.
pub fn compose(first: &KrausChannel, second: &KrausChannel) -> Result<KrausChannel> {
    for ch in [first, second] {
        let defect = ch.completeness_defect();
        if !(defect <= COMPLETENESS_TOL) {
            return Err(Error::InvalidChannel(format!("composition input defect {defect:e}")));
        }
    }
    let operators = first
        .operators
        .iter()
        .flat_map(|e| second.operators.iter().map(move |f| *f * *e))
        .collect();
    KrausChannel::from_operators(ChannelKind::Composed, operators)
}

/// Evolve a two-qubit state with `channel_a` on qubit A and `channel_b` on
/// qubit B.
pub fn apply_two_qubit(
    rho: &DensityMatrix,
    channel_a: &KrausChannel,
    channel_b: &KrausChannel,
) -> Result<DensityMatrix> {
    for ch in [channel_a, channel_b] {
        let defect = ch.completeness_defect();
        if !(defect <= COMPLETENESS_TOL) {
            return Err(Error::InvalidChannel(format!("completeness defect {defect:e}")));
        }
    }
    let mut out = CMat4::zeros();
    for ea in channel_a.operators() {
        for eb in channel_b.operators() {
            out = out + kron(ea, eb).sandwich(rho.mat());
        }
    }
    DensityMatrix::new(out)
}
