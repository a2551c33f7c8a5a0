#![allow(dead_code)]

use qdiscord::experiments::{ChannelConfig, NoiseKind, StateFamily};
use qdiscord::qmat::{CMat4, DensityMatrix, C64};
use qdiscord::states::XState;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G·G†/tr` for a Gaussian-ish random complex G: full-rank generic state.
pub fn random_density(rng: &mut impl Rng) -> DensityMatrix {
    let mut g = CMat4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            g.0[i][j] = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
    }
    let m = g * g.adjoint();
    let tr = m.trace().re;
    DensityMatrix::new(m.hermitian_part().scale_re(1.0 / tr)).unwrap()
}

pub fn random_x_state(rng: &mut impl Rng) -> XState {
    let raw: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
    let total: f64 = raw.iter().sum();
    let mut p = raw.map(|x| x / total);
    // exact unit sum
    p[3] = 1.0 - p[0] - p[1] - p[2];
    let r14 = rng.gen_range(0.0..1.0) * (p[0] * p[3]).sqrt();
    let r23 = rng.gen_range(0.0..1.0) * (p[1] * p[2]).sqrt();
    let t14 = rng.gen_range(0.0..std::f64::consts::TAU);
    let t23 = rng.gen_range(0.0..std::f64::consts::TAU);
    XState::new(p, C64::from_polar(r14, t14), C64::from_polar(r23, t23)).unwrap()
}

/// The four figure configurations (GAD at both q = 1 and q = 2/3).
pub fn configurations() -> Vec<ChannelConfig> {
    vec![
        ChannelConfig::new(NoiseKind::Dephasing, StateFamily::Werner, 1.0).unwrap(),
        ChannelConfig::new(NoiseKind::Gad, StateFamily::Phi, 1.0).unwrap(),
        ChannelConfig::new(NoiseKind::Gad, StateFamily::Phi, 2.0 / 3.0).unwrap(),
        ChannelConfig::new(NoiseKind::Depolarizing, StateFamily::Phi, 1.0).unwrap(),
        ChannelConfig::new(NoiseKind::DephasingPlusGad, StateFamily::Phi, 1.0).unwrap(),
    ]
}

pub fn grid(n: usize) -> Vec<f64> {
    qdiscord::experiments::linspace(0.0, 1.0, n)
}
