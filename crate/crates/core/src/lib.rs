//! Two-qubit decoherence under independent Markovian channels, tracking
//! concurrence and quantum discord along the trajectory.
//!
//! ```
//! use qdiscord::experiments::{evolve, ChannelConfig, NoiseKind, StateFamily};
//! use qdiscord::correlations::discord;
//!
//! let cfg = ChannelConfig::new(NoiseKind::Gad, StateFamily::Phi, 1.0).unwrap();
//! let rho = evolve(&cfg, 0.8, 0.6).unwrap();
//! let report = discord(&rho).unwrap();
//! assert_eq!(report.concurrence, 0.0); // entanglement already dead
//! assert!(report.discord > 1e-3); // discord is not
//! ```

pub mod channels;
pub mod cli;
pub mod correlations;
pub mod error;
pub mod experiments;
pub mod qmat;
mod simplex;
pub mod states;

pub use error::{Error, Result};
