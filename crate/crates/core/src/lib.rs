//! Two-dimensional discrete-time quantum walks and the spatial entanglement
//! induced by measuring their coin.
//!
//! Two walks on the square lattice are provided:
//!
//! * the *alternate* walk, with a single qubit coin. Each time step applies a
//!   Hadamard coin, a coin-conditioned shift along x, another Hadamard, and a
//!   shift along y;
//! * the *Grover* walk, with a four-level coin. Each step applies the Grover
//!   diffusion coin and a diagonal coin-conditioned shift.
//!
//! After evolving, the coin is measured projectively in some basis. Every
//! outcome leaves the walker in a pure state whose x and y coordinates are, in
//! general, entangled. The [`measurement::average_induced_entanglement`] of a
//! basis is the outcome-probability-weighted von Neumann entropy of those
//! states.
//!
//! ```
//! use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
//! use qwalk::{measurement, walk};
//!
//! let state = walk::evolve(walk::WalkKind::Alternate, &walk::alternate_initial(FRAC_PI_2), 1)?;
//! let basis = measurement::qubit_basis(FRAC_PI_4, FRAC_PI_2)?;
//! let e = measurement::average_induced_entanglement(&state, &basis)?;
//! assert!((e - 1.0).abs() < 1e-12);
//! # Ok::<(), qwalk::Error>(())
//! ```
//!
//! A longer guide lives in the `book/` directory of the repository; its code
//! samples are compiled and run as doc-tests of this crate.

pub mod entanglement;
pub mod error;
pub mod explore;
pub mod jacobi;
pub mod measurement;
pub mod state;
pub mod walk;

pub use error::{Error, Result};
pub use state::{CoinVector, Complex, Position, WalkerCoinState};
pub use walk::WalkKind;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/walks.md")]
    mod walks {}
    #[doc = include_str!("../../../book/src/entanglement.md")]
    mod entanglement {}
    #[doc = include_str!("../../../book/src/measurement.md")]
    mod measurement {}
    #[doc = include_str!("../../../book/src/experiments.md")]
    mod experiments {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
