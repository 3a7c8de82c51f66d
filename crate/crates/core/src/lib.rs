//! Exact symbolic calculator for ordinal and tree combinatorics around the
//! Szlenk index.
//!
//! * [`ordinal`]: Cantor-normal-form arithmetic below ε₀ with the gamma
//!   operator and fundamental sequences.
//! * [`tree`]: finite trees with their derivations and embeddings, plus the
//!   Cantor-Bendixson calculus of ordinal intervals and of the `Bₙ` families.
//! * [`gamma`]: the `Γ_ξ` B-trees with their level decomposition and exact
//!   probability weights `ℙ_ξ`.
//! * [`szlenk`]: closed-form index rules and the two derivation-bound
//!   pipelines with audit trails.
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod error;
pub mod gamma;
pub mod ordinal;
pub mod rational;
pub mod record;
pub mod szlenk;
pub mod tree;

pub use error::{Error, Result};
pub use ordinal::{Cofinality, ExtOrdinal, Ordinal, Style};
pub use rational::Rational;
