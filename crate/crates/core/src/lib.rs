//! Exact numerics for pure Betti diagrams.
//!
//! * [`diagram`]: degree sequences, Herzog-Kuhl numbers `pi_i(D)`, truncation `D^i`.
//! * [`decompose`]: greedy Boij-Soderberg decomposition.
//! * [`bounds`]: the functions `F`, `G`, `G1` and their monotonicity lemmas.
//! * [`verify`]: exhaustive checks of the total and per-index lower bounds.
//! * [`polycert`]: polynomial certificates for the total bound when `n <= 5`.
//!
//! All arithmetic is over arbitrary precision rationals ([`Rat`]).

pub mod bounds;
pub mod decompose;
pub mod diagram;
pub mod error;
pub mod formats;
pub mod poly;
pub mod polycert;
pub mod rat;
pub mod verify;

pub use decompose::{greedy_decompose, recompose, Decomposition, Summand};
pub use diagram::{pi, pi_all, sum_pi, truncate, BettiDiagram, DegreeSequence, ShapeParams};
pub use error::{Error, Result};
pub use poly::MPoly;
pub use rat::{rat, Rat};
