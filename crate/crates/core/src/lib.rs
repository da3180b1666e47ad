//! Nonlocal properties of bipartite unitary gates and the unistochastic
//! channels they induce.
//!
//! The crate covers the operator Schmidt decomposition, the two-qubit
//! canonical form with its perfect-entangler classification, Choi and Kraus
//! machinery for channels obtained by coupling to a maximally mixed
//! environment, and Haar-ensemble statistics of all of these.

pub mod canonical;
pub mod channels;
pub mod cli;
pub mod config;
pub mod ensembles;
pub mod error;
pub mod gates;
pub mod linalg;
pub mod report;
pub mod schmidt;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
