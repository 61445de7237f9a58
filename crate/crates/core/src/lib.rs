//! Circuit construction and dense simulation for one-dimensional
//! discrete-time quantum walks on a cyclic lattice of `2^n` sites.
//!
//! A walk step scatters the velocity qubit and then propagates the position
//! by one site in the direction of the velocity. Propagation is built from a
//! single increment circuit conjugated by velocity-controlled bit flips; the
//! increment can be the QFT-based shift or a cascade of generalized CNOTs.
//! [`circulant`] generalizes the shift to arbitrary unitary circulant
//! (convolution) matrices, and [`oracle`] rebuilds every operator as a dense
//! matrix so the circuits can be checked independently.

pub mod circulant;
pub mod error;
pub mod gate_ir;
pub mod matrix;
pub mod oracle;
pub mod simulator;
pub mod walk_builder;

pub use error::{QwalkError, Result};
