//! Gate vocabulary, circuit container, cost accounting and OpenQASM emission.

mod circuit;
mod cost;
mod gate;
mod qasm;

pub use circuit::{Circuit, CIRCUIT_FORMAT_VERSION};
pub use cost::{mcx_cost, McxCost, McxMethod};
pub use gate::{rz_matrix, scatter_matrix, Gate, PhaseAngle, Polarity};
pub use qasm::to_qasm;
