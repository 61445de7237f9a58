//! Closed-form cost model for generalized CNOT (multi-controlled X) blocks.

use serde::{Deserialize, Serialize};

use crate::error::{QwalkError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum McxMethod {
    /// Linear-depth construction without ancillas; defined for three or more qubits.
    NoAncilla,
    /// Toffoli ladder over `n − 3` reusable ancillas; defined for four or more qubits.
    Ancilla,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct McxCost {
    pub size: usize,
    pub depth: usize,
    pub ancillas: usize,
}

/// Size, depth and ancilla count of an `n_total`-qubit generalized CNOT
/// (controls plus target), in at-most-two-qubit gates.
pub fn mcx_cost(n_total: usize, method: McxMethod) -> Result<McxCost> {
    let n = n_total;
    match method {
        McxMethod::NoAncilla => {
            if n < 3 {
                return Err(QwalkError::BelowMinimum { what: "no-ancilla generalized CNOT width", min: 3, got: n });
            }
            Ok(McxCost { size: 2 * n * n - 6 * n + 5, depth: 8 * n - 20, ancillas: 0 })
        }
        McxMethod::Ancilla => {
            if n < 4 {
                return Err(QwalkError::BelowMinimum { what: "ancilla generalized CNOT width", min: 4, got: n });
            }
            // 4(n−3) Toffolis of five two-qubit gates, four layers each
            Ok(McxCost { size: 20 * (n - 3), depth: 16 * (n - 3), ancillas: n - 3 })
        }
    }
}
