use serde::{Deserialize, Serialize};

use super::gate::Gate;
use crate::error::{QwalkError, Result};

/// Version tag written into the JSON form of a circuit.
pub const CIRCUIT_FORMAT_VERSION: u32 = 1;

/// An ordered gate sequence over a fixed register.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Circuit {
    num_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_qubits: usize) -> Result<Self> {
        if num_qubits < 1 {
            return Err(QwalkError::EmptyRegister);
        }
        Ok(Self { num_qubits, gates: Vec::new() })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.num_qubits)?;
        self.gates.push(gate);
        Ok(())
    }

    /// Consuming form of [`Circuit::push`].
    pub fn append(mut self, gate: Gate) -> Result<Self> {
        self.push(gate)?;
        Ok(self)
    }

    pub fn extend<I: IntoIterator<Item = Gate>>(&mut self, gates: I) -> Result<()> {
        for g in gates {
            self.push(g)?;
        }
        Ok(())
    }

    /// Number of at-most-two-qubit gates, with multi-controlled X blocks
    /// counted through the cost model.
    pub fn size(&self) -> usize {
        self.gates.iter().map(Gate::size_cost).sum()
    }

    /// ASAP layering depth: each gate lands one layer above the deepest of
    /// its qubits and occupies `depth_cost` layers on all of them.
    pub fn depth(&self) -> usize {
        let mut frontier = vec![0usize; self.num_qubits];
        let mut depth = 0;
        for gate in &self.gates {
            let qubits = gate.qubits();
            let start = qubits.iter().map(|&q| frontier[q]).max().unwrap_or(0);
            let end = start + gate.depth_cost();
            for q in qubits {
                frontier[q] = end;
            }
            depth = depth.max(end);
        }
        depth
    }

    pub fn inverse(&self) -> Circuit {
        Circuit { num_qubits: self.num_qubits, gates: self.gates.iter().rev().map(Gate::adjoint).collect() }
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Circuit) -> Result<Circuit> {
        if self.num_qubits != other.num_qubits {
            return Err(QwalkError::WidthMismatch { left: self.num_qubits, right: other.num_qubits });
        }
        let mut gates = self.gates.clone();
        gates.extend(other.gates.iter().cloned());
        Ok(Circuit { num_qubits: self.num_qubits, gates })
    }

    /// Same gates on a wider register; qubit indices are unchanged.
    pub fn widened(&self, num_qubits: usize) -> Result<Circuit> {
        if num_qubits < self.num_qubits {
            return Err(QwalkError::WidthMismatch { left: self.num_qubits, right: num_qubits });
        }
        Ok(Circuit { num_qubits, gates: self.gates.clone() })
    }

    /// The circuit repeated `times` times back to back.
    pub fn repeated(&self, times: usize) -> Circuit {
        let mut gates = Vec::with_capacity(self.gates.len() * times);
        for _ in 0..times {
            gates.extend(self.gates.iter().cloned());
        }
        Circuit { num_qubits: self.num_qubits, gates }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&CircuitFile {
            version: CIRCUIT_FORMAT_VERSION,
            num_qubits: self.num_qubits,
            gates: self.gates.clone(),
        })?)
    }

    /// Parses and re-validates the JSON form written by [`Circuit::to_json`].
    pub fn from_json(text: &str) -> Result<Circuit> {
        let file: CircuitFile = serde_json::from_str(text)?;
        if file.version != CIRCUIT_FORMAT_VERSION {
            return Err(QwalkError::UnsupportedVersion(file.version));
        }
        let mut circuit = Circuit::new(file.num_qubits)?;
        circuit.extend(file.gates)?;
        Ok(circuit)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CircuitFile {
    version: u32,
    num_qubits: usize,
    gates: Vec<Gate>,
}
