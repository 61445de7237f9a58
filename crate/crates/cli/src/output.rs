//! Text and CSV renderings.
//!
//! The cost table has one row per position-qubit count `n` and these columns:
//!
//! | column | meaning |
//! |---|---|
//! | `n` | position qubits |
//! | `qft_walk_size`, `qft_walk_depth` | one walk step with the QFT shift, as constructed |
//! | `qft_shift_size`, `qft_shift_depth` | the QFT shift alone, as constructed |
//! | `mcx_no_ancilla_shift_size`, `mcx_no_ancilla_shift_depth` | cascade shift, ancilla-free blocks (closed form, `n ≥ 3`) |
//! | `mcx_ancilla_shift_size`, `mcx_ancilla_shift_depth`, `mcx_ancillas` | cascade shift with ancilla blocks (closed form, `n ≥ 4`) |
//!
//! Cells outside a formula's domain are left empty.

use std::fmt::Write;

use qwalk::simulator::Distribution;
use qwalk::walk_builder::{shift_cost_summary, shift_qft, walk_circuit, ShiftImpl, WalkSpec, HADAMARD_LIKE_ALPHA, HADAMARD_LIKE_THETA};

use crate::{CliError, Result};

pub const HISTOGRAM_WIDTH: usize = 40;

/// Outcomes at or below this probability get no row.
pub const HISTOGRAM_THRESHOLD: f64 = 1e-12;

pub const COST_TABLE_COLUMNS: [&str; 10] = [
    "n",
    "qft_walk_size",
    "qft_walk_depth",
    "qft_shift_size",
    "qft_shift_depth",
    "mcx_no_ancilla_shift_size",
    "mcx_no_ancilla_shift_depth",
    "mcx_ancilla_shift_size",
    "mcx_ancilla_shift_depth",
    "mcx_ancillas",
];

/// Largest `n` accepted by [`emit_cost_table`].
pub const MAX_COST_TABLE_N: usize = 64;

/// One `bitstring  prob  bar` row per outcome, sorted by bitstring.
pub fn emit_histogram(dist: &Distribution) -> String {
    let mut out = String::new();
    for (bits, p) in dist.iter_bitstrings().filter(|&(_, p)| p > HISTOGRAM_THRESHOLD) {
        let bar = "#".repeat((p * HISTOGRAM_WIDTH as f64).round() as usize);
        writeln!(out, "{bits}  {p:.6}  {bar}").expect("writing to a String");
    }
    out
}

pub fn emit_cost_table(n_min: usize, n_max: usize) -> Result<String> {
    if n_min < 1 || n_min > n_max || n_max > MAX_COST_TABLE_N {
        return Err(CliError::Config(format!("cost table range must satisfy 1 ≤ n-min ≤ n-max ≤ {MAX_COST_TABLE_N}, got {n_min}..{n_max}")));
    }
    let mut out = COST_TABLE_COLUMNS.join(",");
    out.push('\n');
    for n in n_min..=n_max {
        let spec = WalkSpec { n, steps: 1, alpha: HADAMARD_LIKE_ALPHA, theta: HADAMARD_LIKE_THETA, shift: ShiftImpl::Qft, initial: "0".repeat(n + 1) };
        let walk = walk_circuit(&spec)?;
        let shift = shift_qft(n)?;
        let mut cells = vec![n.to_string(), walk.size().to_string(), walk.depth().to_string(), shift.size().to_string(), shift.depth().to_string()];
        let summary = (n >= 3).then(|| shift_cost_summary(n)).transpose()?;
        let no_anc = summary.map(|s| s.mcx_no_ancilla);
        let anc = summary.and_then(|s| s.mcx_ancilla);
        let cell = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        cells.push(cell(no_anc.map(|c| c.size)));
        cells.push(cell(no_anc.map(|c| c.depth)));
        cells.push(cell(anc.map(|c| c.size)));
        cells.push(cell(anc.map(|c| c.depth)));
        cells.push(cell(anc.map(|c| c.ancillas)));
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Ok(out)
}
