//! Exact density-matrix simulation of quantum programs and quantum branching
//! programs with a read-once coin tape.
//!
//! States are dense `2^s × 2^s` complex matrices, `s ≤ 12`. Every operation
//! returns a fresh state or mutates one the caller owns.

mod compile;
mod program;
pub mod random;
mod run;
mod state;

pub use compile::{compile_measurements, controlled_reflection, flip, CompileMode};
pub use program::{BranchingProgram, GateOp, ProgramFile, QuantumProgram, Step};
pub use run::{
    bp_run, bp_run_avg, prg_histogram, qp_run, weighted_sum, Average, CoinSource, SeedPlan, MAX_ENUMERATED_COINS,
    MAX_ENUMERATED_SEED_BITS,
};
pub use state::{trace_distance, trace_norm, DensityMatrix, StateDefects, C64};

/// Largest supported qubit count (dimension 4096).
pub const MAX_QUBITS: usize = 12;

/// |0^s⟩⟨0^s|.
pub fn dm_new(qubits: usize) -> crate::Result<DensityMatrix> {
    DensityMatrix::new(qubits)
}

pub fn apply_gate(rho: &DensityMatrix, op: &GateOp) -> crate::Result<DensityMatrix> {
    rho.apply(op)
}

/// (P[qubit 1 reads 0], P[qubit 1 reads 1]).
pub fn output_distribution(rho: &DensityMatrix) -> (f64, f64) {
    rho.output_distribution()
}
