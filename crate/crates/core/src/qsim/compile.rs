//! Replacing intermediate measurements by coins.
//!
//! Measuring qubit q is the channel ½(ρ + U₁ρU₁†) with U₁ = Reflect1(q), so a
//! measurement becomes a coin step that applies U₁ when the coin reads 1.
//! Every other operation becomes a step with identical branches, so the
//! compiled program reads exactly one coin per source operation.

use serde::{Deserialize, Serialize};

use super::program::{BranchingProgram, GateOp, QuantumProgram, Step};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompileMode {
    /// The coin-1 branch is the primitive Reflect1.
    Semantic,
    /// The coin-1 branch is a Toffoli between a coin ancilla, a |1⟩ ancilla
    /// and the measured qubit, sandwiched by Hadamards on the latter. Adds two
    /// qubits after the program's own.
    GateLevel,
}

/// X built from the gate basis: H · Reflect1 · H = −X, equal to X as a channel.
pub fn flip(q: usize) -> [GateOp; 3] {
    [GateOp::Hadamard(q), GateOp::Reflect1(q), GateOp::Hadamard(q)]
}

/// Controlled phase flip of `target` by `control`, using a line held at |1⟩.
pub fn controlled_reflection(control: usize, one: usize, target: usize) -> [GateOp; 3] {
    [GateOp::Hadamard(target), GateOp::Toffoli(control, one, target), GateOp::Hadamard(target)]
}

pub fn compile_measurements(qp: &QuantumProgram, mode: CompileMode) -> Result<BranchingProgram> {
    qp.validate()?;
    if let Some(op) = qp.ops.iter().find(|op| matches!(op, GateOp::Reflect1(_))) {
        return Err(Error::Unsupported(format!("{op:?} is outside the source gate set {{H, TOF, M, R}}")));
    }
    match mode {
        CompileMode::Semantic => {
            let steps = qp
                .ops
                .iter()
                .map(|op| match *op {
                    GateOp::Measure(q) => Step::new(vec![], vec![GateOp::Reflect1(q)]),
                    other => Step::fixed(vec![other]),
                })
                .collect();
            BranchingProgram::new(qp.qubits, steps)
        }
        CompileMode::GateLevel => {
            let one = qp.qubits + 1;
            let coin = qp.qubits + 2;
            let steps = qp
                .ops
                .iter()
                .enumerate()
                .map(|(k, op)| {
                    // Prepare the |1⟩ line once, inside the first step.
                    let mut prologue = Vec::new();
                    if k == 0 {
                        prologue.push(GateOp::Reset(one));
                        prologue.extend(flip(one));
                    }
                    match *op {
                        GateOp::Measure(q) => {
                            let mut c1 = prologue.clone();
                            c1.extend(flip(coin));
                            c1.extend(controlled_reflection(coin, one, q));
                            c1.push(GateOp::Reset(coin));
                            Step::new(prologue, c1)
                        }
                        other => {
                            prologue.push(other);
                            Step::fixed(prologue)
                        }
                    }
                })
                .collect();
            BranchingProgram::new(qp.qubits + 2, steps)
        }
    }
}
