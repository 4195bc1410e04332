//! Reproducible random branching programs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::qsim::{BranchingProgram, GateOp, Step};

/// One branch drawn from a fixed menu of short sequences over
/// {H, TOF, RFL, R}. Toffoli entries need three qubits.
fn menu_branch<R: Rng>(qubits: usize, rng: &mut R) -> Vec<GateOp> {
    let entries = if qubits >= 3 { 8 } else { 7 };
    let q = rng.random_range(1..=qubits);
    match rng.random_range(0..entries) {
        0 => vec![],
        1 => vec![GateOp::Hadamard(q)],
        2 => vec![GateOp::Reflect1(q)],
        3 => vec![GateOp::Hadamard(q), GateOp::Reflect1(q)],
        4 => vec![GateOp::Reflect1(q), GateOp::Hadamard(q)],
        5 => vec![GateOp::Reset(q), GateOp::Hadamard(q)],
        6 => {
            let other = if qubits > 1 { (q % qubits) + 1 } else { q };
            vec![GateOp::Hadamard(q), GateOp::Hadamard(other), GateOp::Reflect1(q)]
        }
        _ => {
            let a = q;
            let b = (q % qubits) + 1;
            let t = (b % qubits) + 1;
            vec![GateOp::Toffoli(a, b, t)]
        }
    }
}

/// A branching program with `coins` steps whose branches are drawn
/// independently from the menu, using a ChaCha8 stream keyed by `gen_seed`.
pub fn random_branching_program(qubits: usize, coins: usize, gen_seed: u64) -> Result<BranchingProgram> {
    let mut rng = ChaCha8Rng::seed_from_u64(gen_seed);
    let steps = (0..coins)
        .map(|_| {
            let c0 = menu_branch(qubits, &mut rng);
            let c1 = menu_branch(qubits, &mut rng);
            Step::new(c0, c1)
        })
        .collect();
    BranchingProgram::new(qubits, steps)
}

/// Every step applies the same Hadamard regardless of the coin.
pub fn coin_insensitive_program(qubits: usize, coins: usize) -> Result<BranchingProgram> {
    let steps = (0..coins).map(|k| Step::fixed(vec![GateOp::Hadamard(k % qubits + 1)])).collect();
    BranchingProgram::new(qubits, steps)
}

/// Hadamard on qubit 1, then a coin-controlled Reflect1 on it (a measurement
/// driven by coin 1), then coin-insensitive padding up to `coins` steps.
pub fn first_coin_program(qubits: usize, coins: usize) -> Result<BranchingProgram> {
    let mut steps = vec![Step::new(vec![GateOp::Hadamard(1)], vec![GateOp::Hadamard(1), GateOp::Reflect1(1)])];
    steps.extend((1..coins).map(|k| Step::fixed(vec![GateOp::Hadamard(k % qubits + 1)])));
    BranchingProgram::new(qubits, steps)
}

/// The first `coins` steps of `bp`.
pub fn prefix(bp: &BranchingProgram, coins: usize) -> BranchingProgram {
    BranchingProgram { qubits: bp.qubits, steps: bp.steps[..coins.min(bp.coins())].to_vec() }
}
