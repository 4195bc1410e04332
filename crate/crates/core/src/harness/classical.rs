//! Classical read-once permutation programs as diagonal quantum programs.
//!
//! A width-w program (w = 2^k) keeps its state on k data qubits. One more
//! qubit, prepared in |1⟩ by the first step, turns Toffoli into CNOT.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::fool::{fool_experiment, FoolMode, FoolReport};
use crate::error::{Error, Result};
use crate::inw::InwParams;
use crate::qsim::{flip, BranchingProgram, GateOp, Step, MAX_QUBITS};

/// A reversible gate on data lines `1..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassicalGate {
    Not(usize),
    Cnot(usize, usize),
    Toffoli(usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalProgram {
    pub width: usize,
    /// Per step, the gates run on coin 0 and on coin 1.
    pub steps: Vec<[Vec<ClassicalGate>; 2]>,
}

impl ClassicalProgram {
    /// log₂ of the width.
    pub fn data_bits(&self) -> usize {
        self.width.trailing_zeros() as usize
    }

    fn check_width(width: usize) -> Result<usize> {
        if width == 0 || !width.is_power_of_two() {
            return Err(Error::InvalidParameter(format!("width {width} is not a power of two")));
        }
        let k = width.trailing_zeros() as usize;
        if k + 1 > MAX_QUBITS {
            return Err(Error::InvalidParameter(format!(
                "width {width} needs {} qubits, capacity is {MAX_QUBITS}",
                k + 1
            )));
        }
        Ok(k)
    }

    /// Each branch is 0 to 2 gates drawn uniformly from the kinds the width allows.
    pub fn random(width: usize, coins: usize, gen_seed: u64) -> Result<Self> {
        let k = Self::check_width(width)?;
        let mut rng = ChaCha8Rng::seed_from_u64(gen_seed);
        let branch = |rng: &mut ChaCha8Rng| -> Vec<ClassicalGate> {
            if k == 0 {
                return vec![];
            }
            let kinds = k.min(3);
            (0..rng.random_range(0..=2usize))
                .map(|_| {
                    let a = rng.random_range(1..=k);
                    let b = a % k + 1;
                    let c = b % k + 1;
                    match rng.random_range(0..kinds) {
                        0 => ClassicalGate::Not(a),
                        1 => ClassicalGate::Cnot(a, b),
                        _ => ClassicalGate::Toffoli(a, b, c),
                    }
                })
                .collect()
        };
        let steps = (0..coins).map(|_| [branch(&mut rng), branch(&mut rng)]).collect();
        Ok(Self { width, steps })
    }

    /// Width 2: the state is the parity of the coins read so far.
    pub fn parity(coins: usize) -> Self {
        Self { width: 2, steps: vec![[vec![], vec![ClassicalGate::Not(1)]]; coins] }
    }

    pub fn coins(&self) -> usize {
        self.steps.len()
    }

    /// The program over k + 1 qubits; qubit k + 1 is the |1⟩ line and the
    /// start state |0…0⟩ becomes state 0 of the width.
    pub fn embed(&self) -> Result<BranchingProgram> {
        let k = Self::check_width(self.width)?;
        let one = k + 1;
        let lower = |g: &ClassicalGate| -> Result<Vec<GateOp>> {
            let lines = match *g {
                ClassicalGate::Not(a) => vec![a],
                ClassicalGate::Cnot(a, b) => vec![a, b],
                ClassicalGate::Toffoli(a, b, c) => vec![a, b, c],
            };
            if lines.iter().any(|&q| q == 0 || q > k) {
                return Err(Error::InvalidGate(format!("{g:?} outside data lines 1..={k}")));
            }
            Ok(match *g {
                ClassicalGate::Not(a) => flip(a).to_vec(),
                ClassicalGate::Cnot(c, t) => vec![GateOp::Toffoli(c, one, t)],
                ClassicalGate::Toffoli(a, b, t) => vec![GateOp::Toffoli(a, b, t)],
            })
        };
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(n, branches)| {
                let mut out = [Vec::new(), Vec::new()];
                for (ops, gates) in out.iter_mut().zip(branches) {
                    if n == 0 {
                        ops.extend(flip(one));
                    }
                    for g in gates {
                        ops.extend(lower(g)?);
                    }
                }
                let [c0, c1] = out;
                Ok(Step::new(c0, c1))
            })
            .collect::<Result<Vec<_>>>()?;
        BranchingProgram::new(k + 1, steps)
    }
}

/// Embeds `program` and runs [`fool_experiment`] on it.
pub fn classical_fool_experiment(program: &ClassicalProgram, params: &InwParams, mode: FoolMode) -> Result<FoolReport> {
    fool_experiment(&program.embed()?, params, mode)
}
