//! Random states and programs for tests and experiments.

use rand::Rng;
use rand_distr::StandardNormal;

use super::program::{GateOp, QuantumProgram};
use super::state::{DensityMatrix, C64};
use crate::error::Result;

/// A full-rank random state: GG† / Tr(GG†) with complex Gaussian G.
pub fn random_density_matrix<R: Rng + ?Sized>(qubits: usize, rng: &mut R) -> Result<DensityMatrix> {
    let dim = 1usize << qubits;
    let g: Vec<C64> = (0..dim * dim)
        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let mut data = vec![C64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            data[i * dim + j] = (0..dim).map(|k| g[i * dim + k] * g[j * dim + k].conj()).sum();
        }
    }
    let tr: f64 = (0..dim).map(|i| data[i * dim + i].re).sum();
    for v in &mut data {
        *v /= tr;
    }
    DensityMatrix::from_entries(qubits, data)
}

/// A random gate on `qubits` qubits from {H, TOF, RFL, M, R}, restricted to
/// the kinds listed in `kinds`. Toffoli is skipped below three qubits.
pub fn random_gate<R: Rng + ?Sized>(qubits: usize, kinds: &[GateKind], rng: &mut R) -> GateOp {
    let usable: Vec<GateKind> = kinds.iter().copied().filter(|k| *k != GateKind::Toffoli || qubits >= 3).collect();
    let q = rng.random_range(1..=qubits);
    match usable[rng.random_range(0..usable.len())] {
        GateKind::Hadamard => GateOp::Hadamard(q),
        GateKind::Reflect1 => GateOp::Reflect1(q),
        GateKind::Measure => GateOp::Measure(q),
        GateKind::Reset => GateOp::Reset(q),
        GateKind::Toffoli => {
            let mut picked = Vec::with_capacity(3);
            while picked.len() < 3 {
                let c = rng.random_range(1..=qubits);
                if !picked.contains(&c) {
                    picked.push(c);
                }
            }
            GateOp::Toffoli(picked[0], picked[1], picked[2])
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateKind {
    Hadamard,
    Toffoli,
    Reflect1,
    Measure,
    Reset,
}

/// A program of `len` operations over {H, TOF, M, R} with at most
/// `max_measurements` measurements.
pub fn random_quantum_program<R: Rng + ?Sized>(
    qubits: usize,
    len: usize,
    max_measurements: usize,
    rng: &mut R,
) -> Result<QuantumProgram> {
    let mut ops = Vec::with_capacity(len);
    let mut measured = 0;
    for _ in 0..len {
        let kinds: &[GateKind] = if measured < max_measurements {
            &[GateKind::Hadamard, GateKind::Toffoli, GateKind::Measure, GateKind::Measure, GateKind::Reset]
        } else {
            &[GateKind::Hadamard, GateKind::Toffoli, GateKind::Reset]
        };
        let op = random_gate(qubits, kinds, rng);
        measured += op.is_measure() as usize;
        ops.push(op);
    }
    QuantumProgram::new(qubits, ops)
}
