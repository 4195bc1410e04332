use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::program::GateOp;
use super::MAX_QUBITS;
use crate::error::{Error, Result};

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);

/// A density matrix on `qubits` qubits, stored row-major.
///
/// Qubit 1 is the most significant bit of the basis-state index, so qubit `q`
/// sits at bit `qubits − q`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    qubits: usize,
    dim: usize,
    data: Vec<C64>,
}

/// How far a matrix is from being a valid state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StateDefects {
    pub hermiticity: f64,
    pub trace: f64,
    /// Most negative eigenvalue, or 0.
    pub negativity: f64,
}

impl StateDefects {
    pub fn within(&self, tol: f64) -> bool {
        self.hermiticity <= tol && self.trace <= tol && self.negativity <= tol
    }
}

impl DensityMatrix {
    /// |0…0⟩⟨0…0| on `qubits` qubits.
    pub fn new(qubits: usize) -> Result<Self> {
        let mut out = Self::zeros(qubits)?;
        out.data[0] = C64::new(1.0, 0.0);
        Ok(out)
    }

    /// The all-zero matrix; not a state, used as an accumulator.
    pub fn zeros(qubits: usize) -> Result<Self> {
        if qubits == 0 || qubits > MAX_QUBITS {
            return Err(Error::QubitCount(qubits));
        }
        let dim = 1usize << qubits;
        Ok(Self { qubits, dim, data: vec![ZERO; dim * dim] })
    }

    /// |b⟩⟨b| for the basis state with index `index`.
    pub fn basis(qubits: usize, index: usize) -> Result<Self> {
        let mut out = Self::zeros(qubits)?;
        if index >= out.dim {
            return Err(Error::IndexOutOfRange { index, len: out.dim });
        }
        out.data[index * out.dim + index] = C64::new(1.0, 0.0);
        Ok(out)
    }

    pub fn maximally_mixed(qubits: usize) -> Result<Self> {
        let mut out = Self::zeros(qubits)?;
        let p = 1.0 / out.dim as f64;
        for i in 0..out.dim {
            out.data[i * out.dim + i] = C64::new(p, 0.0);
        }
        Ok(out)
    }

    /// Wraps row-major entries without validating them as a state.
    pub fn from_entries(qubits: usize, data: Vec<C64>) -> Result<Self> {
        let zero = Self::zeros(qubits)?;
        if data.len() != zero.data.len() {
            return Err(Error::LengthMismatch { expected: zero.data.len(), got: data.len() });
        }
        Ok(Self { data, ..zero })
    }

    #[inline]
    pub fn qubits(&self) -> usize {
        self.qubits
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[row * self.dim + col]
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i).re).collect()
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| i == j || self.get(i, j).norm() <= tol))
    }

    #[inline]
    fn mask(&self, q: usize) -> usize {
        1usize << (self.qubits - q)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    /// Applies one operation, returning the new state.
    pub fn apply(&self, op: &GateOp) -> Result<Self> {
        let mut out = self.clone();
        out.apply_in_place(op)?;
        Ok(out)
    }

    pub fn apply_in_place(&mut self, op: &GateOp) -> Result<()> {
        op.validate(self.qubits)?;
        match *op {
            GateOp::Hadamard(q) => {
                let h = std::f64::consts::FRAC_1_SQRT_2;
                self.conjugate_1q([[h, h], [h, -h]], q);
            }
            GateOp::Toffoli(a, b, t) => self.toffoli(a, b, t),
            GateOp::Reflect1(q) => {
                let m = self.mask(q);
                self.map_entries(|i, j, v| if (i ^ j) & m != 0 { -v } else { v });
            }
            GateOp::Measure(q) => {
                let m = self.mask(q);
                self.map_entries(|i, j, v| if (i ^ j) & m != 0 { ZERO } else { v });
            }
            GateOp::Reset(q) => self.reset(q),
        }
        Ok(())
    }

    fn map_entries(&mut self, f: impl Fn(usize, usize, C64) -> C64) {
        let dim = self.dim;
        for (k, v) in self.data.iter_mut().enumerate() {
            *v = f(k / dim, k % dim, *v);
        }
    }

    /// ρ ↦ UρU† for a real single-qubit U on qubit `q`.
    fn conjugate_1q(&mut self, u: [[f64; 2]; 2], q: usize) {
        let m = self.mask(q);
        let dim = self.dim;
        // Rows: ρ ← Uρ.
        for r0 in (0..dim).filter(|r| r & m == 0) {
            let r1 = r0 | m;
            for c in 0..dim {
                let a = self.data[r0 * dim + c];
                let b = self.data[r1 * dim + c];
                self.data[r0 * dim + c] = a * u[0][0] + b * u[0][1];
                self.data[r1 * dim + c] = a * u[1][0] + b * u[1][1];
            }
        }
        // Columns: ρ ← ρU†, and U is real.
        for row in self.data.chunks_mut(dim) {
            for c0 in (0..dim).filter(|c| c & m == 0) {
                let c1 = c0 | m;
                let a = row[c0];
                let b = row[c1];
                row[c0] = a * u[0][0] + b * u[0][1];
                row[c1] = a * u[1][0] + b * u[1][1];
            }
        }
    }

    fn toffoli(&mut self, a: usize, b: usize, t: usize) {
        let (ma, mb, mt) = (self.mask(a), self.mask(b), self.mask(t));
        let perm = |i: usize| if i & ma != 0 && i & mb != 0 { i ^ mt } else { i };
        let dim = self.dim;
        let old = std::mem::take(&mut self.data);
        self.data = (0..dim * dim).map(|k| old[perm(k / dim) * dim + perm(k % dim)]).collect();
    }

    fn reset(&mut self, q: usize) {
        let m = self.mask(q);
        let dim = self.dim;
        let old = std::mem::take(&mut self.data);
        self.data = (0..dim * dim)
            .map(|k| {
                let (i, j) = (k / dim, k % dim);
                if i & m != 0 || j & m != 0 {
                    ZERO
                } else {
                    old[k] + old[(i | m) * dim + (j | m)]
                }
            })
            .collect();
    }

    /// Probabilities of reading 0 and 1 when measuring qubit 1.
    pub fn output_distribution(&self) -> (f64, f64) {
        let m = self.mask(1);
        let (mut p0, mut p1) = (0.0, 0.0);
        for i in 0..self.dim {
            let p = self.get(i, i).re;
            if i & m == 0 {
                p0 += p;
            } else {
                p1 += p;
            }
        }
        (p0, p1)
    }

    /// Appends `k` qubits in |0⟩ after the last qubit.
    pub fn with_ancillas(&self, k: usize) -> Result<Self> {
        let mut out = Self::zeros(self.qubits + k)?;
        let d = out.dim;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.data[(i << k) * d + (j << k)] = self.get(i, j);
            }
        }
        Ok(out)
    }

    /// Traces out the last `k` qubits.
    pub fn trace_out_last(&self, k: usize) -> Result<Self> {
        if k >= self.qubits {
            return Err(Error::QubitCount(self.qubits.saturating_sub(k)));
        }
        let mut out = Self::zeros(self.qubits - k)?;
        let d = out.dim;
        for i in 0..d {
            for j in 0..d {
                out.data[i * d + j] = (0..1usize << k).map(|a| self.get((i << k) | a, (j << k) | a)).sum();
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(self.with_data(data))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(self.with_data(data))
    }

    pub fn scale(&self, factor: f64) -> Self {
        self.with_data(self.data.iter().map(|v| v * factor).collect())
    }

    pub(crate) fn add_scaled_in_place(&mut self, other: &Self, weight: f64) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * weight;
        }
    }

    pub(crate) fn divide_in_place(&mut self, denom: f64) {
        for v in &mut self.data {
            *v /= denom;
        }
    }

    fn with_data(&self, data: Vec<C64>) -> Self {
        Self { qubits: self.qubits, dim: self.dim, data }
    }

    /// Eigenvalues of the Hermitian part (M + M†)/2.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let d = self.dim;
        let sym = DMatrix::from_fn(d, d, |i, j| (self.get(i, j) + self.get(j, i).conj()) * 0.5);
        sym.symmetric_eigenvalues().iter().copied().collect()
    }

    pub fn defects(&self) -> StateDefects {
        let mut herm = 0.0f64;
        for i in 0..self.dim {
            for j in 0..self.dim {
                herm = herm.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        let trace = (self.trace() - C64::new(1.0, 0.0)).norm();
        let min_eig = self.hermitian_eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        StateDefects { hermiticity: herm, trace, negativity: (-min_eig).max(0.0) }
    }

    /// CSV dump: one `row,col,re,im` line per entry.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("row,col,re,im\n");
        for i in 0..self.dim {
            for j in 0..self.dim {
                let v = self.get(i, j);
                writeln!(out, "{i},{j},{:.17e},{:.17e}", v.re, v.im).expect("writing to a String");
            }
        }
        out
    }
}

/// ‖A‖₁ of a Hermitian difference, via eigenvalues of its symmetrized form.
pub fn trace_norm(delta: &DensityMatrix) -> f64 {
    delta.hermitian_eigenvalues().iter().map(|l| l.abs()).sum()
}

/// d₁(ρ, σ) = ‖ρ − σ‖₁ / 2.
pub fn trace_distance(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    Ok(trace_norm(&rho.sub(sigma)?) / 2.0)
}
