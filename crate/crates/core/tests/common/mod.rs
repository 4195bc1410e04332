//! Test-side oracles, written without the library's fast paths.
#![allow(dead_code)]

use num_complex::Complex64 as C;
use qinw::inw::{inw_expand, InwParams, InwSeed};
use qinw::qsim::{bp_run, trace_distance, BranchingProgram, DensityMatrix, GateOp};
use qinw::BitString;

// ---------------------------------------------------------------------------
// Polynomials over F_2 as coefficient vectors, index = degree.

pub type Poly = Vec<bool>;

pub fn poly_from_u64(v: u64, len: usize) -> Poly {
    (0..len).map(|j| (v >> j) & 1 == 1).collect()
}

pub fn poly_to_u64(p: &[bool]) -> u64 {
    p.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| 1u64 << j).sum()
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&false) {
        p.pop();
    }
    p
}

/// x^m + x^{m/2} + 1.
pub fn tower_modulus(m: usize) -> Poly {
    let mut f = vec![false; m + 1];
    f[0] = true;
    f[m / 2] = true;
    f[m] = true;
    f
}

pub fn poly_mul(a: &[bool], b: &[bool]) -> Poly {
    let mut out = vec![false; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            if ai && bj {
                out[i + j] ^= true;
            }
        }
    }
    trim(out)
}

/// Remainder of long division by `f`.
pub fn poly_rem(a: &[bool], f: &[bool]) -> Poly {
    let f = trim(f.to_vec());
    let df = f.len() - 1;
    let mut r = trim(a.to_vec());
    while r.len() > df {
        let shift = r.len() - 1 - df;
        for (k, &c) in f.iter().enumerate() {
            if c {
                r[shift + k] ^= true;
            }
        }
        r = trim(r);
    }
    r
}

/// Schoolbook product in F_2[x] / (x^m + x^{m/2} + 1).
pub fn field_mul(m: usize, a: u64, b: u64) -> u64 {
    let p = poly_mul(&poly_from_u64(a, m), &poly_from_u64(b, m));
    poly_to_u64(&poly_rem(&p, &tower_modulus(m)))
}

pub fn field_pow(m: usize, a: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, _| field_mul(m, acc, a))
}

/// No factor of degree 1..=deg/2 divides `f`.
pub fn is_irreducible(f: &[bool]) -> bool {
    let deg = trim(f.to_vec()).len() - 1;
    (2u64..1u64 << (deg / 2 + 1)).all(|g| !poly_rem(f, &poly_from_u64(g, 64)).is_empty())
}

// ---------------------------------------------------------------------------
// The small-bias space, coordinate by coordinate.

pub fn parity_and(a: u64, b: u64) -> bool {
    (a & b).count_ones() % 2 == 1
}

/// ⟨α^j, β⟩ for j < n, with each power recomputed from scratch.
pub fn biased_row(m: usize, alpha: u64, beta: u64, n: usize) -> Vec<bool> {
    (0..n).map(|j| parity_and(field_pow(m, alpha, j as u64), beta)).collect()
}

/// Ext(x, seed) with α = seed[0..m), β = seed[m..2m), both little-endian.
pub fn ext(m: usize, x: &[bool], seed: &[bool]) -> Vec<bool> {
    let alpha = poly_to_u64(&seed[..m]);
    let beta = poly_to_u64(&seed[m..2 * m]);
    let row = biased_row(m, alpha, beta, x.len());
    x.iter().zip(row).map(|(a, b)| a ^ b).collect()
}

/// G_2(x, s1, s2) at block length n, written out without recursion:
/// G_2 = G_1(x, s1) ∘ G_1(Ext_{s2}(x, s1)) and G_1(y, s) = y_1 ∘ Ext_s(y)_1.
pub fn inw_level2(n: usize, seed: &[bool]) -> Vec<bool> {
    let m = n / 2;
    let (x, s1, s2) = (&seed[..n], &seed[n..2 * n], &seed[2 * n..3 * n]);
    let g1 = |y: &[bool], s: &[bool]| -> [bool; 2] { [y[0], ext(m, y, s)[0]] };
    let xs1: Vec<bool> = x.iter().chain(s1).copied().collect();
    let right = ext(m, &xs1, s2);
    let [a, b] = g1(x, s1);
    let [c, d] = g1(&right[..n], &right[n..]);
    vec![a, b, c, d]
}

// ---------------------------------------------------------------------------
// Dense matrices for channel oracles. Qubit 1 is the most significant bit.

pub type Mat = Vec<Vec<C>>;

pub fn c(re: f64) -> C {
    C::new(re, 0.0)
}

pub fn identity(d: usize) -> Mat {
    (0..d).map(|i| (0..d).map(|j| c(if i == j { 1.0 } else { 0.0 })).collect()).collect()
}

pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let p = b[0].len();
    (0..n).map(|i| (0..p).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

pub fn dagger(a: &Mat) -> Mat {
    (0..a[0].len()).map(|i| (0..a.len()).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    (0..n * m).map(|i| (0..n * m).map(|j| a[i / m][j / m] * b[i % m][j % m]).collect()).collect()
}

/// `u` (2×2) on qubit `q` of `s`.
pub fn embed1(u: &Mat, q: usize, s: usize) -> Mat {
    (1..=s).fold(vec![vec![c(1.0)]], |acc, k| kron(&acc, &if k == q { u.clone() } else { identity(2) }))
}

pub fn hadamard() -> Mat {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    vec![vec![c(h), c(h)], vec![c(h), c(-h)]]
}

/// Permutation matrix of a Toffoli, built from basis-state bit arithmetic.
pub fn toffoli(a: usize, b: usize, t: usize, s: usize) -> Mat {
    let d = 1 << s;
    let bit = |i: usize, q: usize| (i >> (s - q)) & 1;
    let image = |i: usize| if bit(i, a) == 1 && bit(i, b) == 1 { i ^ (1 << (s - t)) } else { i };
    (0..d).map(|i| (0..d).map(|j| c(if image(j) == i { 1.0 } else { 0.0 })).collect()).collect()
}

fn proj(bit: usize) -> Mat {
    let mut p = vec![vec![c(0.0); 2]; 2];
    p[bit][bit] = c(1.0);
    p
}

fn lower(from: usize) -> Mat {
    let mut p = vec![vec![c(0.0); 2]; 2];
    p[0][from] = c(1.0);
    p
}

pub fn conj(u: &Mat, rho: &Mat) -> Mat {
    matmul(&matmul(u, rho), &dagger(u))
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

/// The channel of `op` in Kraus form.
pub fn apply_oracle(rho: &Mat, op: &GateOp, s: usize) -> Mat {
    match *op {
        GateOp::Hadamard(q) => conj(&embed1(&hadamard(), q, s), rho),
        GateOp::Toffoli(a, b, t) => conj(&toffoli(a, b, t, s), rho),
        GateOp::Reflect1(q) => {
            let r = vec![vec![c(-1.0), c(0.0)], vec![c(0.0), c(1.0)]];
            conj(&embed1(&r, q, s), rho)
        }
        GateOp::Measure(q) => add(&conj(&embed1(&proj(0), q, s), rho), &conj(&embed1(&proj(1), q, s), rho)),
        GateOp::Reset(q) => add(&conj(&embed1(&lower(0), q, s), rho), &conj(&embed1(&lower(1), q, s), rho)),
    }
}

pub fn to_mat(rho: &DensityMatrix) -> Mat {
    (0..rho.dim()).map(|i| (0..rho.dim()).map(|j| rho.get(i, j)).collect()).collect()
}

pub fn from_mat(m: &Mat) -> DensityMatrix {
    let s = m.len().trailing_zeros() as usize;
    DensityMatrix::from_entries(s, m.iter().flatten().copied().collect()).unwrap()
}

pub fn max_abs_diff(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    a.entries().iter().zip(b.entries()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Eigenvalues of a 2×2 Hermitian matrix, closed form.
pub fn eig2(m: &Mat) -> (f64, f64) {
    let (a, d) = (m[0][0].re, m[1][1].re);
    let r = (((a - d) / 2.0).powi(2) + m[0][1].norm_sqr()).sqrt();
    ((a + d) / 2.0 - r, (a + d) / 2.0 + r)
}

pub fn approx(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

// ---------------------------------------------------------------------------
// Locked fooling values.

#[derive(serde::Serialize, serde::Deserialize, Debug, Clone, PartialEq)]
pub struct FoolFixture {
    pub gen_seed: u64,
    pub program_hash: String,
    pub program: BranchingProgram,
    pub d1: f64,
    pub trace_norm: f64,
    /// d₁ at levels 0..=M on the first 2^i coins.
    pub level_d1: Vec<f64>,
}

#[derive(serde::Serialize, serde::Deserialize, Debug, Clone, PartialEq)]
pub struct Fixtures {
    pub qubits: usize,
    pub coins: usize,
    pub block_len: usize,
    pub depth: usize,
    pub space_bound: usize,
    pub programs: Vec<FoolFixture>,
    pub parity_d1: f64,
}

/// Uniform and generator averages recomputed from plain `bp_run` calls.
pub fn brute_force_d1(bp: &BranchingProgram, p: &InwParams) -> f64 {
    let rho0 = DensityMatrix::new(bp.qubits).unwrap();
    let t = bp.coins();
    let mut uniform = DensityMatrix::zeros(bp.qubits).unwrap();
    for v in 0..1u64 << t {
        let r = BitString::from_bools(&(0..t).map(|k| (v >> k) & 1 == 1).collect::<Vec<_>>());
        uniform = uniform.add(&bp_run(bp, &rho0, &r).unwrap()).unwrap();
    }
    let mut prg = DensityMatrix::zeros(bp.qubits).unwrap();
    for v in 0..1u64 << p.seed_bits() {
        let r = inw_expand(p, &InwSeed::from_u64(p, v).unwrap()).unwrap().slice(0, t);
        prg = prg.add(&bp_run(bp, &rho0, &r).unwrap()).unwrap();
    }
    let u = uniform.scale(1.0 / (1u64 << t) as f64);
    let g = prg.scale(1.0 / (1u64 << p.seed_bits()) as f64);
    trace_distance(&u, &g).unwrap()
}

pub const FIXTURE_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/fool_fixtures.json");

pub fn load_fixtures() -> Fixtures {
    let text = std::fs::read_to_string(FIXTURE_PATH).expect("fixture file present");
    serde_json::from_str(&text).expect("fixture file parses")
}
