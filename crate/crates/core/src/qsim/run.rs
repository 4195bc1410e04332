use std::collections::BTreeMap;

use super::program::{BranchingProgram, GateOp, QuantumProgram};
use super::state::DensityMatrix;
use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::inw::{InwParams, InwSeed, InwStream};

/// Largest coin count the uniform source will enumerate.
pub const MAX_ENUMERATED_COINS: usize = 24;
/// Largest generator seed the exhaustive plan will enumerate.
pub const MAX_ENUMERATED_SEED_BITS: usize = 24;

/// Runs a straight-line program, measurements included.
pub fn qp_run(qp: &QuantumProgram, rho0: &DensityMatrix) -> Result<DensityMatrix> {
    check_dims(qp.qubits, rho0)?;
    let mut rho = rho0.clone();
    for op in &qp.ops {
        rho.apply_in_place(op)?;
    }
    Ok(rho)
}

/// B(r): applies the branch selected by each coin of `coins` in order.
pub fn bp_run(bp: &BranchingProgram, rho0: &DensityMatrix, coins: &BitString) -> Result<DensityMatrix> {
    check_dims(bp.qubits, rho0)?;
    if coins.len() != bp.coins() {
        return Err(Error::LengthMismatch { expected: bp.coins(), got: coins.len() });
    }
    let mut rho = rho0.clone();
    for (step, coin) in bp.steps.iter().zip(coins.iter()) {
        apply_all(&mut rho, step.branch(coin))?;
    }
    Ok(rho)
}

fn check_dims(qubits: usize, rho: &DensityMatrix) -> Result<()> {
    if rho.qubits() != qubits {
        return Err(Error::DimensionMismatch { left: 1 << qubits, right: rho.dim() });
    }
    Ok(())
}

fn apply_all(rho: &mut DensityMatrix, ops: &[GateOp]) -> Result<()> {
    ops.iter().try_for_each(|op| rho.apply_in_place(op))
}

/// Which generator seeds a PRG coin source runs over.
#[derive(Clone, Debug, PartialEq)]
pub enum SeedPlan {
    /// All 2^{(M+1)N} seeds.
    Exhaustive,
    /// An explicit seed list, e.g. from a sampler.
    Seeds(Vec<InwSeed>),
}

/// A distribution over coin strings.
#[derive(Clone, Debug)]
pub enum CoinSource<'a> {
    /// Uniform over {0,1}^coins, enumerated.
    Uniform,
    /// Strings with integer multiplicities.
    Explicit(Vec<(BitString, u64)>),
    /// Generator output, truncated to the program's coin count.
    Prg { params: &'a InwParams, plan: SeedPlan },
}

/// Unnormalized weighted sums over a coin distribution.
#[derive(Clone, Debug)]
pub struct Average {
    /// Σ_r w(r)·B(r).
    pub sum: DensityMatrix,
    /// Σ_r w(r)·|B(r)_{ij}|², entrywise.
    pub sum_sq: Vec<f64>,
    /// Σ_r w(r).
    pub total: u64,
    /// Number of distinct coin strings with nonzero weight.
    pub distinct: u64,
}

impl Average {
    pub fn mean(&self) -> DensityMatrix {
        let mut out = self.sum.clone();
        out.divide_in_place(self.total as f64);
        out
    }

    /// Largest entrywise standard error of the mean, treating the weights as
    /// sample counts.
    pub fn max_entry_std_error(&self) -> f64 {
        let n = self.total as f64;
        self.sum
            .entries()
            .iter()
            .zip(&self.sum_sq)
            .map(|(s, &sq)| {
                let mean = s / n;
                let var = (sq / n - mean.norm_sqr()).max(0.0);
                (var / n).sqrt()
            })
            .fold(0.0, f64::max)
    }
}

/// E_{r∼source}[B(r)].
pub fn bp_run_avg(bp: &BranchingProgram, rho0: &DensityMatrix, source: &CoinSource<'_>) -> Result<DensityMatrix> {
    Ok(weighted_sum(bp, rho0, source)?.mean())
}

/// The unnormalized sums behind [`bp_run_avg`].
///
/// Coin strings are visited in ascending lexicographic order and shared
/// prefixes are simulated once. Once every remaining step ignores its coin
/// the subtree's weight multiplies a single final state, so distributions
/// that agree on the coin-sensitive prefix give bit-identical sums.
pub fn weighted_sum(bp: &BranchingProgram, rho0: &DensityMatrix, source: &CoinSource<'_>) -> Result<Average> {
    check_dims(bp.qubits, rho0)?;
    let mut acc = Accumulator::new(rho0)?;
    let ctx = Walk { bp, cutoff: bp.insensitive_from() };
    match source {
        CoinSource::Uniform => {
            if bp.coins() > MAX_ENUMERATED_COINS {
                return Err(Error::BudgetExceeded { bits: bp.coins(), max: MAX_ENUMERATED_COINS });
            }
            ctx.uniform(rho0.clone(), 0, &mut acc)?;
        }
        CoinSource::Explicit(list) => {
            let mut hist = BTreeMap::new();
            for (r, w) in list {
                if r.len() != bp.coins() {
                    return Err(Error::LengthMismatch { expected: bp.coins(), got: r.len() });
                }
                *hist.entry(r.clone()).or_insert(0u64) += w;
            }
            ctx.listed(rho0.clone(), 0, &sorted(hist), &mut acc)?;
        }
        CoinSource::Prg { params, plan } => {
            let hist = prg_histogram(params, plan, bp.coins())?;
            ctx.listed(rho0.clone(), 0, &sorted(hist), &mut acc)?;
        }
    }
    if acc.avg.total == 0 {
        return Err(Error::InvalidParameter("coin distribution has zero total weight".into()));
    }
    Ok(acc.avg)
}

fn sorted(hist: BTreeMap<BitString, u64>) -> Vec<(BitString, u64)> {
    hist.into_iter().filter(|(_, w)| *w > 0).collect()
}

/// Multiplicity of each length-`coins` output prefix over the seed plan.
pub fn prg_histogram(params: &InwParams, plan: &SeedPlan, coins: usize) -> Result<BTreeMap<BitString, u64>> {
    if coins > params.output_len {
        return Err(Error::LengthMismatch { expected: params.output_len, got: coins });
    }
    let mut hist = BTreeMap::new();
    let mut add = |seed: &InwSeed| {
        let bits: Vec<bool> = InwStream::new(params, seed).take(coins).collect();
        *hist.entry(BitString::from_bools(&bits)).or_insert(0u64) += 1;
    };
    match plan {
        SeedPlan::Exhaustive => {
            let bits = params.seed_bits();
            if bits > MAX_ENUMERATED_SEED_BITS {
                return Err(Error::BudgetExceeded { bits, max: MAX_ENUMERATED_SEED_BITS });
            }
            for v in 0..1u64 << bits {
                add(&InwSeed::from_u64(params, v)?);
            }
        }
        SeedPlan::Seeds(seeds) => {
            for s in seeds {
                if s.bits().len() != params.seed_bits() {
                    return Err(Error::LengthMismatch { expected: params.seed_bits(), got: s.bits().len() });
                }
                add(s);
            }
        }
    }
    Ok(hist)
}

struct Accumulator {
    avg: Average,
}

impl Accumulator {
    fn new(like: &DensityMatrix) -> Result<Self> {
        Ok(Self {
            avg: Average {
                sum: DensityMatrix::zeros(like.qubits())?,
                sum_sq: vec![0.0; like.dim() * like.dim()],
                total: 0,
                distinct: 0,
            },
        })
    }

    fn add(&mut self, rho: &DensityMatrix, weight: u64, strings: u64) {
        let w = weight as f64;
        self.avg.sum.add_scaled_in_place(rho, w);
        for (s, v) in self.avg.sum_sq.iter_mut().zip(rho.entries()) {
            *s += w * v.norm_sqr();
        }
        self.avg.total += weight;
        self.avg.distinct += strings;
    }
}

struct Walk<'p> {
    bp: &'p BranchingProgram,
    /// Steps at or after this index ignore their coin.
    cutoff: usize,
}

impl Walk<'_> {
    fn finish(&self, mut rho: DensityMatrix, depth: usize) -> Result<DensityMatrix> {
        for step in &self.bp.steps[depth..] {
            apply_all(&mut rho, &step.c0)?;
        }
        Ok(rho)
    }

    fn uniform(&self, rho: DensityMatrix, depth: usize, acc: &mut Accumulator) -> Result<()> {
        if depth >= self.cutoff {
            let remaining = self.bp.coins() - depth;
            let final_state = self.finish(rho, depth)?;
            acc.add(&final_state, 1u64 << remaining, 1u64 << remaining);
            return Ok(());
        }
        let step = &self.bp.steps[depth];
        let mut zero = rho.clone();
        apply_all(&mut zero, &step.c0)?;
        self.uniform(zero, depth + 1, acc)?;
        let mut one = rho;
        apply_all(&mut one, &step.c1)?;
        self.uniform(one, depth + 1, acc)
    }

    /// `items` is sorted and shares its first `depth` bits.
    fn listed(&self, rho: DensityMatrix, depth: usize, items: &[(BitString, u64)], acc: &mut Accumulator) -> Result<()> {
        if items.is_empty() {
            return Ok(());
        }
        if depth >= self.cutoff {
            let weight = items.iter().map(|(_, w)| w).sum();
            let final_state = self.finish(rho, depth)?;
            acc.add(&final_state, weight, items.len() as u64);
            return Ok(());
        }
        let split = items.partition_point(|(r, _)| !r.get(depth));
        let (zeros, ones) = items.split_at(split);
        let step = &self.bp.steps[depth];
        if !zeros.is_empty() {
            let mut next = rho.clone();
            apply_all(&mut next, &step.c0)?;
            self.listed(next, depth + 1, zeros, acc)?;
        }
        if !ones.is_empty() {
            let mut next = rho;
            apply_all(&mut next, &step.c1)?;
            self.listed(next, depth + 1, ones, acc)?;
        }
        Ok(())
    }
}
