use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::sampling::{sample_seeds, SAMPLER_ID};
use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::inw::{inw_eval_recursive, InwParams, InwSeed, Regime};
use crate::qsim::{
    trace_norm, weighted_sum, Average, BranchingProgram, CoinSource, DensityMatrix, SeedPlan, MAX_ENUMERATED_SEED_BITS,
};

/// How the generator side is averaged.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FoolMode {
    /// Every seed, with exact integer weights.
    Exhaustive,
    /// `n_seeds` seeds from [`sample_seeds`].
    Sampled { n_seeds: usize, rng_seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FoolReport {
    pub params: InwParams,
    /// SHA-256 of the program's compact JSON.
    pub program_hash: String,
    pub qubits: usize,
    pub coins: usize,
    pub mode: FoolMode,
    /// Stream identifier, present in sampled mode.
    pub sampler: Option<String>,
    /// ‖E_U[B] − E_G[B]‖₁.
    pub trace_norm: f64,
    /// Half the trace norm.
    pub d1: f64,
    /// eps for theorem-regime parameters.
    pub bound: Option<f64>,
    /// Monte Carlo error on the trace norm: dim · largest entrywise standard error.
    pub sigma_est: Option<f64>,
    /// trace_norm ≤ bound (+ 3σ in sampled mode).
    pub within_bound: Option<bool>,
    pub per_level: Option<Vec<LevelReport>>,
    pub seeds_evaluated: u64,
    pub distinct_prg_strings: u64,
    pub runtime_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevelReport {
    pub level: usize,
    pub coins: usize,
    pub trace_norm: f64,
    pub d1: f64,
    /// 3^i · eps / T² for theorem-regime parameters.
    pub bound: Option<f64>,
    pub sigma_est: Option<f64>,
    pub within_bound: Option<bool>,
}

pub fn program_hash(bp: &BranchingProgram) -> String {
    let text = serde_json::to_string(bp).expect("programs always serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Compares the uniform and generator averages of `bp` started from |0…0⟩.
pub fn fool_experiment(bp: &BranchingProgram, params: &InwParams, mode: FoolMode) -> Result<FoolReport> {
    let start = Instant::now();
    bp.validate()?;
    if bp.coins() > params.output_len {
        return Err(Error::LengthMismatch { expected: params.output_len, got: bp.coins() });
    }
    let rho0 = DensityMatrix::new(bp.qubits)?;
    let uniform = weighted_sum(bp, &rho0, &CoinSource::Uniform)?;
    let plan = seed_plan(params, mode)?;
    let seeds_evaluated = match &plan {
        SeedPlan::Exhaustive => 1u64 << params.seed_bits(),
        SeedPlan::Seeds(s) => s.len() as u64,
    };
    let prg = weighted_sum(bp, &rho0, &CoinSource::Prg { params, plan })?;
    let cmp = compare(&uniform, &prg, mode, params.eps.filter(|_| params.regime == Regime::Guaranteed))?;
    Ok(FoolReport {
        params: params.clone(),
        program_hash: program_hash(bp),
        qubits: bp.qubits,
        coins: bp.coins(),
        mode,
        sampler: sampler_id(mode),
        trace_norm: cmp.trace_norm,
        d1: cmp.trace_norm / 2.0,
        bound: cmp.bound,
        sigma_est: cmp.sigma,
        within_bound: cmp.within,
        per_level: None,
        seeds_evaluated,
        distinct_prg_strings: prg.distinct,
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// [`fool_experiment`] with a [`level_experiment`] for every i with 2^i ≤ coins,
/// run on the first 2^i steps.
pub fn fool_experiment_with_levels(bp: &BranchingProgram, params: &InwParams, mode: FoolMode) -> Result<FoolReport> {
    let mut report = fool_experiment(bp, params, mode)?;
    let levels = (0..=params.depth)
        .take_while(|&i| 1usize << i <= bp.coins())
        .map(|i| level_experiment(&super::programs::prefix(bp, 1 << i), params, i, mode))
        .collect::<Result<Vec<_>>>()?;
    report.per_level = Some(levels);
    Ok(report)
}

/// Compares the uniform average of a 2^i-coin program with its average
/// under the sub-generator G_i, evaluated by recursion on seed blocks 0..=i.
pub fn level_experiment(bp: &BranchingProgram, params: &InwParams, i: usize, mode: FoolMode) -> Result<LevelReport> {
    if i > params.depth {
        return Err(Error::IndexOutOfRange { index: i, len: params.depth + 1 });
    }
    let coins = 1usize << i;
    if bp.coins() != coins {
        return Err(Error::LengthMismatch { expected: coins, got: bp.coins() });
    }
    let rho0 = DensityMatrix::new(bp.qubits)?;
    let uniform = weighted_sum(bp, &rho0, &CoinSource::Uniform)?;
    let seed_bits = (i + 1) * params.block_len;
    let strings: Vec<(BitString, u64)> = match mode {
        FoolMode::Exhaustive => {
            if seed_bits > MAX_ENUMERATED_SEED_BITS {
                return Err(Error::BudgetExceeded { bits: seed_bits, max: MAX_ENUMERATED_SEED_BITS });
            }
            (0..1u64 << seed_bits)
                .map(|v| Ok((inw_eval_recursive(params, &InwSeed::from_u64(params, v)?, i)?, 1)))
                .collect::<Result<_>>()?
        }
        FoolMode::Sampled { n_seeds, rng_seed } => sample_seeds(params, n_seeds, rng_seed)?
            .iter()
            .map(|s| Ok((inw_eval_recursive(params, s, i)?, 1)))
            .collect::<Result<_>>()?,
    };
    let prg = weighted_sum(bp, &rho0, &CoinSource::Explicit(strings))?;
    let t = params.output_len as f64;
    let bound = match (params.regime, params.eps) {
        (Regime::Guaranteed, Some(eps)) => Some(3f64.powi(i as i32) * eps / (t * t)),
        _ => None,
    };
    let cmp = compare(&uniform, &prg, mode, bound)?;
    Ok(LevelReport {
        level: i,
        coins,
        trace_norm: cmp.trace_norm,
        d1: cmp.trace_norm / 2.0,
        bound: cmp.bound,
        sigma_est: cmp.sigma,
        within_bound: cmp.within,
    })
}

struct Comparison {
    trace_norm: f64,
    bound: Option<f64>,
    sigma: Option<f64>,
    within: Option<bool>,
}

fn compare(uniform: &Average, prg: &Average, mode: FoolMode, bound: Option<f64>) -> Result<Comparison> {
    let diff = uniform.mean().sub(&prg.mean())?;
    let tn = trace_norm(&diff);
    let sigma = match mode {
        FoolMode::Exhaustive => None,
        FoolMode::Sampled { .. } => Some(diff.dim() as f64 * prg.max_entry_std_error()),
    };
    let within = bound.map(|b| tn <= b + 3.0 * sigma.unwrap_or(0.0));
    Ok(Comparison { trace_norm: tn, bound, sigma, within })
}

fn seed_plan(params: &InwParams, mode: FoolMode) -> Result<SeedPlan> {
    match mode {
        FoolMode::Exhaustive => {
            if params.seed_bits() > MAX_ENUMERATED_SEED_BITS {
                return Err(Error::BudgetExceeded { bits: params.seed_bits(), max: MAX_ENUMERATED_SEED_BITS });
            }
            Ok(SeedPlan::Exhaustive)
        }
        FoolMode::Sampled { n_seeds, rng_seed } => Ok(SeedPlan::Seeds(sample_seeds(params, n_seeds, rng_seed)?)),
    }
}

fn sampler_id(mode: FoolMode) -> Option<String> {
    match mode {
        FoolMode::Exhaustive => None,
        FoolMode::Sampled { .. } => Some(SAMPLER_ID.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::programs::{coin_insensitive_program, first_coin_program, random_branching_program};
    use crate::inw::inw_params_raw;

    #[test]
    fn trivial_programs_are_fooled_exactly() {
        let p = inw_params_raw(4, 3, 2).unwrap();
        for bp in [coin_insensitive_program(2, 8).unwrap(), first_coin_program(2, 8).unwrap()] {
            let r = fool_experiment(&bp, &p, FoolMode::Exhaustive).unwrap();
            assert_eq!(r.d1, 0.0);
            assert_eq!(r.bound, None);
            assert_eq!(r.seeds_evaluated, 1 << 16);
        }
    }

    #[test]
    fn level_zero_and_one() {
        let p = inw_params_raw(4, 3, 2).unwrap();
        let bp = random_branching_program(2, 1, 5).unwrap();
        assert_eq!(level_experiment(&bp, &p, 0, FoolMode::Exhaustive).unwrap().d1, 0.0);
        let bp = first_coin_program(2, 2).unwrap();
        assert_eq!(level_experiment(&bp, &p, 1, FoolMode::Exhaustive).unwrap().d1, 0.0);
        assert!(level_experiment(&bp, &p, 2, FoolMode::Exhaustive).is_err());
    }

    #[test]
    fn too_many_coins() {
        let p = inw_params_raw(4, 2, 2).unwrap();
        let bp = random_branching_program(2, 5, 0).unwrap();
        assert!(matches!(fool_experiment(&bp, &p, FoolMode::Exhaustive), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn exhaustive_budget() {
        let p = inw_params_raw(12, 2, 2).unwrap();
        let bp = random_branching_program(2, 4, 0).unwrap();
        assert!(matches!(fool_experiment(&bp, &p, FoolMode::Exhaustive), Err(Error::BudgetExceeded { .. })));
        let r = fool_experiment(&bp, &p, FoolMode::Sampled { n_seeds: 200, rng_seed: 1 }).unwrap();
        assert!(r.sigma_est.is_some());
        assert_eq!(r.sampler.as_deref(), Some(SAMPLER_ID));
    }
}
