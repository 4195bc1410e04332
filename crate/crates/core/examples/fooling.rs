// How far generator coins move a branching program's output from uniform coins.

use qinw::harness::programs::first_coin_program;
use qinw::harness::{fool_experiment, fool_experiment_with_levels, random_branching_program, FoolMode};
use qinw::inw::{inw_params, inw_params_raw};

pub fn run_example() -> qinw::Result<()> {
    let raw = inw_params_raw(4, 3, 2)?;
    for gen in 0..3 {
        let bp = random_branching_program(2, 8, gen)?;
        let r = fool_experiment_with_levels(&bp, &raw, FoolMode::Exhaustive)?;
        let levels: Vec<String> = r.per_level.iter().flatten().map(|l| format!("{:.4}", l.d1)).collect();
        println!("program {gen}: d1 = {:.4}, by level [{}], {:.1} ms", r.d1, levels.join(", "), r.runtime_ms);
    }
    let r = fool_experiment(&first_coin_program(2, 8)?, &raw, FoolMode::Exhaustive)?;
    println!("first-coin program: d1 = {}", r.d1);

    let p = inw_params(2, 4, 0.5)?;
    let bp = random_branching_program(2, 4, 0)?;
    let r = fool_experiment(&bp, &p, FoolMode::Sampled { n_seeds: 10_000, rng_seed: 1 })?;
    println!(
        "N = {}, M = {}: trace norm {:.4} ± {:.4}, bound {:?}, within bound {:?}",
        p.block_len,
        p.depth,
        r.trace_norm,
        r.sigma_est.unwrap_or(0.0),
        r.bound,
        r.within_bound
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> qinw::Result<()> {
    run_example()
}
