//! Wall-clock measurements over small parameter ladders.

use std::fmt;
use std::hint::black_box;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::programs::random_branching_program;
use crate::epsbias::{audit_bias, BiasedSpaceParams};
use crate::error::{Error, Result};
use crate::gf2m::FieldParams;
use crate::inw::{inw_expand, inw_params_raw, InwSeed, InwStream};
use crate::qsim::{bp_run_avg, CoinSource, DensityMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchSuite {
    Gf,
    Bias,
    PrgStream,
    PrgRecursive,
    Sim,
}

impl BenchSuite {
    pub const ALL: [BenchSuite; 5] =
        [BenchSuite::Gf, BenchSuite::Bias, BenchSuite::PrgStream, BenchSuite::PrgRecursive, BenchSuite::Sim];

    pub fn name(self) -> &'static str {
        match self {
            BenchSuite::Gf => "gf",
            BenchSuite::Bias => "bias",
            BenchSuite::PrgStream => "prg-stream",
            BenchSuite::PrgRecursive => "prg-recursive",
            BenchSuite::Sim => "sim",
        }
    }
}

impl fmt::Display for BenchSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchSuite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown bench suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchEntry {
    pub label: String,
    /// The ladder coordinate: field bits, output length, qubits, ...
    pub size: u64,
    /// Items processed per timed run.
    pub items: u64,
    /// Best of the trials.
    pub seconds: f64,
    pub per_item_ns: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub suite: BenchSuite,
    pub trials: usize,
    pub entries: Vec<BenchEntry>,
}

/// Shortest of `trials` runs of `f`.
pub fn min_time(trials: usize, mut f: impl FnMut()) -> Duration {
    (0..trials.max(1))
        .map(|_| {
            let start = Instant::now();
            f();
            start.elapsed()
        })
        .min()
        .expect("at least one trial")
}

/// Best-of-`trials` time to stream all 2^depth bits at block length
/// `block_len`, starting from a fixed seed.
pub fn stream_time(block_len: usize, depth: usize, trials: usize) -> Result<Duration> {
    let params = inw_params_raw(block_len, depth, block_len)?;
    let seed = fixed_seed(&params)?;
    Ok(min_time(trials, || {
        let ones = InwStream::new(&params, &seed).filter(|&b| b).count();
        black_box(ones);
    }))
}

/// As [`stream_time`], for the full recursive expansion.
pub fn recursive_time(block_len: usize, depth: usize, trials: usize) -> Result<Duration> {
    let params = inw_params_raw(block_len, depth, block_len)?;
    let seed = fixed_seed(&params)?;
    Ok(min_time(trials, || {
        black_box(inw_expand(&params, &seed).expect("depth within params"));
    }))
}

fn fixed_seed(params: &crate::inw::InwParams) -> Result<InwSeed> {
    let bits: Vec<bool> = (0..params.seed_bits()).map(|k| (k * 7 + 3) % 5 < 2).collect();
    InwSeed::new(params, crate::bits::BitString::from_bools(&bits))
}

fn entry(label: String, size: u64, items: u64, t: Duration) -> BenchEntry {
    let seconds = t.as_secs_f64();
    BenchEntry { label, size, items, seconds, per_item_ns: seconds * 1e9 / items as f64 }
}

pub fn bench(suite: BenchSuite, trials: usize) -> Result<BenchReport> {
    let mut entries = Vec::new();
    match suite {
        BenchSuite::Gf => {
            const OPS: u64 = 1 << 20;
            for field in FieldParams::all() {
                let mask = field.order() as u64 - 1;
                let t = min_time(trials, || {
                    let mut acc = 1u64;
                    let mut x = 0x9e37_79b9_7f4a_7c15 & mask;
                    for _ in 0..OPS {
                        acc = field.mul_raw(acc ^ 1, x) & mask;
                        x = x.rotate_left(1) & mask;
                    }
                    black_box(acc);
                });
                entries.push(entry(format!("gf_mul m={}", field.m()), field.m() as u64, OPS, t));
            }
        }
        BenchSuite::Bias => {
            for n in [8usize, 12, 16, 20] {
                let params = BiasedSpaceParams::new(n, FieldParams::new(1)?)?;
                let t = min_time(trials, || {
                    black_box(audit_bias(&params, 1.0).expect("within audit budget"));
                });
                entries.push(entry(format!("audit n={n} m=6"), n as u64, 1 << 12, t));
            }
        }
        BenchSuite::PrgStream | BenchSuite::PrgRecursive => {
            for depth in 8..=14 {
                let t = if suite == BenchSuite::PrgStream {
                    stream_time(12, depth, trials)?
                } else {
                    recursive_time(12, depth, trials)?
                };
                entries.push(entry(format!("N=12 T=2^{depth}"), 1 << depth, 1 << depth, t));
            }
        }
        BenchSuite::Sim => {
            const COINS: usize = 10;
            for qubits in 1..=6 {
                let bp = random_branching_program(qubits, COINS, 0)?;
                let rho0 = DensityMatrix::new(qubits)?;
                let t = min_time(trials, || {
                    black_box(bp_run_avg(&bp, &rho0, &CoinSource::Uniform).expect("valid program"));
                });
                entries.push(entry(format!("uniform average s={qubits} T={COINS}"), qubits as u64, 1 << COINS, t));
            }
        }
    }
    Ok(BenchReport { suite, trials, entries })
}
