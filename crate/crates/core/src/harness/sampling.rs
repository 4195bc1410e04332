use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::inw::{InwParams, InwSeed};

/// Identifier of the stream [`sample_seeds`] draws from; recorded in reports.
pub const SAMPLER_ID: &str = "chacha20(seed_from_u64)/u64-words-lsb-first";

/// `n_seeds` generator seeds drawn from a ChaCha20 stream keyed by
/// `rng_seed`. Each seed consumes ⌈(M+1)N / 64⌉ words; surplus high bits of
/// the last word are dropped.
pub fn sample_seeds(params: &InwParams, n_seeds: usize, rng_seed: u64) -> Result<Vec<InwSeed>> {
    if n_seeds == 0 {
        return Err(Error::InvalidParameter("n_seeds must be at least 1".into()));
    }
    let bits = params.seed_bits();
    let mut rng = ChaCha20Rng::seed_from_u64(rng_seed);
    (0..n_seeds)
        .map(|_| {
            let words = (0..bits.div_ceil(64)).map(|_| rng.next_u64()).collect();
            InwSeed::new(params, BitString::from_words(words, bits))
        })
        .collect()
}
