//! The INW generator G_M instantiated with the XOR extractor.
//!
//! G_0(x) = x_1 and
//! G_i(x, s_1..s_i) = G_{i−1}(x, s_1..s_{i−1}) ∘ G_{i−1}(Ext^{(i)}_{s_i}(x, s_1..s_{i−1})).
//!
//! Three evaluation routes are provided and must agree bit for bit:
//! [`inw_eval_recursive`] (the literal recursion), [`inw_coord`] (one
//! root-to-leaf walk per output bit), and [`InwStream`] (a left-to-right DFS
//! that keeps a single label and only ever applies reversible label steps).
//!
//! Seeds and labels are (M+1) blocks of N bits, block 0 being `x` and block
//! k being `s_k`. Heights run from `M` at the root to `0` at the leaves; the
//! right child of a node at height `h` applies Ext^{(h)} keyed by block `h` to
//! blocks `0..h`.

mod cost;
mod tree;

pub use cost::{cost_model, CostModel, HeightCost};
pub use tree::{inw_coord, label_step, InwStream, Label, Move};

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::extractor::{required_field_bits, smallest_field_for, xor_biased_prefix, ExtParams};
use crate::gf2m::FieldParams;

/// Where a parameter set came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// Chosen by [`inw_params`]; the fooling guarantee applies.
    Guaranteed,
    /// Built by [`inw_params_raw`] without the admissibility check.
    Raw,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InwParams {
    /// Space bound S of the programs to fool.
    pub space_bound: usize,
    /// Output length T.
    pub output_len: usize,
    /// Fooling error target; `None` for raw parameters.
    pub eps: Option<f64>,
    /// Block length N = 2m.
    pub block_len: usize,
    /// Tree depth M = ⌈log₂ T⌉.
    pub depth: usize,
    pub field: FieldParams,
    /// `levels[i − 1]` describes Ext^{(i)}: n = iN, d = N, t = iN − S.
    pub levels: Vec<ExtParams>,
    pub regime: Regime,
}

impl InwParams {
    pub fn seed_bits(&self) -> usize {
        (self.depth + 1) * self.block_len
    }

    /// Number of leaves, 2^M.
    pub fn full_len(&self) -> usize {
        1usize << self.depth
    }

    /// The extractor used at level `i` (1-based).
    pub fn level(&self, i: usize) -> &ExtParams {
        &self.levels[i - 1]
    }

    /// Truncates the output to `t` bits, `1 <= t <= 2^M`.
    pub fn with_output_len(mut self, t: usize) -> Result<Self> {
        if t == 0 || t > self.full_len() {
            return Err(Error::InvalidParameter(format!("output length {t} outside [1, {}]", self.full_len())));
        }
        self.output_len = t;
        Ok(self)
    }

    /// Applies Ext^{(i)} keyed by block `i` of `bits` to its first `i·N` bits.
    pub(crate) fn apply_level(&self, i: usize, bits: &mut BitString) {
        let n = self.block_len;
        let m = self.field.m() as usize;
        let alpha = bits.read_u64(i * n, m);
        let beta = bits.read_u64(i * n + m, m);
        xor_biased_prefix(&self.field, alpha, beta, bits, i * n);
    }
}

/// ⌈log₂ t⌉ for t ≥ 1.
pub fn ceil_log2(t: usize) -> usize {
    assert!(t >= 1);
    (usize::BITS - (t - 1).leading_zeros()) as usize
}

/// Chooses N for programs of space `space_bound` reading `output_len` coins
/// with fooling error `eps`.
///
/// N = 2m with m the smallest tower degree satisfying
/// m ≥ S/2 + log₂(M·N) + log₂(T²/eps), found by iterating N to a fixed point.
pub fn inw_params(space_bound: usize, output_len: usize, eps: f64) -> Result<InwParams> {
    if output_len == 0 || space_bound == 0 {
        return Err(Error::InvalidParameter("S and T must be positive".into()));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(Error::InvalidParameter(format!("eps must be positive, got {eps}")));
    }
    let depth = ceil_log2(output_len);
    if (space_bound as f64) < (output_len as f64).log2() {
        log::warn!("S = {space_bound} < log2 T = {:.2}; outside the generator's guaranteed regime", (output_len as f64).log2());
    }
    let t = output_len as f64;
    let mut field = FieldParams::new(0)?;
    if depth > 0 {
        loop {
            let block_len = 2 * field.m() as usize;
            let required = space_bound as f64 / 2.0 + ((depth * block_len) as f64).log2() + (t * t / eps).log2();
            let next = smallest_field_for(required)?;
            if next == field {
                break;
            }
            field = next;
        }
    }
    let mut params = build(field, depth, space_bound, Regime::Guaranteed, Some(eps))?;
    params.output_len = output_len;
    Ok(params)
}

/// Desk-scale override: block length `block_len` (which must be 2·2·3^j) and
/// depth `depth`, with no admissibility check. Output length is 2^depth.
pub fn inw_params_raw(block_len: usize, depth: usize, space_bound: usize) -> Result<InwParams> {
    if !block_len.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("block length {block_len} is odd")));
    }
    let field = FieldParams::with_bits((block_len / 2) as u32)?;
    if depth >= usize::BITS as usize - 1 {
        return Err(Error::InvalidParameter(format!("depth {depth} too large")));
    }
    build(field, depth, space_bound, Regime::Raw, None)
}

fn build(field: FieldParams, depth: usize, space_bound: usize, regime: Regime, eps: Option<f64>) -> Result<InwParams> {
    let block_len = 2 * field.m() as usize;
    let output_len = 1usize << depth;
    let levels = (1..=depth)
        .map(|i| {
            let n = i * block_len;
            let t = n.saturating_sub(space_bound);
            let level_eps = match eps {
                Some(e) => e / (output_len as f64).powi(2),
                // Raw parameters promise nothing; record what the field achieves.
                None => {
                    let probe = ExtParams::new(n, field, t, 1.0)?;
                    probe.error_bound()
                }
            };
            ExtParams::new(n, field, t, level_eps)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(InwParams { space_bound, output_len, eps, block_len, depth, field, levels, regime })
}

/// Required m at the worst level for the given block length; exposed for
/// reporting.
pub fn required_field_bits_at(params: &InwParams) -> Option<f64> {
    let eps = params.eps?;
    if params.depth == 0 {
        return Some(0.0);
    }
    let level = params.level(params.depth);
    let t = level.n as f64 - params.space_bound as f64;
    let eps_level = eps / (params.output_len as f64).powi(2);
    Some(required_field_bits(level.n, t, eps_level))
}

/// A generator seed: (M+1) blocks of N bits, `(x, s_1, …, s_M)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InwSeed(BitString);

impl InwSeed {
    pub fn new(params: &InwParams, bits: BitString) -> Result<Self> {
        if bits.len() != params.seed_bits() {
            return Err(Error::LengthMismatch { expected: params.seed_bits(), got: bits.len() });
        }
        Ok(Self(bits))
    }

    pub fn from_hex(params: &InwParams, text: &str) -> Result<Self> {
        Self::new(params, BitString::from_hex(text, params.seed_bits())?)
    }

    pub fn from_u64(params: &InwParams, value: u64) -> Result<Self> {
        if params.seed_bits() > 64 {
            return Err(Error::InvalidParameter("seed wider than 64 bits".into()));
        }
        Ok(Self(BitString::from_u64(value, params.seed_bits())))
    }

    pub fn bits(&self) -> &BitString {
        &self.0
    }

    pub fn into_bits(self) -> BitString {
        self.0
    }

    pub fn block(&self, params: &InwParams, k: usize) -> BitString {
        let n = params.block_len;
        self.0.slice(k * n, (k + 1) * n)
    }

    pub fn to_hex(&self) -> String {
        self.0.to_hex()
    }
}

/// G_i evaluated by literal recursion on blocks `0..=i` of the seed; the
/// blocks above `i` are ignored. Returns 2^i bits.
pub fn inw_eval_recursive(params: &InwParams, seed: &InwSeed, i: usize) -> Result<BitString> {
    if i > params.depth {
        return Err(Error::IndexOutOfRange { index: i, len: params.depth + 1 });
    }
    let prefix = seed.0.slice(0, (i + 1) * params.block_len);
    Ok(recurse(params, &prefix, i))
}

fn recurse(params: &InwParams, input: &BitString, i: usize) -> BitString {
    if i == 0 {
        return BitString::from_bools(&[input.get(0)]);
    }
    let n = params.block_len;
    let head = input.slice(0, i * n);
    let mut applied = input.clone();
    params.apply_level(i, &mut applied);
    let left = recurse(params, &head, i - 1);
    let right = recurse(params, &applied.slice(0, i * n), i - 1);
    left.concat(&right)
}

/// The first T bits of G_M(seed).
pub fn inw_expand(params: &InwParams, seed: &InwSeed) -> Result<BitString> {
    let mut out = inw_eval_recursive(params, seed, params.depth)?;
    out.truncate(params.output_len);
    Ok(out)
}

/// Collects [`InwStream`] into a bit string.
pub fn inw_stream(params: &InwParams, seed: &InwSeed) -> BitString {
    let bits: Vec<bool> = InwStream::new(params, seed).collect();
    BitString::from_bools(&bits)
}
