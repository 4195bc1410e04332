//! The small-bias multiset A = {A(α, β) : α, β ∈ GF(2^m)} over {0,1}^n with
//! A(α, β)_j = ⟨α^j, β⟩₂.
//!
//! The multiset is never materialized; points are generated on demand from
//! their seed. [`audit_bias`] checks the bias of a whole space exhaustively.

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::gf2m::{parity, FieldParams, GfElement};

/// Largest output length the exhaustive audit accepts.
pub const MAX_AUDIT_LEN: usize = 24;
/// Largest seed length (2m) the exhaustive audit accepts.
pub const MAX_AUDIT_SEED_BITS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiasedSpaceParams {
    pub n: usize,
    pub field: FieldParams,
}

impl BiasedSpaceParams {
    pub fn new(n: usize, field: FieldParams) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("output length n must be positive".into()));
        }
        Ok(Self { n, field })
    }

    /// The bias level the construction guarantees, n / 2^m.
    pub fn guaranteed_delta(&self) -> f64 {
        self.n as f64 / 2f64.powi(self.field.m() as i32)
    }
}

/// One point of the multiset: the pair (α, β).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtSeed {
    pub alpha: GfElement,
    pub beta: GfElement,
}

impl ExtSeed {
    pub fn new(alpha: GfElement, beta: GfElement) -> Result<Self> {
        if alpha.m() != beta.m() {
            return Err(Error::FieldMismatch { left: alpha.m(), right: beta.m() });
        }
        Ok(Self { alpha, beta })
    }

    /// Seed from raw packed coefficients; both must fit in `field`.
    pub fn from_raw(field: &FieldParams, alpha: u64, beta: u64) -> Result<Self> {
        Ok(Self { alpha: field.element(alpha)?, beta: field.element(beta)? })
    }

    fn check(&self, field: &FieldParams) -> Result<()> {
        if self.alpha.m() != field.m() {
            return Err(Error::FieldMismatch { left: field.m(), right: self.alpha.m() });
        }
        Ok(())
    }
}

/// Coordinate `j` of A(α, β), i.e. ⟨α^j, β⟩₂ with α^0 = 1.
pub fn biased_coord(params: &BiasedSpaceParams, seed: &ExtSeed, j: usize) -> Result<bool> {
    seed.check(&params.field)?;
    if j >= params.n {
        return Err(Error::IndexOutOfRange { index: j, len: params.n });
    }
    let power = seed.alpha.pow(j as u64);
    power.inner(&seed.beta)
}

/// The whole vector A(α, β), one field multiplication per coordinate.
pub fn biased_vector(params: &BiasedSpaceParams, seed: &ExtSeed) -> Result<BitString> {
    seed.check(&params.field)?;
    Ok(biased_vector_raw(&params.field, seed.alpha.bits(), seed.beta.bits(), params.n))
}

/// Unchecked [`biased_vector`] on packed coefficients.
pub(crate) fn biased_vector_raw(field: &FieldParams, alpha: u64, beta: u64, n: usize) -> BitString {
    let mut words = vec![0u64; n.div_ceil(64)];
    if beta != 0 {
        let mut power = 1u64;
        for j in 0..n {
            if parity(power & beta) {
                words[j / 64] |= 1u64 << (j % 64);
            }
            power = field.mul_raw(power, alpha);
        }
    }
    BitString::from_words(words, n)
}

/// Result of an exhaustive bias audit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BiasReport {
    /// max over nonempty S of |E[⊕_{j∈S} x_j] − ½|.
    pub max_bias: f64,
    /// The maximizing subset; bit j set ⇔ coordinate j ∈ S.
    pub worst_subset: u64,
    /// max_bias ≤ δ/2.
    pub pass: bool,
    pub seeds_enumerated: u64,
}

/// Enumerates all 2^{2m} seeds, histograms the outputs over {0,1}^n, and
/// reads every subset's XOR bias off a Walsh–Hadamard transform of the
/// histogram.
pub fn audit_bias(params: &BiasedSpaceParams, delta: f64) -> Result<BiasReport> {
    let n = params.n;
    if n > MAX_AUDIT_LEN {
        return Err(Error::BudgetExceeded { bits: n, max: MAX_AUDIT_LEN });
    }
    let m = params.field.m() as usize;
    if 2 * m > MAX_AUDIT_SEED_BITS {
        return Err(Error::BudgetExceeded { bits: 2 * m, max: MAX_AUDIT_SEED_BITS });
    }
    let field = &params.field;
    let size = 1u64 << m;
    let mut hist = vec![0i64; 1 << n];
    for alpha in 0..size {
        for beta in 0..size {
            let v = biased_vector_raw(field, alpha, beta, n);
            hist[v.read_u64(0, n) as usize] += 1;
        }
    }
    let seeds = size * size;
    walsh_hadamard(&mut hist);
    // hist[S] = Σ_x h(x)(−1)^{|x∧S|} = seeds · (1 − 2·E[⊕_S x]), so
    // |E − ½| = |hist[S]| / (2·seeds).
    let (worst_subset, worst) = hist
        .iter()
        .enumerate()
        .skip(2)
        .map(|(s, &w)| (s as u64, w.unsigned_abs()))
        .fold((1u64, hist[1].unsigned_abs()), |best, cur| if cur.1 > best.1 { cur } else { best });
    let max_bias = worst as f64 / (2.0 * seeds as f64);
    Ok(BiasReport {
        max_bias,
        worst_subset,
        pass: max_bias <= delta / 2.0,
        seeds_enumerated: seeds,
    })
}

/// In-place unnormalized Walsh–Hadamard transform; `data.len()` must be a
/// power of two.
pub fn walsh_hadamard(data: &mut [i64]) {
    let len = data.len();
    assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in data.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}
