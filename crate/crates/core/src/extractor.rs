//! XOR extractor Ext(x, (α, β)) = A(α, β) ⊕ x over the small-bias space.
//!
//! For a fixed seed the map is an involution on {0,1}^n, hence a bijection.

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::epsbias::{biased_vector_raw, BiasedSpaceParams, ExtSeed};
use crate::error::{Error, Result};
use crate::gf2m::{FieldParams, MAX_FIELD_BITS};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtParams {
    /// Input and output length.
    pub n: usize,
    /// Seed length, always `2·field.m()`.
    pub d: usize,
    pub field: FieldParams,
    /// Collision-entropy threshold in bits.
    pub t: usize,
    /// Target extraction error.
    pub eps: f64,
}

impl ExtParams {
    pub fn new(n: usize, field: FieldParams, t: usize, eps: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("extractor length n must be positive".into()));
        }
        if t > n {
            return Err(Error::InvalidParameter(format!("entropy threshold t = {t} exceeds n = {n}")));
        }
        Ok(Self { n, d: 2 * field.m() as usize, field, t, eps })
    }

    pub fn space(&self) -> BiasedSpaceParams {
        BiasedSpaceParams { n: self.n, field: self.field }
    }

    /// Bias of the underlying space, n / 2^m.
    pub fn delta(&self) -> f64 {
        self.space().guaranteed_delta()
    }

    /// The guaranteed extraction error δ·2^{(n−t)/2}.
    pub fn error_bound(&self) -> f64 {
        self.delta() * 2f64.powf((self.n - self.t) as f64 / 2.0)
    }
}

/// Ext(x, seed) = A(seed) ⊕ x.
pub fn ext_apply(params: &ExtParams, x: &BitString, seed: &ExtSeed) -> Result<BitString> {
    if x.len() != params.n {
        return Err(Error::LengthMismatch { expected: params.n, got: x.len() });
    }
    if seed.alpha.m() != params.field.m() {
        return Err(Error::FieldMismatch { left: params.field.m(), right: seed.alpha.m() });
    }
    let mut out = x.clone();
    xor_biased_prefix(&params.field, seed.alpha.bits(), seed.beta.bits(), &mut out, params.n);
    Ok(out)
}

/// XORs A(α, β) restricted to `n` coordinates into the first `n` bits of
/// `target`.
pub(crate) fn xor_biased_prefix(field: &FieldParams, alpha: u64, beta: u64, target: &mut BitString, n: usize) {
    if beta == 0 {
        return;
    }
    let row = biased_vector_raw(field, alpha, beta, n);
    target.xor_prefix(&row);
}

/// Splits a `2m`-bit seed into α = bits[0..m) and β = bits[m..2m).
pub fn ext_seed_unpack(field: &FieldParams, bits: &BitString) -> Result<ExtSeed> {
    let m = field.m() as usize;
    if bits.len() != 2 * m {
        return Err(Error::LengthMismatch { expected: 2 * m, got: bits.len() });
    }
    ExtSeed::from_raw(field, bits.read_u64(0, m), bits.read_u64(m, m))
}

pub fn ext_seed_pack(seed: &ExtSeed) -> BitString {
    let mut out = seed.alpha.to_bitstring();
    out.extend(&seed.beta.to_bitstring());
    out
}

/// Smallest tower field for which Ext is a (t, eps)-weak quantum extractor on
/// n bits: m ≥ (n − t)/2 + log₂ n + log₂(1/eps).
pub fn ext_params_for(n: usize, t: usize, eps: f64) -> Result<ExtParams> {
    if n == 0 || t > n {
        return Err(Error::InvalidParameter(format!("need 0 <= t <= n and n >= 1, got n = {n}, t = {t}")));
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::InvalidParameter(format!("eps must lie in (0, 1], got {eps}")));
    }
    let required = required_field_bits(n, t as f64, eps);
    let field = smallest_field_for(required)?;
    ExtParams::new(n, field, t, eps)
}

pub(crate) fn required_field_bits(n: usize, t: f64, eps: f64) -> f64 {
    (n as f64 - t) / 2.0 + (n as f64).log2() - eps.log2()
}

/// Tolerance for comparing a field size against a real-valued requirement,
/// so exact integer requirements are not lost to rounding.
const REQUIREMENT_SLACK: f64 = 1e-9;

pub(crate) fn smallest_field_for(required: f64) -> Result<FieldParams> {
    FieldParams::all()
        .find(|f| f.m() as f64 >= required - REQUIREMENT_SLACK)
        .ok_or(Error::NoAdmissibleField { required, max: MAX_FIELD_BITS })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldParams {
        FieldParams::new(0).unwrap()
    }

    #[test]
    fn zero_beta_is_identity() {
        let p = ExtParams::new(8, f4(), 8, 1.0).unwrap();
        let x = BitString::parse_bits("10110010").unwrap();
        let s = ExtSeed::from_raw(&p.field, 0b11, 0).unwrap();
        assert_eq!(ext_apply(&p, &x, &s).unwrap(), x);
    }

    #[test]
    fn zero_input_gives_row() {
        let p = ExtParams::new(4, f4(), 4, 1.0).unwrap();
        let s = ExtSeed::from_raw(&p.field, 0b10, 0b11).unwrap();
        let y = ext_apply(&p, &BitString::zeros(4), &s).unwrap();
        assert_eq!(y.to_bit_text(), "1101");
        assert_eq!(ext_apply(&p, &y, &s).unwrap(), BitString::zeros(4));
    }

    #[test]
    fn length_and_field_errors() {
        let p = ExtParams::new(4, f4(), 4, 1.0).unwrap();
        let s = ExtSeed::from_raw(&p.field, 1, 1).unwrap();
        assert!(matches!(ext_apply(&p, &BitString::zeros(5), &s), Err(Error::LengthMismatch { .. })));
        let other = ExtSeed::from_raw(&FieldParams::new(1).unwrap(), 1, 1).unwrap();
        assert!(ext_apply(&p, &BitString::zeros(4), &other).is_err());
    }

    #[test]
    fn seed_packing() {
        let f = f4();
        let s = ext_seed_unpack(&f, &BitString::parse_bits("0000").unwrap()).unwrap();
        assert!(s.alpha.is_zero() && s.beta.is_zero());
        let s = ext_seed_unpack(&f, &BitString::parse_bits("0110").unwrap()).unwrap();
        assert_eq!(s.alpha.to_bitstring().to_bit_text(), "01");
        assert_eq!(s.beta.to_bitstring().to_bit_text(), "10");
        for v in 0..16 {
            let b = BitString::from_u64(v, 4);
            assert_eq!(ext_seed_pack(&ext_seed_unpack(&f, &b).unwrap()), b);
        }
        assert!(ext_seed_unpack(&f, &BitString::zeros(5)).is_err());
    }

    #[test]
    fn parameter_selection() {
        let p = ext_params_for(4, 4, 1.0).unwrap();
        assert_eq!((p.field.m(), p.d), (2, 4));
        let p = ext_params_for(16, 12, 0.25).unwrap();
        assert_eq!((p.field.m(), p.d), (18, 36));
        assert!(p.error_bound() <= 0.25);
        assert!(matches!(ext_params_for(4, 0, 2f64.powi(-60)), Err(Error::NoAdmissibleField { .. })));
        assert!(ext_params_for(4, 5, 0.5).is_err());
        assert!(ext_params_for(4, 2, 0.0).is_err());
    }
}
