//! Arithmetic in GF(2^m) for m = 2·3^i, realized as F_2[x]/(x^{2·3^i} + x^{3^i} + 1).
//!
//! Elements are packed little-endian into a `u64`: bit `j` holds the
//! coefficient of `x^j`, so the identity is `1` and `x` is `0b10`. Elements
//! carry their degree `m`, which also determines the modulus, so mixing
//! elements of different fields is caught at the operation.
//!
//! The element width budget is 54 bits, i.e. tower indices 0 through 3.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{low_mask, BitString};
use crate::error::{Error, Result};

/// Largest supported tower index; `2·3^3 = 54` bits per element.
pub const MAX_TOWER_INDEX: u32 = 3;
/// Largest supported element width in bits.
pub const MAX_FIELD_BITS: u32 = 54;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldParams {
    tower_index: u32,
    m: u32,
    modulus: u64,
}

impl FieldParams {
    /// The field GF(2^{2·3^i}).
    pub fn new(tower_index: u32) -> Result<Self> {
        if tower_index > MAX_TOWER_INDEX {
            return Err(Error::FieldCapacity { tower_index, max_bits: MAX_FIELD_BITS });
        }
        let half = 3u32.pow(tower_index);
        let m = 2 * half;
        let modulus = (1u64 << m) | (1u64 << half) | 1;
        Ok(Self { tower_index, m, modulus })
    }

    /// The field with `m` bits per element; `m` must be `2·3^i`.
    pub fn with_bits(m: u32) -> Result<Self> {
        let i = tower_index_of(m).ok_or(Error::NotTowerDegree(m))?;
        Self::new(i)
    }

    /// Every supported field, smallest first.
    pub fn all() -> impl Iterator<Item = Self> {
        (0..=MAX_TOWER_INDEX).map(|i| Self::new(i).expect("in budget"))
    }

    #[inline]
    pub fn tower_index(&self) -> u32 {
        self.tower_index
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Bitmask of the modulus polynomial, including the `x^m` term.
    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn order(&self) -> u128 {
        1u128 << self.m
    }

    #[inline]
    fn mask(&self) -> u64 {
        low_mask(self.m as usize)
    }

    pub fn element(&self, bits: u64) -> Result<GfElement> {
        if bits & !self.mask() != 0 {
            return Err(Error::ElementOutOfField { m: self.m });
        }
        Ok(GfElement { bits, m: self.m })
    }

    pub fn zero(&self) -> GfElement {
        GfElement { bits: 0, m: self.m }
    }

    pub fn one(&self) -> GfElement {
        GfElement { bits: 1, m: self.m }
    }

    /// Parses a hex-encoded element (numeric: bit j of the integer is the
    /// coefficient of x^j).
    pub fn parse_hex(&self, text: &str) -> Result<GfElement> {
        let text = text.trim().trim_start_matches("0x");
        let bits = u64::from_str_radix(text, 16).map_err(|e| Error::Parse(e.to_string()))?;
        self.element(bits)
    }

    // Raw arithmetic on packed coefficients. Inputs must already lie in the
    // field; nothing is checked.

    #[inline]
    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        self.reduce(clmul(a, b))
    }

    #[inline]
    pub fn square_raw(&self, a: u64) -> u64 {
        self.mul_raw(a, a)
    }

    pub fn pow_raw(&self, a: u64, mut k: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while k != 0 {
            if k & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.square_raw(base);
            k >>= 1;
        }
        acc
    }

    /// Reduces a product of two field elements modulo the trinomial. Since
    /// x^m = x^{m/2} + 1, each fold replaces the high part `h` by
    /// `h + h·x^{m/2}`; two folds suffice for degree ≤ 2m − 2.
    #[inline]
    fn reduce(&self, mut p: u128) -> u64 {
        let m = self.m;
        let half = m / 2;
        let mask = self.mask() as u128;
        for _ in 0..2 {
            let h = p >> m;
            if h == 0 {
                break;
            }
            p = (p & mask) ^ h ^ (h << half);
        }
        debug_assert_eq!(p >> m, 0);
        p as u64
    }
}

fn tower_index_of(m: u32) -> Option<u32> {
    (0..=MAX_TOWER_INDEX + 2).find(|&i| 2 * 3u32.pow(i) == m)
}

/// Carry-less product of two polynomials over F_2.
#[inline]
pub fn clmul(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut b = b;
    let mut acc = 0u128;
    let mut shift = 0;
    while b != 0 {
        let tz = b.trailing_zeros();
        shift += tz;
        b >>= tz;
        acc ^= a << shift;
        b >>= 1;
        shift += 1;
    }
    acc
}

/// An element of GF(2^m), tagged with `m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GfElement {
    bits: u64,
    m: u32,
}

impl GfElement {
    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn field(&self) -> FieldParams {
        FieldParams::with_bits(self.m).expect("elements only come from valid fields")
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Coefficients as a length-m bit string (bit j ↔ x^j).
    pub fn to_bitstring(&self) -> BitString {
        BitString::from_u64(self.bits, self.m as usize)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::FieldMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { bits: self.bits ^ other.bits, m: self.m })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        Ok(Self { bits: f.mul_raw(self.bits, other.bits), m: self.m })
    }

    /// `self^k` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(&self, k: u64) -> Self {
        let f = self.field();
        Self { bits: f.pow_raw(self.bits, k), m: self.m }
    }

    /// ⟨self, other⟩ over F_2: parity of the bitwise AND of coefficients.
    pub fn inner(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(parity(self.bits & other.bits))
    }
}

impl fmt::Debug for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})[{:#x}]", self.m, self.bits)
    }
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:x}", self.bits)
    }
}

pub fn gf_add(a: &GfElement, b: &GfElement) -> Result<GfElement> {
    a.add(b)
}

pub fn gf_mul(a: &GfElement, b: &GfElement) -> Result<GfElement> {
    a.mul(b)
}

pub fn gf_pow(a: &GfElement, k: u64) -> GfElement {
    a.pow(k)
}

#[inline]
pub fn parity(x: u64) -> bool {
    x.count_ones() & 1 == 1
}

/// Inner product over F_2 of two equal-length bit strings.
pub fn inner_prod_f2(a: &BitString, b: &BitString) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    let ones: u32 = a.words().iter().zip(b.words()).map(|(x, y)| (x & y).count_ones()).sum();
    Ok(ones & 1 == 1)
}
