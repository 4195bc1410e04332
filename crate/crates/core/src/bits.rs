//! Fixed-length bit strings.
//!
//! Bit `i` of a [`BitString`] is stored at bit `i % 64` of word `i / 64`. The
//! textual form lists bits in index order (`"0110"` has bits 1 and 2 set); the
//! hex form packs bits 8k..8k+7 into byte k, least significant bit first, and
//! prints the bytes in order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitString {
    words: Vec<u64>,
    len: usize,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut out = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            out.set(i, b);
        }
        out
    }

    /// Low `len` bits of `value`, bit `i` of the integer becoming bit `i` of
    /// the string.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut out = Self::zeros(len);
        if len > 0 {
            out.words[0] = value & low_mask(len);
        }
        out
    }

    /// Builds a string from raw words; bits at or beyond `len` are cleared.
    pub fn from_words(mut words: Vec<u64>, len: usize) -> Self {
        words.resize(len.div_ceil(64), 0);
        let mut out = Self { words, len };
        out.clear_tail();
        out
    }

    /// Parses `'0'`/`'1'` text in index order. Whitespace and `_` are ignored.
    pub fn parse_bits(text: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                '_' => {}
                c if c.is_whitespace() => {}
                c => return Err(Error::Parse(format!("unexpected character {c:?} in bit string"))),
            }
        }
        Ok(Self::from_bools(&bits))
    }

    /// Parses the hex form of a string of exactly `len` bits. Padding bits in
    /// the final byte must be zero.
    pub fn from_hex(text: &str, len: usize) -> Result<Self> {
        let text = text.trim().trim_start_matches("0x");
        let bytes = hex::decode(text).map_err(|e| Error::Parse(e.to_string()))?;
        let want = len.div_ceil(8);
        if bytes.len() != want {
            return Err(Error::LengthMismatch { expected: want * 2, got: text.len() });
        }
        let mut words = vec![0u64; len.div_ceil(64)];
        for (k, &b) in bytes.iter().enumerate() {
            words[k / 8] |= (b as u64) << (8 * (k % 8));
        }
        let out = Self { words, len };
        let mut check = out.clone();
        check.clear_tail();
        if check != out {
            return Err(Error::Parse(format!("hex value has bits set beyond length {len}")));
        }
        Ok(out)
    }

    pub fn to_hex(&self) -> String {
        let bytes: Vec<u8> = (0..self.len.div_ceil(8))
            .map(|k| (self.words[k / 8] >> (8 * (k % 8))) as u8)
            .collect();
        hex::encode(bytes)
    }

    pub fn to_bit_text(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn count_ones(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Reads up to 64 bits starting at `start` as an integer (bit `start`
    /// becomes bit 0).
    pub fn read_u64(&self, start: usize, width: usize) -> u64 {
        debug_assert!(width <= 64 && start + width <= self.len);
        if width == 0 {
            return 0;
        }
        let w = start / 64;
        let off = start % 64;
        let mut v = self.words[w] >> off;
        if off != 0 && off + width > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & low_mask(width)
    }

    /// Writes the low `width` bits of `value` at `start`.
    pub fn write_u64(&mut self, start: usize, width: usize, value: u64) {
        debug_assert!(width <= 64 && start + width <= self.len);
        for k in 0..width {
            self.set(start + k, (value >> k) & 1 == 1);
        }
    }

    pub fn slice(&self, start: usize, end: usize) -> Self {
        assert!(start <= end && end <= self.len);
        let len = end - start;
        let mut out = Self::zeros(len);
        let mut pos = 0;
        while pos < len {
            let width = (len - pos).min(64);
            out.words[pos / 64] = self.read_u64(start + pos, width);
            pos += width;
        }
        out
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    pub fn extend(&mut self, other: &Self) {
        let start = self.len;
        self.len += other.len;
        self.words.resize(self.len.div_ceil(64), 0);
        let mut pos = 0;
        while pos < other.len {
            let width = (other.len - pos).min(64);
            let v = other.read_u64(pos, width);
            let at = start + pos;
            let off = at % 64;
            self.words[at / 64] |= v << off;
            if off != 0 && off + width > 64 {
                self.words[at / 64 + 1] |= v >> (64 - off);
            }
            pos += width;
        }
    }

    pub fn truncate(&mut self, len: usize) {
        if len < self.len {
            self.len = len;
            self.words.truncate(len.div_ceil(64));
            self.clear_tail();
        }
    }

    /// XORs `other` into the first `other.len()` bits of `self`.
    pub fn xor_prefix(&mut self, other: &Self) {
        assert!(other.len <= self.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch { expected: self.len, got: other.len });
        }
        let mut out = self.clone();
        out.xor_prefix(other);
        Ok(out)
    }

    fn clear_tail(&mut self) {
        if !self.len.is_multiple_of(64) {
            if let Some(last) = self.words.last_mut() {
                *last &= low_mask(self.len % 64);
            }
        }
    }
}

#[inline]
pub(crate) fn low_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Lexicographic order in index order: the first differing bit decides, with
/// `0 < 1`; a proper prefix sorts first.
impl Ord for BitString {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        let full = common / 64;
        for k in 0..full {
            let x = self.words[k] ^ other.words[k];
            if x != 0 {
                let p = x.trailing_zeros();
                return if (self.words[k] >> p) & 1 == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        let rem = common % 64;
        if rem != 0 {
            let x = (self.words[full] ^ other.words[full]) & low_mask(rem);
            if x != 0 {
                let p = x.trailing_zeros();
                return if (self.words[full] >> p) & 1 == 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BitString {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({})", self.to_bit_text())
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_text())
    }
}
