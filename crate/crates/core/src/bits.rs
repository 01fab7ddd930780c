//! Binary sequences and packed bit rows.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite binary sequence. Index 0 is the first emitted symbol.
///
/// The text form is `^[01]+$` with index 0 leftmost.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSequence {
    bits: Vec<bool>,
}

impl BitSequence {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            bits: vec![false; len],
        }
    }

    /// Builds a sequence from integers, treating any nonzero value as 1.
    pub fn from_ints(values: &[u8]) -> Self {
        values.iter().map(|&v| v != 0).collect()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.bits.get(i).copied()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn to_ints(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    /// The first `len` symbols, or the whole sequence if shorter.
    pub fn prefix(&self, len: usize) -> BitSequence {
        Self::new(self.bits[..len.min(self.bits.len())].to_vec())
    }

    /// Repeats the sequence cyclically until it holds `len` symbols.
    pub fn cycle_to(&self, len: usize) -> BitSequence {
        if self.bits.is_empty() {
            return Self::default();
        }
        self.bits.iter().copied().cycle().take(len).collect()
    }

    pub fn into_vec(self) -> Vec<bool> {
        self.bits
    }
}

impl FromIterator<bool> for BitSequence {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

impl From<Vec<bool>> for BitSequence {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl fmt::Display for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSequence({self})")
    }
}

impl FromStr for BitSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bit_string(s).map(Self::new)
    }
}

impl Serialize for BitSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitSequence {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a non-empty `^[01]+$` string.
pub(crate) fn parse_bit_string(s: &str) -> Result<Vec<bool>> {
    if s.is_empty() {
        return Err(Error::ParseBits(s.to_string()));
    }
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::ParseBits(s.to_string())),
        })
        .collect()
}

/// Fixed-length bit row packed into 64-bit words, bit `i` of the row at
/// word `i / 64`, position `i % 64`. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct PackedBits {
    words: Vec<u64>,
    len: usize,
}

impl PackedBits {
    pub(crate) fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub(crate) fn from_bools(bits: &[bool]) -> Self {
        let mut out = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                out.set(i, true);
            }
        }
        out
    }

    pub(crate) fn unit(len: usize, i: usize) -> Self {
        let mut out = Self::zeros(len);
        out.set(i, true);
        out
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub(crate) fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub(crate) fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub(crate) fn and(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    /// Parity of the popcount of `self & other`, i.e. the GF(2) dot product.
    pub(crate) fn dot(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Moves every bit from index `i` to index `i + 1`, dropping the last.
    pub(crate) fn shift_up(&self) -> Self {
        let mut words = vec![0u64; self.words.len()];
        let mut carry = 0u64;
        for (out, &w) in words.iter_mut().zip(&self.words) {
            *out = (w << 1) | carry;
            carry = w >> 63;
        }
        let mut out = Self {
            words,
            len: self.len,
        };
        out.clear_tail();
        out
    }

    /// Moves every bit from index `i` to index `i - 1`, dropping the first.
    pub(crate) fn shift_down(&self) -> Self {
        let mut words = vec![0u64; self.words.len()];
        let mut carry = 0u64;
        for (out, &w) in words.iter_mut().zip(&self.words).rev() {
            *out = (w >> 1) | carry;
            carry = w << 63;
        }
        Self {
            words,
            len: self.len,
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for PackedBits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}
