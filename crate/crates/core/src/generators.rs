//! LFSR and shrinking-generator simulation plus sequence utilities.
//!
//! Sequence convention: an LFSR with characteristic polynomial
//! `P(x) = x^r + c_1 x^(r-1) + ... + c_r` emits a stream satisfying
//!
//! ```text
//! a_n = c_1 a_(n-1) + c_2 a_(n-2) + ... + c_r a_(n-r)      (n >= r)
//! ```
//!
//! so `P(E)` annihilates the stream, where `E` is the shift operator. The
//! seed holds the first `r` emitted bits `a_0 .. a_(r-1)`. The reciprocal
//! (feedback polynomial) convention is not used anywhere in this crate.

use serde::Serialize;

use crate::bits::BitSequence;
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;

/// A Fibonacci LFSR of degree `1..=64`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lfsr {
    charpoly: Gf2Poly,
    seed: BitSequence,
}

impl Lfsr {
    pub fn new(charpoly: Gf2Poly, seed: BitSequence) -> Result<Self> {
        let degree = charpoly.degree();
        if !(1..=64).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        if seed.len() != degree as usize {
            return Err(Error::LengthMismatch {
                expected: degree as usize,
                actual: seed.len(),
            });
        }
        Ok(Self { charpoly, seed })
    }

    pub fn charpoly(&self) -> &Gf2Poly {
        &self.charpoly
    }

    pub fn seed(&self) -> &BitSequence {
        &self.seed
    }

    pub fn degree(&self) -> usize {
        self.charpoly.degree() as usize
    }

    pub fn has_zero_seed(&self) -> bool {
        self.seed.count_ones() == 0
    }

    /// Endless output stream starting at `a_0`.
    pub fn iter(&self) -> LfsrIter {
        let r = self.degree();
        let mut window = 0u64;
        for (i, b) in self.seed.iter().enumerate() {
            window |= (b as u64) << i;
        }
        let taps = (0..r)
            .filter(|&k| self.charpoly.coeff(k))
            .fold(0u64, |acc, k| acc | (1 << k));
        LfsrIter {
            window,
            taps,
            top: r - 1,
        }
    }

    /// The first `n` terms.
    pub fn sequence(&self, n: usize) -> BitSequence {
        self.iter().take(n).collect()
    }
}

/// Iterator over an LFSR stream. Bit `k` of the window is `a_(n+k)`.
#[derive(Clone, Debug)]
pub struct LfsrIter {
    window: u64,
    taps: u64,
    top: usize,
}

impl Iterator for LfsrIter {
    type Item = bool;

    fn next(&mut self) -> Option<bool> {
        let out = self.window & 1 == 1;
        let feedback = (self.window & self.taps).count_ones() as u64 & 1;
        self.window = (self.window >> 1) | (feedback << self.top);
        Some(out)
    }
}

/// `lfsr_sequence` as a free function.
pub fn lfsr_sequence(reg: &Lfsr, n: usize) -> BitSequence {
    reg.sequence(n)
}

/// A shrinking generator: control register R1 decimates data register R2,
/// keeping `b_i` exactly when `a_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShrinkingGenerator {
    control: Lfsr,
    data: Lfsr,
}

impl ShrinkingGenerator {
    /// Fails unless the register lengths are coprime.
    pub fn new(control: Lfsr, data: Lfsr) -> Result<Self> {
        let (l1, l2) = (control.degree(), data.degree());
        if gcd(l1, l2) != 1 {
            return Err(Error::NotCoprime { l1, l2 });
        }
        Ok(Self { control, data })
    }

    pub fn control(&self) -> &Lfsr {
        &self.control
    }

    pub fn data(&self) -> &Lfsr {
        &self.data
    }

    /// Period `(2^L2 - 1) * 2^(L1 - 1)` for primitive registers and nonzero seeds.
    pub fn expected_period(&self) -> u64 {
        ((1u64 << self.data.degree()) - 1) << (self.control.degree() - 1)
    }

    /// Endless shrunken stream. Never yields if the control seed is zero.
    pub fn iter(&self) -> impl Iterator<Item = bool> {
        self.control
            .iter()
            .zip(self.data.iter())
            .filter_map(|(a, b)| a.then_some(b))
    }

    /// The first `n` kept bits.
    pub fn sequence(&self, n: usize) -> Result<BitSequence> {
        if n > 0 && self.control.has_zero_seed() {
            return Err(Error::ZeroControlSeed);
        }
        Ok(self.iter().take(n).collect())
    }
}

/// `shrunken_sequence` as a free function.
pub fn shrunken_sequence(gen: &ShrinkingGenerator, n: usize) -> Result<BitSequence> {
    gen.sequence(n)
}

/// Smallest `T >= 1` with `s[i + T] = s[i]` for every valid `i` in the
/// window, or `None` for an empty window.
///
/// This is a property of the window only; supply at least two full periods
/// to make a claim about the underlying stream.
pub fn sequence_period(s: &BitSequence) -> Option<usize> {
    let bits = s.as_slice();
    let n = bits.len();
    if n == 0 {
        return None;
    }
    // prefix function: border[i] = longest proper border of bits[..=i]
    let mut border = vec![0usize; n];
    for i in 1..n {
        let mut k = border[i - 1];
        while k > 0 && bits[i] != bits[k] {
            k = border[k - 1];
        }
        if bits[i] == bits[k] {
            k += 1;
        }
        border[i] = k;
    }
    Some(n - border[n - 1])
}

/// `s[offset], s[offset + stride], s[offset + 2 stride], ...`
pub fn decimate_by_stride(s: &BitSequence, stride: usize, offset: usize) -> Result<BitSequence> {
    if stride == 0 || offset >= stride {
        return Err(Error::InvalidDecimation { stride, offset });
    }
    Ok(s.iter().skip(offset).step_by(stride).collect())
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
