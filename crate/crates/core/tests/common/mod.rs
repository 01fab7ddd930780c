//! Independent reference computations shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use shrinkca::{BitSequence, Gf2Poly, Lfsr, ShrinkingGenerator};

pub fn poly(s: &str) -> Gf2Poly {
    s.parse().unwrap()
}

pub fn lfsr(p: &str, seed: &str) -> Lfsr {
    Lfsr::new(poly(p), seed.parse().unwrap()).unwrap()
}

pub fn bits_of(value: u64, width: usize) -> BitSequence {
    (0..width).map(|i| (value >> i) & 1 == 1).collect()
}

/// All primitive polynomials of degree `r`, ascending by coefficient mask.
pub fn primitive_polys(r: usize) -> Vec<Gf2Poly> {
    (0..(1u64 << r))
        .map(|low| Gf2Poly::from_u64((1 << r) | low))
        .filter(|p| p.is_primitive().unwrap())
        .collect()
}

/// `det(xI + M)` over GF(2)[x] by cofactor expansion along rows, memoized
/// on the set of columns still available.
pub fn brute_char_poly(m: &[Vec<bool>]) -> Gf2Poly {
    fn minor(m: &[Vec<bool>], row: usize, cols: u32, memo: &mut HashMap<u32, Gf2Poly>) -> Gf2Poly {
        if row == m.len() {
            return Gf2Poly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Gf2Poly::zero();
        for col in 0..m.len() {
            if cols & (1 << col) == 0 {
                continue;
            }
            // entry of xI + M
            let mut entry = Gf2Poly::zero();
            if m[row][col] {
                entry += &Gf2Poly::one();
            }
            if row == col {
                entry += &Gf2Poly::x();
            }
            if entry.is_zero() {
                continue;
            }
            let sub = minor(m, row + 1, cols & !(1 << col), memo);
            acc += &entry.mul(&sub);
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let n = m.len();
    assert!(n <= 20);
    minor(m, 0, (1u32 << n) - 1, &mut HashMap::new())
}

/// Shrunken sequence by generating one full joint period of both
/// registers and filtering on the control bits.
pub fn brute_shrunken(gen: &ShrinkingGenerator) -> BitSequence {
    let t1 = (1usize << gen.control().degree()) - 1;
    let t2 = (1usize << gen.data().degree()) - 1;
    let a = gen.control().sequence(t1 * t2);
    let b = gen.data().sequence(t1 * t2);
    a.iter()
        .zip(b.iter())
        .filter(|(ai, _)| *ai)
        .map(|(_, bi)| bi)
        .collect()
}

/// Applies `q(E)` directly at every position where it fits.
pub fn annihilates(q: &Gf2Poly, s: &BitSequence) -> bool {
    let d = q.degree() as usize;
    let taps: Vec<usize> = q.exponents().collect();
    (0..s.len().saturating_sub(d))
        .all(|n| taps.iter().filter(|&&k| s.get(n + k).unwrap()).count() % 2 == 0)
}

/// Every coprime configuration of the multiplicity sweep.
pub fn coprime_configs(l1s: &[usize], l2s: &[usize]) -> Vec<(usize, usize)> {
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    l1s.iter()
        .flat_map(|&l1| l2s.iter().map(move |&l2| (l1, l2)))
        .filter(|&(l1, l2)| gcd(l1, l2) == 1)
        .collect()
}
