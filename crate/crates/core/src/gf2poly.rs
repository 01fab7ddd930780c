//! Polynomials over GF(2).
//!
//! Coefficients are stored ascending and packed into 64-bit words: bit `i`
//! is the coefficient of `x^i`. The representation is always canonical (no
//! trailing zero words), so structural equality is polynomial equality.
//!
//! Text forms accepted by [`FromStr`]:
//!
//! * an ascending bit string such as `101001` (= `1 + x^2 + x^5`);
//! * a sum of terms such as `1+x^2+x^5`, each term `1`, `x` or `x^k`.
//!   Repeated terms cancel.
//!
//! [`Display`](fmt::Display) always prints the ascending bit string; use
//! [`Gf2Poly::human`] for the `1+x^2+x^5` form.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Poly {
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_u64(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_u64(2)
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(k, true);
        p
    }

    /// Builds a polynomial from a coefficient mask, bit `i` = coefficient of `x^i`.
    pub fn from_u64(mask: u64) -> Self {
        let mut p = Self { words: vec![mask] };
        p.normalize();
        p
    }

    /// Returns the coefficient mask when the degree is below 64.
    pub fn to_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Builds a polynomial from ascending coefficients.
    pub fn from_coeffs<I: IntoIterator<Item = bool>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            if c {
                p.set_coeff(i, true);
            }
        }
        p
    }

    /// Builds a polynomial as the sum of `x^e` over `exponents`; repeats cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip_coeff(e);
        }
        p
    }

    /// Degree of the polynomial; the zero polynomial has degree -1.
    pub fn degree(&self) -> isize {
        match self.words.last() {
            None => -1,
            Some(&top) => {
                ((self.words.len() - 1) * 64 + (63 - top.leading_zeros() as usize)) as isize
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        if value != self.coeff(i) {
            self.flip_coeff(i);
        }
    }

    fn flip_coeff(&mut self, i: usize) {
        let w = i / 64;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1u64 << (i % 64);
        self.normalize();
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Ascending coefficient vector of length `degree + 1` (empty for zero).
    pub fn coeffs(&self) -> Vec<bool> {
        let n = (self.degree() + 1) as usize;
        (0..n).map(|i| self.coeff(i)).collect()
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// Multiplies by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + ws + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Exact product over GF(2).
    pub fn mul(&self, other: &Self) -> Self {
        let (small, large) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero();
        for e in small.exponents() {
            acc += &large.shl(e);
        }
        acc
    }

    /// `self^k` by square-and-multiply.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient and remainder of division by `m`.
    pub fn div_rem(&self, m: &Self) -> Result<(Self, Self)> {
        if m.is_zero() {
            return Err(Error::ZeroModulus);
        }
        let dm = m.degree();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while rem.degree() >= dm {
            let shift = (rem.degree() - dm) as usize;
            quot.flip_coeff(shift);
            rem += &m.shl(shift);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, m: &Self) -> Result<Self> {
        self.div_rem(m).map(|(_, r)| r)
    }

    /// `(self * other) mod m`.
    pub fn mul_mod(&self, other: &Self, m: &Self) -> Result<Self> {
        self.mul(other).rem(m)
    }

    /// `self^k mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut k: u64, m: &Self) -> Result<Self> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one().rem(m)?;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_mod(&base, m)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_mod(&base, m)?;
            }
        }
        Ok(acc)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }

    /// `x^width * self(1/x)`, i.e. the coefficient list of length
    /// `width + 1` read backwards. Requires `width >= degree`.
    pub fn reciprocal(&self, width: usize) -> Self {
        debug_assert!(self.degree() <= width as isize);
        Self::from_coeffs((0..=width).map(|i| self.coeff(width - i)))
    }

    /// Irreducibility via the gcd criterion on `x^(2^k) mod p`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let r = self.degree();
        if r < 1 {
            return Err(Error::ConstantPolynomial);
        }
        let r = r as usize;
        if r == 1 {
            return Ok(true);
        }
        let x = Self::x();
        // frob[k] = x^(2^k) mod p
        let mut frob = Vec::with_capacity(r + 1);
        frob.push(x.clone());
        for k in 1..=r {
            let prev: &Self = &frob[k - 1];
            frob.push(prev.mul_mod(prev, self)?);
        }
        if frob[r] != x {
            return Ok(false);
        }
        for q in prime_factors(r as u64) {
            let h = &frob[r / q as usize] + &x;
            if !self.gcd(&h).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Irreducibility by trial division with every polynomial of degree
    /// `1..=deg/2`. Exponential in the degree; intended as a cross-check.
    pub fn is_irreducible_by_trial_division(&self) -> Result<bool> {
        let r = self.degree();
        if r < 1 {
            return Err(Error::ConstantPolynomial);
        }
        if r > 40 {
            return Err(Error::InvalidParameter(format!(
                "trial division is limited to degree 40, got {r}"
            )));
        }
        let half = r as u32 / 2;
        for d in 1..=half {
            for low in 0..(1u64 << d) {
                let divisor = Self::from_u64((1u64 << d) | low);
                if self.rem(&divisor)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff the polynomial is irreducible and `x` has multiplicative
    /// order exactly `2^r - 1` modulo it. Supports degree up to 48.
    pub fn is_primitive(&self) -> Result<bool> {
        let r = self.degree();
        if r < 1 {
            return Err(Error::ConstantPolynomial);
        }
        if r > 48 {
            return Err(Error::InvalidParameter(format!(
                "primitivity test is limited to degree 48, got {r}"
            )));
        }
        if !self.is_irreducible()? {
            return Ok(false);
        }
        let order = (1u64 << r) - 1;
        let x = Self::x();
        if !x.pow_mod(order, self)?.is_one() {
            return Ok(false);
        }
        for q in prime_factors(order) {
            if x.pow_mod(order / q, self)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Human-readable ascending form, e.g. `1+x^2+x^5`.
    pub fn human(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Distinct prime factors of `n`, ascending, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl AddAssign<&Gf2Poly> for Gf2Poly {
    fn add_assign(&mut self, rhs: &Gf2Poly) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl Add<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;

    fn add(self, rhs: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Gf2Poly {
    type Output = Gf2Poly;

    fn add(mut self, rhs: Gf2Poly) -> Gf2Poly {
        self += &rhs;
        self
    }
}

impl Mul<&Gf2Poly> for &Gf2Poly {
    type Output = Gf2Poly;

    fn mul(self, rhs: &Gf2Poly) -> Gf2Poly {
        Gf2Poly::mul(self, rhs)
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for c in self.coeffs() {
            f.write_str(if c { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({})", self.human())
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParsePoly {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let s_trim = s.trim();
        if s_trim.is_empty() {
            return Err(err("empty input"));
        }
        if s_trim.chars().all(|c| c == '0' || c == '1') {
            return Ok(Self::from_coeffs(s_trim.chars().map(|c| c == '1')));
        }
        let mut p = Self::zero();
        for term in s_trim.split('+') {
            let term = term.trim();
            let exp = match term {
                "" => return Err(err("empty term")),
                "1" => 0,
                "x" => 1,
                t => {
                    let k = t
                        .strip_prefix("x^")
                        .ok_or_else(|| err(&format!("bad term {t:?}")))?;
                    k.parse::<usize>()
                        .map_err(|_| err(&format!("bad exponent {k:?}")))?
                }
            };
            p.flip_coeff(exp);
        }
        Ok(p)
    }
}

impl Serialize for Gf2Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Gf2Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        let a = p("1+x^3+x^70");
        assert!((&a + &a).is_zero());
        assert_eq!(&a + &Gf2Poly::zero(), a);
        assert_eq!(&p("1+x") + &p("x+x^2"), p("1+x^2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("1+x").mul(&p("1+x")), p("1+x^2"));
        let q = p("1+x^2+x^5");
        assert_eq!(q.mul(&Gf2Poly::one()), q);
        assert_eq!(q.mul(&q), p("1+x^4+x^10"));
        assert!(q.mul(&Gf2Poly::zero()).is_zero());
    }

    #[test]
    fn rem_examples() {
        let m = p("1+x+x^4");
        // x^4 = x+1, x^5 = x^2+x, x^6 = x^3+x^2, x^7 = x^4+x^3 = x^3+x+1
        assert_eq!(Gf2Poly::monomial(7).rem(&m).unwrap(), p("1+x+x^3"));
        assert_eq!(Gf2Poly::monomial(3).rem(&m).unwrap(), p("x^3"));
        assert!(Gf2Poly::zero().rem(&m).unwrap().is_zero());
        assert_eq!(m.rem(&Gf2Poly::zero()), Err(Error::ZeroModulus));
    }

    #[test]
    fn pow_mod_examples() {
        let m = p("1+x+x^4");
        let x = Gf2Poly::x();
        assert!(x.pow_mod(15, &m).unwrap().is_one());
        assert_eq!(x.pow_mod(1, &m).unwrap(), x);
        assert_eq!(x.pow_mod(7, &m).unwrap(), p("1+x+x^3"));
        assert!(x.pow_mod(0, &m).unwrap().is_one());
        assert_eq!(x.pow_mod(3, &Gf2Poly::zero()), Err(Error::ZeroModulus));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(p("1+x+x^4").is_irreducible().unwrap());
        assert!(!p("x^2").is_irreducible().unwrap());
        assert!(p("1+x+x^2+x^3+x^4").is_irreducible().unwrap());
        assert!(p("1+x+x^4").is_irreducible_by_trial_division().unwrap());
        assert!(!p("1+x^2").is_irreducible().unwrap());
        assert_eq!(
            Gf2Poly::one().is_irreducible(),
            Err(Error::ConstantPolynomial)
        );
        assert_eq!(
            Gf2Poly::zero().is_primitive(),
            Err(Error::ConstantPolynomial)
        );
    }

    #[test]
    fn primitivity_examples() {
        assert!(p("1+x+x^4").is_primitive().unwrap());
        // x has order 5 modulo 1+x+x^2+x^3+x^4
        assert!(!p("1+x+x^2+x^3+x^4").is_primitive().unwrap());
        assert!(p("1+x^2+x^5").is_primitive().unwrap());
        assert!(p("1+x").is_primitive().unwrap());
        assert!(!p("x").is_primitive().unwrap());
    }

    #[test]
    fn primitive_counts_match_totient() {
        // number of primitive polynomials of degree r is phi(2^r - 1) / r
        let expected = [(2, 1), (3, 2), (4, 2), (5, 6), (6, 6), (7, 18), (8, 16)];
        for (r, count) in expected {
            let found = (0..(1u64 << r))
                .map(|low| Gf2Poly::from_u64((1 << r) | low))
                .filter(|q| q.is_primitive().unwrap())
                .count();
            assert_eq!(found, count, "degree {r}");
        }
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("101001"), p("1+x^2+x^5"));
        assert_eq!(p("x+x"), Gf2Poly::zero());
        assert_eq!(p(" 1 + x^1 "), p("11"));
        assert_eq!(p("0"), Gf2Poly::zero());
        assert_eq!(p("1+x^2+x^5").to_string(), "101001");
        assert_eq!(p("1011").human(), "1+x^2+x^3");
        assert!("1+y".parse::<Gf2Poly>().is_err());
        assert!("1++x".parse::<Gf2Poly>().is_err());
        assert!("x^a".parse::<Gf2Poly>().is_err());
        assert!("".parse::<Gf2Poly>().is_err());
    }

    #[test]
    fn degree_conventions() {
        assert_eq!(Gf2Poly::zero().degree(), -1);
        assert_eq!(Gf2Poly::one().degree(), 0);
        assert_eq!(Gf2Poly::monomial(64).degree(), 64);
        assert_eq!(Gf2Poly::monomial(200).shl(3).degree(), 203);
    }

    #[test]
    fn prime_factor_lists() {
        assert_eq!(prime_factors(15), vec![3, 5]);
        assert_eq!(prime_factors(31), vec![31]);
        assert_eq!(prime_factors(255), vec![3, 5, 17]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }

    fn arb_poly(max_degree: usize) -> impl Strategy<Value = Gf2Poly> {
        proptest::collection::vec(any::<bool>(), 0..=max_degree + 1).prop_map(Gf2Poly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(64), b in arb_poly(64), c in arb_poly(64)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(a.mul(&b).degree(), a.degree() + b.degree());
            }
        }

        #[test]
        fn frobenius_squaring(a in arb_poly(100)) {
            let sq = a.mul(&a);
            for i in 0..=(2 * a.degree().max(0) as usize + 1) {
                let expected = i % 2 == 0 && a.coeff(i / 2);
                prop_assert_eq!(sq.coeff(i), expected);
            }
        }

        #[test]
        fn division_law(a in arb_poly(128), m in arb_poly(40)) {
            prop_assume!(!m.is_zero());
            let (q, r) = a.div_rem(&m).unwrap();
            prop_assert!(r.degree() < m.degree());
            prop_assert_eq!(&q.mul(&m) + &r, a);
        }

        #[test]
        fn gcd_test_agrees_with_trial_division(mask in 2u64..(1 << 12)) {
            let q = Gf2Poly::from_u64(mask);
            prop_assert_eq!(q.is_irreducible().unwrap(), q.is_irreducible_by_trial_division().unwrap());
            if q.is_primitive().unwrap() {
                prop_assert!(q.is_irreducible().unwrap());
            }
        }

        #[test]
        fn canonical_text_round_trip(a in arb_poly(80)) {
            prop_assert_eq!(a.to_string().parse::<Gf2Poly>().unwrap(), a.clone());
            prop_assert_eq!(a.human().parse::<Gf2Poly>().unwrap(), a);
        }
    }

    #[test]
    fn primitive_order_property() {
        for r in 2..=16u32 {
            let order = (1u64 << r) - 1;
            let primes = prime_factors(order);
            let mut seen = 0;
            for low in (1..(1u64 << r)).step_by(2) {
                let q = Gf2Poly::from_u64((1 << r) | low);
                if !q.is_primitive().unwrap() {
                    continue;
                }
                let x = Gf2Poly::x();
                assert!(x.pow_mod(order, &q).unwrap().is_one());
                for &pr in &primes {
                    assert!(!x.pow_mod(order / pr, &q).unwrap().is_one());
                }
                seen += 1;
                if seen == 3 {
                    break;
                }
            }
            assert!(seen > 0);
        }
    }
}
