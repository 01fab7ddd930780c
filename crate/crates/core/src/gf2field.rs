//! Arithmetic in GF(2^r), cyclotomic cosets and minimal polynomials.
//!
//! Elements are polynomials of degree `< r` reduced modulo an irreducible
//! modulus. Multiplication is multiply-then-reduce; there are no log tables.

use std::fmt;
use std::ops::{Add, Mul};

use crate::bits::BitSequence;
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;

/// The field GF(2^r) defined by an irreducible modulus of degree r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldContext {
    modulus: Gf2Poly,
    degree: usize,
    order: u64,
}

impl FieldContext {
    /// Fails if the modulus is reducible or its degree is outside `1..=63`.
    pub fn new(modulus: Gf2Poly) -> Result<Self> {
        let degree = modulus.degree();
        if !(1..=63).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        if !modulus.is_irreducible()? {
            return Err(Error::Reducible(modulus.human()));
        }
        Ok(Self {
            degree: degree as usize,
            order: (1u64 << degree) - 1,
            modulus,
        })
    }

    pub fn modulus(&self) -> &Gf2Poly {
        &self.modulus
    }

    /// Extension degree r.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order of the multiplicative group, `2^r - 1`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn element(&self, poly: &Gf2Poly) -> FieldElement<'_> {
        FieldElement {
            rep: poly.rem(&self.modulus).expect("modulus is nonzero"),
            ctx: self,
        }
    }

    pub fn zero(&self) -> FieldElement<'_> {
        self.element(&Gf2Poly::zero())
    }

    pub fn one(&self) -> FieldElement<'_> {
        self.element(&Gf2Poly::one())
    }

    /// The class of `x`, a root of the modulus.
    pub fn alpha(&self) -> FieldElement<'_> {
        self.element(&Gf2Poly::x())
    }
}

/// An element of a [`FieldContext`]. Mixing elements of different fields
/// in one operation panics.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement<'a> {
    rep: Gf2Poly,
    ctx: &'a FieldContext,
}

impl<'a> FieldElement<'a> {
    pub fn rep(&self) -> &Gf2Poly {
        &self.rep
    }

    pub fn context(&self) -> &'a FieldContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rep.is_one()
    }

    /// `Some(bit)` when the element lies in the prime field GF(2).
    pub fn as_bit(&self) -> Option<bool> {
        match self.rep.degree() {
            -1 => Some(false),
            0 => Some(true),
            _ => None,
        }
    }

    fn check_same_field(&self, other: &Self) {
        assert!(
            std::ptr::eq(self.ctx, other.ctx) || self.ctx.modulus == other.ctx.modulus,
            "field elements from different contexts"
        );
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// `self^(2^j)`.
    pub fn frobenius(&self, j: usize) -> Self {
        (0..j).fold(self.clone(), |acc, _| acc.square())
    }

    /// `self^k`. Exponents of nonzero elements reduce modulo `2^r - 1`.
    pub fn pow(&self, k: u64) -> Self {
        if self.is_zero() {
            return if k == 0 { self.ctx.one() } else { self.clone() };
        }
        let k = k % self.ctx.order;
        FieldElement {
            rep: self
                .rep
                .pow_mod(k, &self.ctx.modulus)
                .expect("modulus is nonzero"),
            ctx: self.ctx,
        }
    }

    /// Absolute trace `sum_{j<r} self^(2^j)`, always 0 or 1.
    pub fn trace(&self) -> bool {
        let mut acc = self.ctx.zero();
        let mut conj = self.clone();
        for _ in 0..self.ctx.degree {
            acc = &acc + &conj;
            conj = conj.square();
        }
        acc.as_bit().expect("trace lies in GF(2)")
    }
}

impl<'a> Add for &FieldElement<'a> {
    type Output = FieldElement<'a>;

    fn add(self, rhs: &FieldElement<'a>) -> FieldElement<'a> {
        self.check_same_field(rhs);
        FieldElement {
            rep: &self.rep + &rhs.rep,
            ctx: self.ctx,
        }
    }
}

impl<'a> Mul for &FieldElement<'a> {
    type Output = FieldElement<'a>;

    fn mul(self, rhs: &FieldElement<'a>) -> FieldElement<'a> {
        self.check_same_field(rhs);
        FieldElement {
            rep: self
                .rep
                .mul_mod(&rhs.rep, &self.ctx.modulus)
                .expect("modulus is nonzero"),
            ctx: self.ctx,
        }
    }
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] mod ({})",
            self.rep.human(),
            self.ctx.modulus.human()
        )
    }
}

/// The orbit `{n * 2^j mod order}` listed from `n` by successive doubling.
///
/// `order` is expected to be `2^r - 1`; `n` is reduced modulo `order`.
pub fn cyclotomic_coset(n: u64, order: u64) -> Vec<u64> {
    assert!(order >= 1, "modulus order must be positive");
    let start = n % order;
    let mut coset = vec![start];
    let mut e = ((start as u128 * 2) % order as u128) as u64;
    while e != start {
        coset.push(e);
        e = ((e as u128 * 2) % order as u128) as u64;
    }
    coset
}

/// Minimal polynomial over GF(2) of `alpha^n`, where `alpha` is a root of
/// the primitive polynomial `p2`: the product of `(x + alpha^e)` over the
/// cyclotomic coset of `n`.
///
/// `n` is reduced modulo `2^deg(p2) - 1`; a multiple of the order yields
/// `x + 1`, the minimal polynomial of 1.
pub fn minimal_polynomial_of_power(p2: &Gf2Poly, n: u64) -> Result<Gf2Poly> {
    if !p2.is_primitive()? {
        return Err(Error::NotPrimitive(p2.human()));
    }
    let ctx = FieldContext::new(p2.clone())?;
    let alpha = ctx.alpha();

    // coefficients over GF(2^r), ascending
    let mut coeffs = vec![ctx.one()];
    for e in cyclotomic_coset(n, ctx.order()) {
        let root = alpha.pow(e);
        let mut next = vec![ctx.zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] + &(&root * c);
        }
        coeffs = next;
    }

    let mut out = Gf2Poly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        match c.as_bit() {
            Some(bit) => out.set_coeff(i, bit),
            None => {
                return Err(Error::Internal(format!(
                    "coefficient {i} of the minimal polynomial is {c:?}, not in GF(2)"
                )))
            }
        }
    }
    Ok(out)
}

/// Parity of the binomial coefficient `C(n, m)` (Lucas): odd iff the bits
/// of `m` are a subset of the bits of `n`.
pub fn binomial_parity(n: u64, m: u64) -> bool {
    m & !n == 0
}

/// Term `n` of the solution of `P(E)^p a = 0` selected by the coefficients
/// `A_0 .. A_{p-1}`:
///
/// ```text
/// a_n = sum_{j<r} sum_{m<p} C(n,m) A_m^(2^j) alpha^(2^j n)
/// ```
///
/// with `alpha` the class of `x` in `ctx` (whose modulus should be the
/// primitive `P`). The conjugate sum lies in GF(2).
pub fn evaluate_solution(
    ctx: &FieldContext,
    multiplicity: usize,
    coeffs: &[FieldElement<'_>],
    n: u64,
) -> Result<bool> {
    if multiplicity == 0 {
        return Err(Error::InvalidParameter("multiplicity must be >= 1".into()));
    }
    if coeffs.len() != multiplicity {
        return Err(Error::CoefficientCount {
            expected: multiplicity,
            actual: coeffs.len(),
        });
    }
    let alpha_n = ctx.alpha().pow(n);
    let mut acc = ctx.zero();
    for j in 0..ctx.degree() {
        let root_power = alpha_n.frobenius(j);
        for (m, a_m) in coeffs.iter().enumerate() {
            if binomial_parity(n, m as u64) {
                acc = &acc + &(&a_m.frobenius(j) * &root_power);
            }
        }
    }
    acc.as_bit().ok_or_else(|| {
        Error::Internal(format!(
            "solution term {n} evaluated to {acc:?}, not in GF(2)"
        ))
    })
}

/// The first `len` terms of [`evaluate_solution`].
pub fn solution_sequence(
    ctx: &FieldContext,
    multiplicity: usize,
    coeffs: &[FieldElement<'_>],
    len: usize,
) -> Result<BitSequence> {
    (0..len as u64)
        .map(|n| evaluate_solution(ctx, multiplicity, coeffs, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Gf2Poly {
        s.parse().unwrap()
    }

    /// Applies `q(E)` and reports whether every output is zero.
    fn annihilates(q: &Gf2Poly, s: &BitSequence) -> bool {
        let taps: Vec<usize> = q.exponents().collect();
        let d = q.degree() as usize;
        (0..s.len() - d).all(|n| taps.iter().filter(|&&k| s.get(n + k).unwrap()).count() % 2 == 0)
    }

    #[test]
    fn coset_examples() {
        assert_eq!(cyclotomic_coset(7, 31), vec![7, 14, 28, 25, 19]);
        assert_eq!(cyclotomic_coset(1, 15), vec![1, 2, 4, 8]);
        assert_eq!(cyclotomic_coset(7, 15), vec![7, 14, 13, 11]);
        assert_eq!(cyclotomic_coset(5, 15), vec![5, 10]);
        assert_eq!(cyclotomic_coset(0, 15), vec![0]);
    }

    #[test]
    fn coset_sizes_divide_degree() {
        for r in 1..=12u32 {
            let order = (1u64 << r) - 1;
            for n in 0..order {
                assert_eq!(r as usize % cyclotomic_coset(n, order).len(), 0);
            }
        }
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(
            minimal_polynomial_of_power(&p("1+x+x^2+x^4+x^5"), 7).unwrap(),
            p("1+x^2+x^5")
        );
        let p2 = p("1+x+x^4");
        assert_eq!(minimal_polynomial_of_power(&p2, 1).unwrap(), p2);
        // alpha^7 is the inverse of alpha^8, a conjugate of alpha, so its
        // minimal polynomial is the reciprocal of p2
        assert_eq!(minimal_polynomial_of_power(&p2, 7).unwrap(), p("1+x^3+x^4"));
        assert_eq!(minimal_polynomial_of_power(&p2, 15).unwrap(), p("1+x"));
        assert_eq!(minimal_polynomial_of_power(&p2, 5).unwrap(), p("1+x+x^2"));
        assert!(matches!(
            minimal_polynomial_of_power(&p("1+x+x^2+x^3+x^4"), 1),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn minimal_polynomials_are_irreducible_with_coset_degree() {
        for p2 in ["1+x+x^4", "1+x^2+x^5", "1+x+x^6", "1+x^3+x^7"] {
            let p2 = p(p2);
            let r = p2.degree() as u32;
            let order = (1u64 << r) - 1;
            for n in 1..order {
                let m = minimal_polynomial_of_power(&p2, n).unwrap();
                assert!(m.is_irreducible().unwrap());
                assert_eq!(m.degree() as usize, cyclotomic_coset(n, order).len());
                assert!(Gf2Poly::x().pow_mod(order, &m).unwrap().is_one());
            }
        }
    }

    #[test]
    fn field_rejects_reducible_modulus() {
        assert!(matches!(
            FieldContext::new(p("1+x^2")),
            Err(Error::Reducible(_))
        ));
        assert!(FieldContext::new(Gf2Poly::one()).is_err());
    }

    #[test]
    #[should_panic(expected = "different contexts")]
    fn mixing_fields_panics() {
        let a = FieldContext::new(p("1+x+x^4")).unwrap();
        let b = FieldContext::new(p("1+x^3+x^4")).unwrap();
        let _ = &a.alpha() + &b.alpha();
    }

    #[test]
    fn binomial_parity_matches_pascal() {
        let mut row = vec![1u64];
        for n in 0..40u64 {
            for (m, &c) in row.iter().enumerate() {
                assert_eq!(binomial_parity(n, m as u64), c % 2 == 1, "C({n},{m})");
            }
            let mut next = vec![1u64; row.len() + 1];
            for m in 1..row.len() {
                next[m] = (row[m - 1] + row[m]) % 2;
            }
            row = next;
        }
    }

    #[test]
    fn single_multiplicity_solution_is_trace_sequence() {
        let q = p("1+x^2+x^5");
        let ctx = FieldContext::new(q.clone()).unwrap();
        let s = solution_sequence(&ctx, 1, &[ctx.one()], 93).unwrap();
        for n in 0..93u64 {
            assert_eq!(s.get(n as usize).unwrap(), ctx.alpha().pow(n).trace());
        }
        assert!(annihilates(&q, &s));
        assert!(s.count_ones() > 0);
    }

    #[test]
    fn zero_coefficients_give_zero_sequence() {
        let ctx = FieldContext::new(p("1+x+x^4")).unwrap();
        let zeros = vec![ctx.zero(); 3];
        let s = solution_sequence(&ctx, 3, &zeros, 40).unwrap();
        assert_eq!(s.count_ones(), 0);
    }

    #[test]
    fn repeated_root_solution_in_gf4() {
        // GF(4): Tr(alpha^k) = 0 iff 3 | k, and a_n = [n odd] Tr(alpha^(n+1))
        let q = p("1+x+x^2");
        let ctx = FieldContext::new(q.clone()).unwrap();
        let s = solution_sequence(&ctx, 2, &[ctx.zero(), ctx.alpha()], 12).unwrap();
        assert_eq!(s.to_string(), "010100010100");
        assert!(annihilates(&q.mul(&q), &s));
        assert!(!annihilates(&q, &s));
    }

    #[test]
    fn solutions_are_additive() {
        let q = p("1+x+x^3");
        let ctx = FieldContext::new(q.clone()).unwrap();
        let a = [ctx.alpha(), ctx.one(), ctx.alpha().pow(5)];
        let b = [ctx.alpha().pow(3), ctx.zero(), ctx.alpha().pow(6)];
        let sum: Vec<_> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let sa = solution_sequence(&ctx, 3, &a, 60).unwrap();
        let sb = solution_sequence(&ctx, 3, &b, 60).unwrap();
        let ss = solution_sequence(&ctx, 3, &sum, 60).unwrap();
        for i in 0..60 {
            assert_eq!(ss.get(i), Some(sa.get(i).unwrap() ^ sb.get(i).unwrap()));
        }
        assert!(annihilates(&q.pow(3), &sa));
        assert!(annihilates(&q.pow(3), &ss));
    }

    #[test]
    fn evaluate_checks_coefficient_count() {
        let ctx = FieldContext::new(p("1+x+x^2")).unwrap();
        assert_eq!(
            evaluate_solution(&ctx, 2, &[ctx.one()], 3),
            Err(Error::CoefficientCount {
                expected: 2,
                actual: 1
            })
        );
    }
}
