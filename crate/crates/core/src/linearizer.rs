//! Linear CA models of the shrinking generator.
//!
//! The construction has three steps:
//!
//! 1. `P(x)` is the minimal polynomial of `alpha^N`, `N = 2^L1 - 1`, where
//!    `alpha` is a root of the data register's polynomial `P2(x)`.
//! 2. The two 90/150 rule vectors with characteristic polynomial `P(x)` are
//!    synthesized.
//! 3. Each is doubled `L1 - 1` times with [`concat_double`], which squares
//!    the characteristic polynomial, giving two CA of length
//!    `L2 * 2^(L1 - 1)` with characteristic polynomial `P(x)^(2^(L1 - 1))`.
//!
//! Only the length of the control register enters the construction, so
//! every generator sharing `L1` and `P2(x)` gets the same pair of CA.

use serde::Serialize;

use crate::automata::{ca_char_poly_u64, RuleVector};
use crate::error::{Error, Result};
use crate::generators::gcd;
use crate::gf2field::minimal_polynomial_of_power;
use crate::gf2poly::Gf2Poly;

/// Largest degree accepted by the exhaustive synthesizer.
pub const MAX_SYNTHESIS_DEGREE: usize = 26;

/// Largest control-register length accepted by the linearizer.
pub const MAX_CONTROL_LENGTH: usize = 16;

/// Doubles a CA so that its characteristic polynomial is squared: the last
/// rule is flipped, then the string is followed by its mirror image.
///
/// `(d_1, ..., d_L)` becomes `(d_1, ..., !d_L, !d_L, ..., d_1)`.
pub fn concat_double(rules: &RuleVector) -> RuleVector {
    let mut bits = rules.to_bools();
    let last = bits.len() - 1;
    bits[last] = !bits[last];
    let mirror: Vec<bool> = bits.iter().rev().copied().collect();
    bits.extend(mirror);
    RuleVector::new(&bits).expect("non-empty")
}

/// The two 90/150 CA realizing an irreducible polynomial, in lexicographic
/// order. For degree 1 both slots hold the same single-cell CA.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaPair {
    pub first: RuleVector,
    pub second: RuleVector,
}

impl CaPair {
    pub fn is_degenerate(&self) -> bool {
        self.first == self.second
    }

    pub fn iter(&self) -> impl Iterator<Item = &RuleVector> {
        [&self.first, &self.second].into_iter()
    }

    fn map(&self, f: impl Fn(&RuleVector) -> RuleVector) -> CaPair {
        CaPair {
            first: f(&self.first),
            second: f(&self.second),
        }
    }
}

/// Every rule vector of length `deg(p)` whose CA has characteristic
/// polynomial `p`, found by exhaustive search.
pub fn all_realizations(p: &Gf2Poly) -> Result<Vec<RuleVector>> {
    let r = p.degree();
    if r < 1 {
        return Err(Error::ConstantPolynomial);
    }
    let r = r as usize;
    if r > MAX_SYNTHESIS_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "exhaustive synthesis is limited to degree {MAX_SYNTHESIS_DEGREE}, got {r}"
        )));
    }
    let target = p.to_u64().expect("degree checked");
    let mut found = Vec::new();
    let mut bits = vec![false; r];
    for mask in 0u64..(1 << r) {
        for (i, b) in bits.iter_mut().enumerate() {
            *b = (mask >> i) & 1 == 1;
        }
        if ca_char_poly_u64(&bits) == Some(target) {
            found.push(RuleVector::new(&bits)?);
        }
    }
    found.sort();
    Ok(found)
}

/// The pair of 90/150 CA whose characteristic polynomial is the
/// irreducible `p`.
///
/// The search reports what it finds: anything other than two mutually
/// reversed vectors (or one palindrome) is an error listing the matches.
pub fn synthesize_ca_pair(p: &Gf2Poly) -> Result<CaPair> {
    if !p.is_irreducible()? {
        return Err(Error::Reducible(p.human()));
    }
    let found = all_realizations(p)?;
    let unexpected = || Error::UnexpectedSynthesisCount {
        poly: p.human(),
        count: found.len(),
        found: found.iter().map(ToString::to_string).collect(),
    };
    match found.as_slice() {
        [only] if *only == only.reversed() => Ok(CaPair {
            first: only.clone(),
            second: only.clone(),
        }),
        [a, b] if *b == a.reversed() => Ok(CaPair {
            first: a.clone(),
            second: b.clone(),
        }),
        _ => Err(unexpected()),
    }
}

/// Output of [`linearize_shrinking_generator`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationResult {
    /// Synthesized pair, length `L2`.
    pub base_pair: CaPair,
    /// Final CA of length `L2 * 2^(L1 - 1)`; slot order follows `base_pair`.
    pub ca_pair: CaPair,
    pub base_poly: Gf2Poly,
    /// `2^(L1 - 1)`, the exponent of `base_poly` realized by each CA.
    pub multiplicity: u64,
    pub length: usize,
    /// `2^L1 - 1`.
    pub coset_n: u64,
    pub control_length: usize,
    pub data_length: usize,
}

impl LinearizationResult {
    /// `base_poly^multiplicity`, the characteristic polynomial of both CA.
    pub fn ca_poly(&self) -> Gf2Poly {
        self.base_poly.pow(self.multiplicity)
    }

    pub fn is_degenerate(&self) -> bool {
        self.base_pair.is_degenerate()
    }
}

#[derive(Serialize)]
struct LinearizationJson<'a> {
    rules_a: &'a RuleVector,
    rules_b: &'a RuleVector,
    base_poly: &'a Gf2Poly,
    p: u64,
    #[serde(rename = "L")]
    length: usize,
    #[serde(rename = "N")]
    coset_n: u64,
    #[serde(rename = "L1")]
    control_length: usize,
    #[serde(rename = "L2")]
    data_length: usize,
    base_rules_a: &'a RuleVector,
    base_rules_b: &'a RuleVector,
    degenerate: bool,
}

impl Serialize for LinearizationResult {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        LinearizationJson {
            rules_a: &self.ca_pair.first,
            rules_b: &self.ca_pair.second,
            base_poly: &self.base_poly,
            p: self.multiplicity,
            length: self.length,
            coset_n: self.coset_n,
            control_length: self.control_length,
            data_length: self.data_length,
            base_rules_a: &self.base_pair.first,
            base_rules_b: &self.base_pair.second,
            degenerate: self.is_degenerate(),
        }
        .serialize(serializer)
    }
}

/// Builds the pair of linear CA that model every shrinking generator with
/// control length `l1` and data polynomial `p2`.
///
/// `p2` must be primitive and its degree coprime to `l1`. With `l1 = 1`
/// no doubling is applied.
pub fn linearize_shrinking_generator(l1: usize, p2: &Gf2Poly) -> Result<LinearizationResult> {
    if !(1..=MAX_CONTROL_LENGTH).contains(&l1) {
        return Err(Error::InvalidParameter(format!(
            "control length must be in 1..={MAX_CONTROL_LENGTH}, got {l1}"
        )));
    }
    if !p2.is_primitive()? {
        return Err(Error::NotPrimitive(p2.human()));
    }
    let l2 = p2.degree() as usize;
    if gcd(l1, l2) != 1 {
        return Err(Error::NotCoprime { l1, l2 });
    }

    let coset_n = (1u64 << l1) - 1;
    let base_poly = minimal_polynomial_of_power(p2, coset_n)?;
    let base_pair = synthesize_ca_pair(&base_poly)?;

    let mut ca_pair = base_pair.clone();
    for _ in 1..l1 {
        ca_pair = ca_pair.map(concat_double);
    }

    let multiplicity = 1u64 << (l1 - 1);
    let length = base_poly.degree() as usize * multiplicity as usize;
    debug_assert_eq!(ca_pair.first.len(), length);
    Ok(LinearizationResult {
        base_pair,
        ca_pair,
        base_poly,
        multiplicity,
        length,
        coset_n,
        control_length: l1,
        data_length: l2,
    })
}
