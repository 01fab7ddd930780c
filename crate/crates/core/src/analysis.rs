//! Linear complexity, operator annihilation, and end-to-end verification
//! that a linear CA reproduces a shrinking generator's output.

use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::automata::{cell_output, fit_initial_state, FittedState};
use crate::bits::BitSequence;
use crate::error::{Error, Result};
use crate::generators::{sequence_period, ShrinkingGenerator};
use crate::gf2poly::Gf2Poly;
use crate::linearizer::{linearize_shrinking_generator, LinearizationResult};

/// Shortest linear recurrence generating a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BmResult {
    /// Minimal characteristic polynomial in the same convention as
    /// [`Lfsr`](crate::generators::Lfsr): `connection_poly(E)` annihilates
    /// the window. Equal to `1` for an all-zero window.
    pub connection_poly: Gf2Poly,
    pub linear_complexity: usize,
}

/// Berlekamp-Massey over GF(2).
///
/// The loop tracks the feedback polynomial `C(x) = 1 + c_1 x + ... + c_L x^L`
/// and converts it to characteristic form `x^L C(1/x)` at the end.
pub fn berlekamp_massey(s: &BitSequence) -> BmResult {
    let bits = s.as_slice();
    let mut c = Gf2Poly::one();
    let mut b = Gf2Poly::one();
    let mut lc = 0usize;
    let mut shift = 1usize;

    for n in 0..bits.len() {
        let discrepancy = c
            .exponents()
            .take_while(|&i| i <= n)
            .fold(false, |acc, i| acc ^ bits[n - i]);
        if !discrepancy {
            shift += 1;
        } else if 2 * lc <= n {
            let prev = c.clone();
            c += &b.shl(shift);
            lc = n + 1 - lc;
            b = prev;
            shift = 1;
        } else {
            c += &b.shl(shift);
            shift += 1;
        }
    }

    BmResult {
        connection_poly: c.reciprocal(lc),
        linear_complexity: lc,
    }
}

/// True iff `q(E)^p` maps the window to all zeros, checked at every index
/// where the operator fits.
pub fn check_annihilation(q: &Gf2Poly, p: u64, s: &BitSequence) -> Result<bool> {
    if q.is_zero() {
        return Err(Error::InvalidParameter(
            "operator polynomial is zero".into(),
        ));
    }
    let op = q.pow(p);
    let d = op.degree() as usize;
    if s.len() < d + 1 {
        return Err(Error::WindowTooShort {
            len: s.len(),
            needed: d + 1,
        });
    }
    let taps: Vec<usize> = op.exponents().collect();
    let bits = s.as_slice();
    Ok((0..s.len() - d).all(|n| !taps.iter().fold(false, |acc, &k| acc ^ bits[n + k])))
}

/// `Some(k)` when `poly == base^k`.
pub fn multiplicity_of(poly: &Gf2Poly, base: &Gf2Poly) -> Option<u64> {
    if base.degree() < 1 || poly.is_zero() {
        return None;
    }
    let mut cur = poly.clone();
    let mut k = 0;
    while !cur.is_one() {
        let (q, r) = cur.div_rem(base).ok()?;
        if !r.is_zero() {
            return None;
        }
        cur = q;
        k += 1;
    }
    Some(k)
}

/// The open-closed interval `(L2 * 2^(L1-2), L2 * 2^(L1-1)]` for the linear
/// complexity of a shrunken sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LcBounds {
    pub lower_exclusive: u64,
    pub upper_inclusive: u64,
}

impl LcBounds {
    pub fn contains(&self, lc: u64) -> bool {
        self.lower_exclusive < lc && lc <= self.upper_inclusive
    }
}

impl fmt::Display for LcBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}]", self.lower_exclusive, self.upper_inclusive)
    }
}

pub fn lc_bounds(l1: u32, l2: u32) -> Result<LcBounds> {
    if l1 < 2 {
        return Err(Error::BoundsUndefined(l1));
    }
    if l2 < 1 || l1 > 40 {
        return Err(Error::InvalidParameter(format!(
            "register lengths out of range: L1={l1}, L2={l2}"
        )));
    }
    Ok(LcBounds {
        lower_exclusive: (l2 as u64) << (l1 - 2),
        upper_inclusive: (l2 as u64) << (l1 - 1),
    })
}

/// Whether `p_hat` lies in `(2^(L1-2), 2^(L1-1)]`; for `L1 = 1` only 1 fits.
pub fn multiplicity_in_range(l1: u32, p_hat: u64) -> bool {
    let upper = 1u64 << (l1 - 1);
    // 2 * p_hat > 2^(L1-1) avoids a fractional lower bound at L1 = 1
    2 * p_hat > upper && p_hat <= upper
}

/// A fit of one synthesized CA to the shrunken window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaFit {
    /// `"a"` or `"b"`, the slot in the linearization pair.
    pub ca: &'static str,
    pub cell: usize,
    pub state: crate::automata::CaState,
}

/// Full record of one linearization attack.
#[derive(Clone, Debug, Serialize)]
pub struct AttackReport {
    pub control_poly: Gf2Poly,
    pub control_seed: BitSequence,
    pub data_poly: Gf2Poly,
    pub data_seed: BitSequence,
    pub linearization: LinearizationResult,
    /// `(2^L2 - 1) * 2^(L1 - 1)`.
    pub expected_period: u64,
    pub window_len: usize,
    pub observed_period: usize,
    pub measured_lc: usize,
    pub connection_poly: Gf2Poly,
    /// `None` when `L1 < 2`.
    pub lc_bounds: Option<LcBounds>,
    pub lc_within_bounds: Option<bool>,
    /// `p_hat` with `connection_poly == base_poly^p_hat`, if such exists.
    pub measured_multiplicity: Option<u64>,
    pub multiplicity_within_bounds: bool,
    pub fit_a: Option<CaFit>,
    pub fit_b: Option<CaFit>,
    pub matched_ca: Option<&'static str>,
    pub matched_cell: Option<usize>,
    pub fitted_state: Option<crate::automata::CaState>,
    /// Period of the matched cell's output over the window (0 if unmatched).
    pub verified_period: usize,
    pub verdict: bool,
}

impl AttackReport {
    pub fn render_text(&self) -> String {
        let lin = &self.linearization;
        let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".to_string());
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<26}{v}");
        };
        line(
            "control register",
            format!("{} seed {}", self.control_poly.human(), self.control_seed),
        );
        line(
            "data register",
            format!("{} seed {}", self.data_poly.human(), self.data_seed),
        );
        line(
            "base polynomial P(x)",
            format!("{} ({})", lin.base_poly.human(), lin.base_poly),
        );
        line("coset N", lin.coset_n.to_string());
        line("CA length L", lin.length.to_string());
        line("CA multiplicity p", lin.multiplicity.to_string());
        line("rules a", lin.ca_pair.first.to_string());
        line("rules b", lin.ca_pair.second.to_string());
        line("expected period", self.expected_period.to_string());
        line("window length", self.window_len.to_string());
        line("observed period", self.observed_period.to_string());
        line("linear complexity", self.measured_lc.to_string());
        line("LC bounds", opt(self.lc_bounds.map(|b| b.to_string())));
        line(
            "LC within bounds",
            opt(self.lc_within_bounds.map(|b| b.to_string())),
        );
        line("minimal polynomial", self.connection_poly.to_string());
        line(
            "measured multiplicity",
            opt(self.measured_multiplicity.map(|m| m.to_string())),
        );
        line(
            "multiplicity in range",
            self.multiplicity_within_bounds.to_string(),
        );
        line("matched CA", opt(self.matched_ca.map(str::to_string)));
        line(
            "matched cell",
            opt(self.matched_cell.map(|c| c.to_string())),
        );
        line(
            "fitted state",
            opt(self.fitted_state.as_ref().map(|s| s.to_string())),
        );
        line("verified period", self.verified_period.to_string());
        line(
            "verdict",
            if self.verdict {
                "LINEARIZED"
            } else {
                "NOT REPRODUCED"
            }
            .to_string(),
        );
        out
    }
}

/// Linearizes the generator, measures its output, and checks that one of
/// the synthesized CA reproduces the shrunken sequence over two periods.
///
/// Registers must have primitive polynomials and nonzero seeds. A `false`
/// verdict is returned as data, not as an error.
pub fn verify_linearization(gen: &ShrinkingGenerator) -> Result<AttackReport> {
    let (control, data) = (gen.control(), gen.data());
    for reg in [control, data] {
        if !reg.charpoly().is_primitive()? {
            return Err(Error::NotPrimitive(reg.charpoly().human()));
        }
    }
    if control.has_zero_seed() {
        return Err(Error::ZeroControlSeed);
    }
    if data.has_zero_seed() {
        return Err(Error::InvalidParameter("data register seed is zero".into()));
    }
    let (l1, l2) = (control.degree(), data.degree());
    if l1 > 16 || l2 > 24 {
        return Err(Error::InvalidParameter(format!(
            "register lengths L1={l1}, L2={l2} are too large to simulate"
        )));
    }

    let linearization = linearize_shrinking_generator(l1, data.charpoly())?;
    let expected_period = gen.expected_period();
    let window_len = (2 * expected_period as usize).max(2 * linearization.length);
    let window = gen.sequence(window_len)?;
    let observed_period = sequence_period(&window).expect("window is non-empty");

    let bm = berlekamp_massey(&window);
    let lc_bounds = lc_bounds(l1 as u32, l2 as u32).ok();
    let lc_within_bounds = lc_bounds.map(|b| b.contains(bm.linear_complexity as u64));
    let measured_multiplicity = multiplicity_of(&bm.connection_poly, &linearization.base_poly);
    let multiplicity_within_bounds =
        measured_multiplicity.is_some_and(|m| multiplicity_in_range(l1 as u32, m));

    let fit = |ca: &'static str, rules| -> Result<Option<CaFit>> {
        Ok(
            fit_initial_state(rules, &window)?.map(|FittedState { cell, state }| CaFit {
                ca,
                cell,
                state,
            }),
        )
    };
    let fit_a = fit("a", &linearization.ca_pair.first)?;
    let fit_b = fit("b", &linearization.ca_pair.second)?;

    let matched = fit_a.as_ref().or(fit_b.as_ref()).cloned();
    let verified_period = match &matched {
        Some(m) => {
            let rules = if m.ca == "a" {
                &linearization.ca_pair.first
            } else {
                &linearization.ca_pair.second
            };
            let replay = cell_output(rules, &m.state, m.cell, window_len)?;
            if replay == window {
                sequence_period(&replay).unwrap_or(0)
            } else {
                0
            }
        }
        None => 0,
    };
    let verdict = verified_period > 0 && window_len as u64 >= expected_period;

    Ok(AttackReport {
        control_poly: control.charpoly().clone(),
        control_seed: control.seed().clone(),
        data_poly: data.charpoly().clone(),
        data_seed: data.seed().clone(),
        linearization,
        expected_period,
        window_len,
        observed_period,
        measured_lc: bm.linear_complexity,
        connection_poly: bm.connection_poly,
        lc_bounds,
        lc_within_bounds,
        measured_multiplicity,
        multiplicity_within_bounds,
        matched_ca: matched.as_ref().map(|m| m.ca),
        matched_cell: matched.as_ref().map(|m| m.cell),
        fitted_state: matched.map(|m| m.state),
        fit_a,
        fit_b,
        verified_period,
        verdict,
    })
}
