//! One-dimensional 90/150 linear cellular automata with null boundaries.
//!
//! Each cell updates from itself and its two neighbours:
//!
//! ```text
//! rule 90:   x_i' = x_(i-1) + x_(i+1)
//! rule 150:  x_i' = x_(i-1) + x_i + x_(i+1)
//! ```
//!
//! Cells outside the array are permanently zero. A CA is described by its
//! rule vector, one bit per cell (0 = rule 90, 1 = rule 150). In text the
//! rule vector is written with cell 1 leftmost, e.g. `0111001110`; indices
//! in this API are 0-based.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bits::{parse_bit_string, BitSequence, PackedBits};
use crate::error::{Error, Result};
use crate::gf2poly::Gf2Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Rule90,
    Rule150,
}

impl Rule {
    pub fn number(self) -> u32 {
        match self {
            Rule::Rule90 => 90,
            Rule::Rule150 => 150,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// The rule assignment of a hybrid 90/150 CA.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RuleVector {
    cells: PackedBits,
}

impl RuleVector {
    /// `true` marks a rule-150 cell. Fails on an empty vector.
    pub fn new(bits: &[bool]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyRuleVector);
        }
        Ok(Self {
            cells: PackedBits::from_bools(bits),
        })
    }

    /// Builds a rule vector from rule numbers, e.g. `[90, 150, 150]`.
    pub fn from_rule_numbers(rules: &[u32]) -> Result<Self> {
        let bits = rules
            .iter()
            .map(|&r| match r {
                90 => Ok(false),
                150 => Ok(true),
                other => Err(Error::InvalidParameter(format!("unsupported rule {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&bits)
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when cell `i` follows rule 150.
    pub fn get(&self, i: usize) -> bool {
        self.cells.get(i)
    }

    pub fn rule(&self, i: usize) -> Rule {
        if self.get(i) {
            Rule::Rule150
        } else {
            Rule::Rule90
        }
    }

    pub fn rules(&self) -> Vec<Rule> {
        (0..self.len()).map(|i| self.rule(i)).collect()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.cells.to_bools()
    }

    /// Mirror image: cell `i` takes the rule of cell `L - 1 - i`.
    pub fn reversed(&self) -> Self {
        let mut bits = self.to_bools();
        bits.reverse();
        Self {
            cells: PackedBits::from_bools(&bits),
        }
    }

    /// Rule numbers joined by commas, e.g. `90,150,150`.
    pub fn rule_list(&self) -> String {
        self.rules()
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for RuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.cells)
    }
}

impl fmt::Debug for RuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RuleVector({self})")
    }
}

impl FromStr for RuleVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(&parse_bit_string(s)?)
    }
}

impl PartialOrd for RuleVector {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RuleVector {
    /// Lexicographic on the text form.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_bools().cmp(&other.to_bools())
    }
}

impl Serialize for RuleVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The cell contents of a CA at one instant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CaState {
    cells: PackedBits,
}

impl CaState {
    pub fn new(bits: &[bool]) -> Self {
        Self {
            cells: PackedBits::from_bools(bits),
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self {
            cells: PackedBits::zeros(len),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.len() == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.cells.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cells.is_zero()
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.cells.to_bools()
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut cells = self.cells.clone();
        cells.xor_assign(&other.cells);
        Self { cells }
    }
}

impl From<PackedBits> for CaState {
    fn from(cells: PackedBits) -> Self {
        Self { cells }
    }
}

impl fmt::Display for CaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.cells)
    }
}

impl fmt::Debug for CaState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CaState({self})")
    }
}

impl FromStr for CaState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(&parse_bit_string(s)?))
    }
}

impl Serialize for CaState {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn check_len(rules: &RuleVector, state: &CaState) -> Result<()> {
    if rules.len() != state.len() {
        return Err(Error::LengthMismatch {
            expected: rules.len(),
            actual: state.len(),
        });
    }
    Ok(())
}

fn step_unchecked(rules: &RuleVector, state: &CaState) -> CaState {
    let mut next = state.cells.shift_up();
    next.xor_assign(&state.cells.shift_down());
    next.xor_assign(&state.cells.and(&rules.cells));
    CaState { cells: next }
}

/// One synchronous update of every cell.
pub fn ca_step(rules: &RuleVector, state: &CaState) -> Result<CaState> {
    check_len(rules, state)?;
    Ok(step_unchecked(rules, state))
}

/// States at times `0..=steps`.
pub fn ca_run(rules: &RuleVector, state: &CaState, steps: usize) -> Result<Vec<CaState>> {
    check_len(rules, state)?;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(state.clone());
    for _ in 0..steps {
        let next = step_unchecked(rules, out.last().expect("non-empty"));
        out.push(next);
    }
    Ok(out)
}

/// Contents of cell `cell` at times `0..len`, read down the column.
pub fn cell_output(
    rules: &RuleVector,
    state: &CaState,
    cell: usize,
    len: usize,
) -> Result<BitSequence> {
    check_len(rules, state)?;
    if cell >= rules.len() {
        return Err(Error::InvalidParameter(format!(
            "cell {cell} out of range for {} cells",
            rules.len()
        )));
    }
    let mut s = state.clone();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(s.get(cell));
        s = step_unchecked(rules, &s);
    }
    Ok(BitSequence::new(out))
}

/// Characteristic polynomial of the transition matrix, from the
/// three-term recurrence `P_k = (x + d_k) P_(k-1) + P_(k-2)`, `P_0 = 1`.
pub fn ca_char_poly(rules: &RuleVector) -> Gf2Poly {
    let mut prev = Gf2Poly::zero();
    let mut cur = Gf2Poly::one();
    for i in 0..rules.len() {
        let mut next = cur.shl(1);
        if rules.get(i) {
            next += &cur;
        }
        next += &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Same recurrence on machine words; `None` above degree 63.
pub(crate) fn ca_char_poly_u64(rules: &[bool]) -> Option<u64> {
    if rules.len() > 63 {
        return None;
    }
    let (mut prev, mut cur) = (0u64, 1u64);
    for &d in rules {
        let next = (cur << 1) ^ if d { cur } else { 0 } ^ prev;
        prev = cur;
        cur = next;
    }
    Some(cur)
}

/// The symmetric tridiagonal transition matrix: `M[i][i] = d_i`,
/// `M[i][i+1] = M[i+1][i] = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    rows: Vec<PackedBits>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        self.rows.iter().map(PackedBits::to_bools).collect()
    }

    /// Matrix-vector product over GF(2).
    pub fn apply(&self, state: &CaState) -> Result<CaState> {
        if state.len() != self.size() {
            return Err(Error::LengthMismatch {
                expected: self.size(),
                actual: state.len(),
            });
        }
        let bits: Vec<bool> = self.rows.iter().map(|row| row.dot(&state.cells)).collect();
        Ok(CaState::new(&bits))
    }
}

impl fmt::Debug for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

pub fn transition_matrix(rules: &RuleVector) -> TransitionMatrix {
    let n = rules.len();
    let rows = (0..n)
        .map(|i| {
            let mut row = PackedBits::zeros(n);
            row.set(i, rules.get(i));
            if i > 0 {
                row.set(i - 1, true);
            }
            if i + 1 < n {
                row.set(i + 1, true);
            }
            row
        })
        .collect();
    TransitionMatrix { rows }
}

/// A cell and initial state whose output reproduces a target sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FittedState {
    pub cell: usize,
    pub state: CaState,
}

/// Finds an initial state from which some cell emits `target`.
///
/// For each cell `i` (ascending) the first `2L` equations
/// `(row i of M^n) . x0 = target[n]` are solved by elimination with free
/// variables set to zero, and the candidate is then checked against the
/// whole target. Returns `Ok(None)` when no cell fits.
pub fn fit_initial_state(rules: &RuleVector, target: &BitSequence) -> Result<Option<FittedState>> {
    let n = rules.len();
    if target.len() < 2 * n {
        return Err(Error::WindowTooShort {
            len: target.len(),
            needed: 2 * n,
        });
    }
    for cell in 0..n {
        // row i of M^(t+1) = M * (row i of M^t), since M is symmetric
        let mut row = CaState::from(PackedBits::unit(n, cell));
        let mut equations = Vec::with_capacity(2 * n);
        for t in 0..2 * n {
            equations.push((row.cells.clone(), target.get(t).expect("length checked")));
            row = step_unchecked(rules, &row);
        }
        let Some(solution) = solve_gf2(equations, n) else {
            continue;
        };
        let state = CaState::from(solution);
        if cell_output(rules, &state, cell, target.len())? == *target {
            return Ok(Some(FittedState { cell, state }));
        }
    }
    Ok(None)
}

/// Solves `A x = b` over GF(2) by Gauss-Jordan elimination. Free variables
/// are set to zero; `None` if the system is inconsistent.
pub(crate) fn solve_gf2(mut equations: Vec<(PackedBits, bool)>, vars: usize) -> Option<PackedBits> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..vars {
        let Some(found) = (rank..equations.len()).find(|&r| equations[r].0.get(col)) else {
            continue;
        };
        equations.swap(rank, found);
        let (pivot_row, pivot_rhs) = equations[rank].clone();
        for (r, (row, rhs)) in equations.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
                *rhs ^= pivot_rhs;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if equations[rank..].iter().any(|(_, rhs)| *rhs) {
        return None;
    }
    let mut x = PackedBits::zeros(vars);
    for (r, &col) in pivots.iter().enumerate() {
        x.set(col, equations[r].1);
    }
    Some(x)
}
