//! Linear cellular-automaton models of the shrinking generator.
//!
//! A shrinking generator is nonlinear, yet its keystream satisfies a linear
//! recurrence whose characteristic polynomial is a power of a single
//! irreducible polynomial. This crate builds that model explicitly as a
//! one-dimensional 90/150 cellular automaton and checks bit-for-bit that it
//! reproduces the generator.
//!
//! ```
//! use shrinkca::{linearize_shrinking_generator, Gf2Poly};
//!
//! let p2: Gf2Poly = "1+x+x^2+x^4+x^5".parse().unwrap();
//! let model = linearize_shrinking_generator(3, &p2).unwrap();
//! assert_eq!(model.base_poly.human(), "1+x^2+x^5");
//! assert_eq!(model.ca_pair.first.to_string(), "01110011111111001110");
//! ```
//!
//! Modules, bottom-up:
//!
//! * [`gf2poly`]: polynomials over GF(2);
//! * [`gf2field`]: GF(2^r), cyclotomic cosets, minimal polynomials;
//! * [`generators`]: LFSR and shrinking-generator simulation;
//! * [`automata`]: 90/150 CA stepping, characteristic polynomials, state fitting;
//! * [`linearizer`]: CA synthesis and doubling;
//! * [`analysis`]: Berlekamp-Massey, annihilation checks, the attack report;
//! * [`cli`]: the `shrinkca` command line.

pub mod analysis;
pub mod automata;
pub mod bits;
pub mod cli;
pub mod error;
pub mod generators;
pub mod gf2field;
pub mod gf2poly;
pub mod linearizer;

pub use analysis::{
    berlekamp_massey, check_annihilation, lc_bounds, verify_linearization, AttackReport, BmResult,
};
pub use automata::{
    ca_char_poly, ca_run, ca_step, fit_initial_state, transition_matrix, CaState, RuleVector,
};
pub use bits::BitSequence;
pub use error::{Error, Result};
pub use generators::{decimate_by_stride, sequence_period, Lfsr, ShrinkingGenerator};
pub use gf2field::{cyclotomic_coset, minimal_polynomial_of_power, FieldContext, FieldElement};
pub use gf2poly::Gf2Poly;
pub use linearizer::{
    concat_double, linearize_shrinking_generator, synthesize_ca_pair, CaPair, LinearizationResult,
};
