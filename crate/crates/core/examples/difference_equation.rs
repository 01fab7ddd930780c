// Builds solutions of the linear difference equation P(E)^p a = 0 from
// their closed form over GF(2^r) and checks which operator powers
// annihilate them.
//
// ```text
// cargo run --example difference_equation
// ```

use std::fmt::Write;

use shrinkca::gf2field::solution_sequence;
use shrinkca::{check_annihilation, FieldContext, Gf2Poly};

pub fn run() -> shrinkca::Result<String> {
    let base: Gf2Poly = "1+x^2+x^5".parse()?;
    let ctx = FieldContext::new(base.clone())?;
    let alpha = ctx.alpha();
    let mut out = String::new();
    writeln!(out, "P(x) = {}, field GF(2^{})", base.human(), ctx.degree()).unwrap();

    let choices = [
        ("A = (1)", vec![ctx.one()]),
        ("A = (0, alpha)", vec![ctx.zero(), alpha.clone()]),
        (
            "A = (alpha^3, 0, 0, alpha)",
            vec![alpha.pow(3), ctx.zero(), ctx.zero(), alpha.clone()],
        ),
    ];
    for (label, coeffs) in choices {
        let p = coeffs.len();
        let s = solution_sequence(&ctx, p, &coeffs, 200)?;
        let minimal = (1..=4u64)
            .find(|&k| check_annihilation(&base, k, &s).unwrap_or(false))
            .unwrap_or(0);
        writeln!(
            out,
            "{label}: first bits {}, smallest annihilating power {minimal}",
            s.prefix(24)
        )
        .unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() {
    match run() {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
