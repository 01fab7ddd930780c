// Walks through the construction of the linear CA pair for a shrinking
// generator with control length 3 and data polynomial 1+x+x^2+x^4+x^5.
//
// ```text
// cargo run --example linearize [L1] [P2]
// ```

use std::fmt::Write;

use shrinkca::{
    ca_char_poly, concat_double, cyclotomic_coset, linearize_shrinking_generator,
    minimal_polynomial_of_power, synthesize_ca_pair, Gf2Poly,
};

pub fn run_with(l1: usize, p2: &Gf2Poly) -> shrinkca::Result<String> {
    let mut out = String::new();
    let l2 = p2.degree() as usize;
    let n = (1u64 << l1) - 1;
    writeln!(out, "input: L1 = {l1}, P2(x) = {}", p2.human()).unwrap();

    let coset = cyclotomic_coset(n, (1 << l2) - 1);
    let base = minimal_polynomial_of_power(p2, n)?;
    writeln!(
        out,
        "coset: N = {n}, coset {coset:?}, P(x) = {}",
        base.human()
    )
    .unwrap();

    let pair = synthesize_ca_pair(&base)?;
    writeln!(out, "synthesis: {} / {}", pair.first, pair.second).unwrap();

    for (label, start) in [("a", &pair.first), ("b", &pair.second)] {
        let mut rules = start.clone();
        writeln!(out, "doubling ({label}):").unwrap();
        writeln!(out, "  {rules}").unwrap();
        for _ in 1..l1 {
            rules = concat_double(&rules);
            writeln!(out, "  {rules}").unwrap();
        }
    }

    let result = linearize_shrinking_generator(l1, p2)?;
    writeln!(
        out,
        "output: L = {}, p = {}",
        result.length, result.multiplicity
    )
    .unwrap();
    for rules in result.ca_pair.iter() {
        writeln!(out, "  ({})", rules.rule_list()).unwrap();
        assert_eq!(ca_char_poly(rules), result.ca_poly());
    }
    writeln!(
        out,
        "both CA have characteristic polynomial ({})^{}",
        base.human(),
        result.multiplicity
    )
    .unwrap();
    Ok(out)
}

pub fn run() -> shrinkca::Result<String> {
    run_with(3, &"1+x+x^2+x^4+x^5".parse()?)
}

#[allow(dead_code)]
fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let result = match args.as_slice() {
        [] => run(),
        [l1, p2] => match (l1.parse(), p2.parse()) {
            (Ok(l1), Ok(p2)) => run_with(l1, &p2),
            _ => {
                eprintln!("usage: linearize [L1 P2]");
                std::process::exit(2);
            }
        },
        _ => {
            eprintln!("usage: linearize [L1 P2]");
            std::process::exit(2);
        }
    };
    match result {
        Ok(text) => print!("{text}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
