// For every seed pair of small shrinking generators, measures the
// exponent p with minimal polynomial P(x)^p and tabulates the results.
//
// ```text
// cargo run --release --example multiplicity_sweep
// ```

use std::collections::BTreeMap;
use std::fmt::Write;

use shrinkca::analysis::multiplicity_of;
use shrinkca::{
    berlekamp_massey, minimal_polynomial_of_power, BitSequence, Gf2Poly, Lfsr, ShrinkingGenerator,
};

fn bits_of(value: u64, width: usize) -> BitSequence {
    (0..width).map(|i| (value >> i) & 1 == 1).collect()
}

pub fn run_configs(configs: &[(&str, &str)]) -> shrinkca::Result<String> {
    let mut out = String::new();
    for &(p1, p2) in configs {
        let (p1, p2): (Gf2Poly, Gf2Poly) = (p1.parse()?, p2.parse()?);
        let (l1, l2) = (p1.degree() as usize, p2.degree() as usize);
        let base = minimal_polynomial_of_power(&p2, (1 << l1) - 1)?;
        let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
        for s1 in 1..(1u64 << l1) {
            for s2 in 1..(1u64 << l2) {
                let gen = ShrinkingGenerator::new(
                    Lfsr::new(p1.clone(), bits_of(s1, l1))?,
                    Lfsr::new(p2.clone(), bits_of(s2, l2))?,
                )?;
                let window = gen.sequence(2 * gen.expected_period() as usize)?;
                let bm = berlekamp_massey(&window);
                let p = multiplicity_of(&bm.connection_poly, &base).unwrap_or(0);
                *histogram.entry(p).or_default() += 1;
            }
        }
        writeln!(
            out,
            "P1 = {:<14} P2 = {:<16} P(x) = {:<16} p histogram {histogram:?}",
            p1.human(),
            p2.human(),
            base.human()
        )
        .unwrap();
    }
    Ok(out)
}

pub fn run() -> shrinkca::Result<String> {
    run_configs(&[
        ("1+x+x^2", "1+x+x^3"),
        ("1+x^2+x^3", "1+x+x^4"),
        ("1+x^2+x^3", "1+x+x^2+x^4+x^5"),
        ("1+x+x^4", "1+x^2+x^5"),
    ])
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
