// Simulates a small shrinking generator: both register streams, the
// decimated output, its period and its linear complexity.
//
// ```text
// cargo run --example shrinking_generator
// ```

use std::fmt::Write;

use shrinkca::{
    berlekamp_massey, lc_bounds, sequence_period, BitSequence, Lfsr, ShrinkingGenerator,
};

pub fn run() -> shrinkca::Result<String> {
    let control = Lfsr::new("1+x^2+x^3".parse()?, "100".parse()?)?;
    let data = Lfsr::new("1+x+x^4".parse()?, "1000".parse()?)?;
    let gen = ShrinkingGenerator::new(control, data)?;

    let a = gen.control().sequence(22);
    let b = gen.data().sequence(22);
    let kept: BitSequence = a
        .iter()
        .zip(b.iter())
        .filter(|(x, _)| *x)
        .map(|(_, y)| y)
        .collect();

    let mut out = String::new();
    writeln!(out, "a (control) {a}").unwrap();
    writeln!(out, "b (data)    {b}").unwrap();
    writeln!(out, "kept        {kept}").unwrap();

    let period = gen.expected_period() as usize;
    let window = gen.sequence(2 * period)?;
    writeln!(out, "shrunken    {}", window.prefix(13)).unwrap();
    writeln!(
        out,
        "period      {} (formula {period})",
        sequence_period(&window).unwrap()
    )
    .unwrap();

    let bm = berlekamp_massey(&window);
    let bounds = lc_bounds(3, 4)?;
    writeln!(out, "LC          {} in {bounds}", bm.linear_complexity).unwrap();
    writeln!(out, "min poly    {}", bm.connection_poly.human()).unwrap();
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
