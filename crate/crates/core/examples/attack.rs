// End-to-end attack: linearize a shrinking generator, then recover a CA
// cell and initial state that emit its keystream bit for bit.
//
// ```text
// cargo run --example attack
// ```

use shrinkca::automata::cell_output;
use shrinkca::{verify_linearization, Lfsr, ShrinkingGenerator};

pub fn run() -> shrinkca::Result<String> {
    let gen = ShrinkingGenerator::new(
        Lfsr::new("1+x^2+x^3".parse()?, "100".parse()?)?,
        Lfsr::new("1+x+x^2+x^4+x^5".parse()?, "10000".parse()?)?,
    )?;
    let report = verify_linearization(&gen)?;
    let mut out = report.render_text();

    if let (Some(cell), Some(state)) = (report.matched_cell, report.fitted_state.as_ref()) {
        let rules = if report.matched_ca == Some("a") {
            &report.linearization.ca_pair.first
        } else {
            &report.linearization.ca_pair.second
        };
        let predicted = cell_output(rules, state, cell, 40)?;
        let actual = gen.sequence(40)?;
        out.push_str(&format!(
            "CA prediction   {predicted}\nkeystream       {actual}\n"
        ));
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
