// Runs a 10-cell hybrid 90/150 CA, prints the state succession, the
// characteristic polynomial of its transition matrix, and the period of
// every cell's output column.
//
// ```text
// cargo run --example table_automaton
// ```

use std::fmt::Write;

use shrinkca::automata::cell_output;
use shrinkca::{ca_char_poly, ca_run, sequence_period, CaState, RuleVector};

pub fn run() -> shrinkca::Result<String> {
    let rules: RuleVector = "0111001110".parse()?;
    let init: CaState = "0001110110".parse()?;

    let mut out = String::new();
    writeln!(out, "rules {}", rules.rule_list()).unwrap();
    for state in ca_run(&rules, &init, 5)? {
        writeln!(out, "  {state}").unwrap();
    }

    let charpoly = ca_char_poly(&rules);
    writeln!(out, "char poly {}", charpoly.human()).unwrap();

    let orbit = ca_run(&rules, &init, 200)?;
    let orbit_period = (1..orbit.len())
        .find(|&t| orbit[t] == orbit[0])
        .unwrap_or(0);
    writeln!(out, "state orbit period {orbit_period}").unwrap();

    let periods = (0..rules.len())
        .map(|cell| Ok(sequence_period(&cell_output(&rules, &init, cell, 200)?).unwrap()))
        .collect::<shrinkca::Result<Vec<_>>>()?;
    writeln!(out, "cell periods {periods:?}").unwrap();
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
