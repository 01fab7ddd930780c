//! Command-line front end.
//!
//! Every polynomial flag accepts the bit-string or `1+x^k` forms; every bit
//! string is index-0-leftmost. Exit status is 0 on success, 1 when `attack`
//! fails to reproduce the keystream, and 2 on usage or validation errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{berlekamp_massey, verify_linearization};
use crate::automata::{ca_char_poly, ca_run, CaState, RuleVector};
use crate::bits::BitSequence;
use crate::error::{Error, Result};
use crate::generators::{Lfsr, ShrinkingGenerator};
use crate::gf2poly::Gf2Poly;
use crate::linearizer::linearize_shrinking_generator;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "shrinkca",
    version,
    about = "Linear CA models of shrinking generators"
)]
pub struct CommandRequest {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the output of a single LFSR.
    Lfsr {
        #[arg(long)]
        poly: Gf2Poly,
        #[arg(long)]
        seed: BitSequence,
        #[arg(long)]
        count: usize,
    },
    /// Print the output of a shrinking generator.
    Shrink {
        #[command(flatten)]
        gen: GeneratorArgs,
        #[arg(long)]
        count: usize,
    },
    /// Cellular automaton tools.
    #[command(subcommand)]
    Ca(CaCommand),
    /// Build the pair of linear CA for a control length and data polynomial.
    Linearize {
        #[arg(long)]
        l1: usize,
        #[arg(long)]
        p2: Gf2Poly,
    },
    /// Linear complexity and minimal polynomial of a bit stream.
    Bm {
        #[arg(
            long,
            conflicts_with = "seq_file",
            required_unless_present = "seq_file"
        )]
        seq: Option<BitSequence>,
        #[arg(long)]
        seq_file: Option<PathBuf>,
    },
    /// Linearize a generator and check that a CA reproduces its output.
    Attack {
        #[command(flatten)]
        gen: GeneratorArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum CaCommand {
    /// Print the states at times 0..=steps, one per line.
    Run {
        #[arg(long)]
        rules: RuleVector,
        #[arg(long)]
        state: CaState,
        #[arg(long)]
        steps: usize,
    },
    /// Print the characteristic polynomial of the transition matrix.
    Charpoly {
        #[arg(long)]
        rules: RuleVector,
    },
}

#[derive(Debug, clap::Args)]
pub struct GeneratorArgs {
    /// Control register polynomial.
    #[arg(long)]
    pub p1: Gf2Poly,
    /// Control register seed.
    #[arg(long)]
    pub s1: BitSequence,
    /// Data register polynomial.
    #[arg(long)]
    pub p2: Gf2Poly,
    /// Data register seed.
    #[arg(long)]
    pub s2: BitSequence,
}

impl GeneratorArgs {
    fn build(&self) -> Result<ShrinkingGenerator> {
        ShrinkingGenerator::new(
            Lfsr::new(self.p1.clone(), self.s1.clone())?,
            Lfsr::new(self.p2.clone(), self.s2.clone())?,
        )
    }
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Self {
            status: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(request) => run_command(&request),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn run_command(request: &CommandRequest) -> Outcome {
    match execute(request) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

fn render(format: Format, text: String, value: serde_json::Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
            s.push('\n');
            s
        }
    }
}

fn execute(request: &CommandRequest) -> Result<Outcome> {
    let format = request.format;
    let out = match &request.command {
        Command::Lfsr { poly, seed, count } => {
            let s = Lfsr::new(poly.clone(), seed.clone())?.sequence(*count);
            render(
                format,
                format!("{s}\n"),
                json!({ "poly": poly, "seed": seed, "count": count, "sequence": s }),
            )
        }
        Command::Shrink { gen, count } => {
            let s = gen.build()?.sequence(*count)?;
            render(
                format,
                format!("{s}\n"),
                json!({
                    "p1": gen.p1, "s1": gen.s1, "p2": gen.p2, "s2": gen.s2,
                    "count": count, "sequence": s,
                }),
            )
        }
        Command::Ca(CaCommand::Run {
            rules,
            state,
            steps,
        }) => {
            let states = ca_run(rules, state, *steps)?;
            let text: String = states.iter().map(|s| format!("{s}\n")).collect();
            render(format, text, json!({ "rules": rules, "states": states }))
        }
        Command::Ca(CaCommand::Charpoly { rules }) => {
            let poly = ca_char_poly(rules);
            render(
                format,
                format!("{poly}\n"),
                json!({ "rules": rules, "char_poly": poly, "human": poly.human() }),
            )
        }
        Command::Linearize { l1, p2 } => {
            let result = linearize_shrinking_generator(*l1, p2)?;
            render(
                format,
                format!("{}\n{}\n", result.ca_pair.first, result.ca_pair.second),
                serde_json::to_value(&result).expect("serializable"),
            )
        }
        Command::Bm { seq, seq_file } => {
            let s = match (seq, seq_file) {
                (Some(s), _) => s.clone(),
                (None, Some(path)) => read_seq_file(path)?,
                (None, None) => unreachable!("clap requires one of --seq/--seq-file"),
            };
            let bm = berlekamp_massey(&s);
            render(
                format,
                format!(
                    "linear_complexity: {}\nconnection_poly: {}\n",
                    bm.linear_complexity, bm.connection_poly
                ),
                json!({
                    "length": s.len(),
                    "linear_complexity": bm.linear_complexity,
                    "connection_poly": bm.connection_poly,
                    "human": bm.connection_poly.human(),
                }),
            )
        }
        Command::Attack { gen } => {
            let report = verify_linearization(&gen.build()?)?;
            let stdout = render(
                format,
                report.render_text(),
                serde_json::to_value(&report).expect("serializable"),
            );
            return Ok(Outcome {
                status: if report.verdict { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            });
        }
    };
    Ok(Outcome::ok(out))
}

fn read_seq_file(path: &PathBuf) -> Result<BitSequence> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let mut bits = Vec::new();
    for c in text.chars() {
        match c {
            '0' => bits.push(false),
            '1' => bits.push(true),
            c if c.is_whitespace() => {}
            _ => return Err(Error::ParseBits(text.trim().to_string())),
        }
    }
    if bits.is_empty() {
        return Err(Error::ParseBits(text.trim().to_string()));
    }
    Ok(BitSequence::new(bits))
}
