//! Command-line front-end for `squarediagram`.
//!
//! Subcommands: `info`, `render`, `path`, `decode`, `census`. Exit codes:
//! 0 ok, 1 bound or oracle failure, 2 usage or parse error, 3 invalid
//! semigroup description, 4 path not the square diagram of any semigroup.

pub mod render;
pub mod report;

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use squarediagram::dyck::{self, PathDecodeOutcome, Rejection};
use squarediagram::enumeration::{brute_force_oracle, census, ORACLE_MAX_GENUS};
use squarediagram::{NumericalSemigroup, MAX_GENUS};

use crate::report::{CensusRow, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_BOUND_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_SEMIGROUP: i32 = 3;
pub const EXIT_NOT_IN_IMAGE: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "squarediagram",
    version,
    about = "Square diagrams of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print genus, conductor, symmetry, weight, path and profile.
    Info {
        #[command(flatten)]
        spec: SemigroupSpec,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the square diagram as a character grid.
    Render {
        #[command(flatten)]
        spec: SemigroupSpec,
        /// Overlay the antidiagonal from (0, g-1) to (g-1, 0).
        #[arg(long)]
        antidiagonal: bool,
    },
    /// Print only the U/R path string.
    Path {
        #[command(flatten)]
        spec: SemigroupSpec,
    },
    /// Recover the semigroup whose square diagram is PATH.
    Decode {
        /// Path over 'U' and 'R'; the empty string is the order-0 path.
        path: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count semigroups of each genus and check both counting bounds.
    Census {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=MAX_GENUS as i64))]
        genus_max: u32,
        /// Also compare totals with the brute-force subset count (genus <= 8).
        #[arg(long)]
        verify_oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SemigroupSpec {
    /// Comma-separated gap set; an empty string is the empty set.
    #[arg(long, value_parser = parse_list)]
    pub gaps: Option<NumberList>,
    /// Comma-separated generators.
    #[arg(long, value_parser = parse_list)]
    pub gens: Option<NumberList>,
}

/// A comma-separated list of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumberList(pub Vec<u64>);

fn parse_list(s: &str) -> Result<NumberList, String> {
    if s.trim().is_empty() {
        return Ok(NumberList(Vec::new()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|e| format!("{t:?} is not a non-negative integer: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(NumberList)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl SemigroupSpec {
    fn build(&self) -> Result<NumericalSemigroup, squarediagram::SemigroupError> {
        match (&self.gaps, &self.gens) {
            (Some(gaps), _) => NumericalSemigroup::from_gaps(gaps.0.iter().copied()),
            (None, Some(gens)) => NumericalSemigroup::from_generators(&gens.0),
            (None, None) => unreachable!("clap requires one of --gaps/--gens"),
        }
    }
}

/// Runs a parsed command, writing normal output to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    match &cli.command {
        Command::Info { spec, format } => {
            let Some(s) = build_or_report(spec, err)? else {
                return Ok(EXIT_INVALID_SEMIGROUP);
            };
            let report = Report::new(&s, spec.gens.as_ref().map(|g| g.0.as_slice()));
            report.write(out, *format)?;
        }
        Command::Render { spec, antidiagonal } => {
            let Some(s) = build_or_report(spec, err)? else {
                return Ok(EXIT_INVALID_SEMIGROUP);
            };
            write!(out, "{}", render::render(&dyck::tau(&s), *antidiagonal))?;
        }
        Command::Path { spec } => {
            let Some(s) = build_or_report(spec, err)? else {
                return Ok(EXIT_INVALID_SEMIGROUP);
            };
            writeln!(out, "{}", dyck::tau(&s))?;
        }
        Command::Decode { path, format } => {
            let steps = match dyck::parse_steps(path) {
                Ok(steps) => steps,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            match dyck::decode_steps(steps) {
                PathDecodeOutcome::Accepted(s) => Report::new(&s, None).write(out, *format)?,
                PathDecodeOutcome::Rejected(Rejection::Structural(e)) => {
                    writeln!(err, "error: not a Dyck path: {e}")?;
                    return Ok(EXIT_USAGE);
                }
                PathDecodeOutcome::Rejected(r) => {
                    writeln!(err, "rejected: {r}")?;
                    if let Rejection::NotClosed { a, b } = r {
                        writeln!(err, "witness: {a} + {b} = {}", a + b)?;
                    }
                    return Ok(EXIT_NOT_IN_IMAGE);
                }
            }
        }
        Command::Census {
            genus_max,
            verify_oracle,
            format,
        } => return run_census(*genus_max, *verify_oracle, *format, out),
    }
    Ok(EXIT_OK)
}

fn build_or_report(
    spec: &SemigroupSpec,
    err: &mut dyn Write,
) -> io::Result<Option<NumericalSemigroup>> {
    match spec.build() {
        Ok(s) => Ok(Some(s)),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            if let squarediagram::SemigroupError::NotClosed { a, b } = e {
                writeln!(err, "witness: {a} + {b} = {}", a + b)?;
            }
            Ok(None)
        }
    }
}

fn run_census(
    genus_max: u32,
    verify_oracle: bool,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<i32> {
    let mut rows = Vec::with_capacity(genus_max as usize);
    for g in 1..=genus_max {
        let record = census(g).expect("genus range checked by the argument parser");
        let oracle = (verify_oracle && g <= ORACLE_MAX_GENUS)
            .then(|| brute_force_oracle(g).expect("genus within oracle range"));
        rows.push(CensusRow::new(record, oracle));
    }
    report::write_census(&rows, out, format)?;
    Ok(if rows.iter().all(CensusRow::passed) {
        EXIT_OK
    } else {
        EXIT_BOUND_FAILURE
    })
}
