//! Command-line front end: table ingestion and validation, invariants,
//! subalgebra lattice checks with replayable witnesses, cyclic algebras,
//! named families, and the verification suite.

pub mod commands;
pub mod document;
pub mod error;
pub mod replay;
pub mod report;
pub mod suite;
pub mod witness;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use leibniz_core::exactfield::FieldDescriptor;
use leibniz_core::lattice::LatticeConfig;

use crate::commands::{CyclicAction, LatticeRequest};
use crate::error::{CliError, EXIT_INPUT};
use crate::report::{emit, Format, Report};
use crate::suite::{Scope, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Exact computation with finite-dimensional Leibniz algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Largest number of subspaces enumerated when building a lattice.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub max_lattice: u64,
    /// Largest lattice on which checks over all triples of nodes run.
    #[arg(long, global = true, default_value_t = 2000)]
    pub max_triple_lattice: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

impl GlobalArgs {
    fn lattice(&self) -> LatticeConfig {
        LatticeConfig { max_subspaces: self.max_lattice, max_triple_nodes: self.max_triple_lattice }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the right Leibniz identity on a structure-constant document.
    Validate { input: PathBuf },
    /// Series, radicals, recognizers and the J-set.
    Analyze { input: PathBuf },
    /// Build the subalgebra lattice and run lattice checks.
    Lattice {
        input: PathBuf,
        /// Comma-separated check names; all checks by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Write the Hasse diagram in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Assert a value for a check, as name=true or name=false.
        #[arg(long, value_parser = parse_expect)]
        expect: Vec<(String, bool)>,
        /// Report verdicts without asserting them.
        #[arg(long)]
        no_assert: bool,
    },
    /// Cyclic algebra with relation a^n a = sum alpha_i a^i.
    Cyclic {
        #[arg(long, value_parser = parse_field)]
        field: FieldDescriptor,
        /// alpha_1, ..., alpha_n, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        alphas: String,
        #[arg(long, value_enum)]
        action: CyclicAction,
    },
    /// Emit a named family member as a structure-constant document.
    Family {
        #[arg(required_unless_present = "list")]
        name: Option<String>,
        #[arg(long, value_parser = parse_field, default_value = "gf3")]
        field: FieldDescriptor,
        /// Family parameter as key=value.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long)]
        list: bool,
    },
    /// Run the verification suite.
    PaperSuite {
        #[arg(long, value_enum, default_value_t = Scope::Full)]
        scope: Scope,
    },
    /// Re-check every witness stored in a report.
    Replay { report: PathBuf },
}

fn parse_field(s: &str) -> Result<FieldDescriptor, String> {
    FieldDescriptor::parse_tag(s).map_err(|e| e.to_string())
}

fn parse_expect(s: &str) -> Result<(String, bool), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("{s:?} is not of the form name=bool"))?;
    let value = value.trim().parse::<bool>().map_err(|_| format!("{value:?} is not true or false"))?;
    Ok((name.trim().to_string(), value))
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let g = &cli.global;
    let config = g.lattice();
    let report = match &cli.command {
        Command::Validate { input } => commands::validate(input)?,
        Command::Analyze { input } => commands::analyze(input, &config)?,
        Command::Lattice { input, checks, dot, expect, no_assert } => {
            let req =
                LatticeRequest { checks: checks.clone(), expect: expect.clone(), assert: !no_assert, dot: dot.clone() };
            commands::lattice(input, &req, &config)?
        }
        Command::Cyclic { field, alphas, action } => commands::cyclic(*field, alphas, *action, &config)?,
        Command::Family { name, field, params, list } => {
            let text = if *list {
                commands::family_list()
            } else {
                let params = commands::parse_params(params)?;
                let doc = commands::family(name.as_deref().unwrap_or_default(), *field, &params)?;
                match g.format {
                    Format::Json => doc.to_json(),
                    Format::Text => commands::document_text(&doc)?,
                }
            };
            emit(&text, g.out.as_deref())?;
            return Ok(error::EXIT_PASS);
        }
        Command::PaperSuite { scope } => {
            let run = suite::run(SuiteConfig { scope: *scope, seed: g.seed, lattice: config });
            for c in &run.criteria {
                eprintln!("{}", c.line());
            }
            run.report
        }
        Command::Replay { report } => {
            let text = commands::read_input(report)?;
            let stored = Report::parse_json(&text)?;
            replay::replay(&stored, document::digest_bytes(text.as_bytes()))
        }
    };
    emit(&render(&report, g.format), g.out.as_deref())?;
    Ok(report.exit_code())
}

/// Parses arguments and runs one command, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { error::EXIT_PASS };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("leibniz: {e}");
            e.exit_code()
        }
    }
}
