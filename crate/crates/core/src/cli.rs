//! Command-line front end. [`run`] does all the work and returns the text
//! and exit code, so the binary is a thin wrapper and tests can drive it
//! directly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::diagram::Diagram;
use crate::error::Error;
use crate::format::{parse_circuit, parse_rules, print_circuit};
use crate::functor::{phi, verify_strict};
use crate::rewrite::{builtin_rules, verify_trace_capped, Rewriter, Rule};
use crate::semantics::{configured_max_width, eval, truth_table_capped, BitVec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_STEP_LIMIT: i32 = 4;
pub const EXIT_STATE_LIMIT: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "rbc",
    about = "Reversible boolean circuits: evaluate, measure and normalize"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a circuit file.
    Check { path: PathBuf },
    /// Print the full truth table.
    Truth { path: PathBuf },
    /// Evaluate the circuit on one input.
    Eval {
        path: PathBuf,
        #[arg(long)]
        input: String,
    },
    /// Print the move map of the circuit and its ε-rank.
    Measure { path: PathBuf },
    /// Rewrite to normal form.
    Normalize {
        path: PathBuf,
        /// Print one line per rewrite step.
        #[arg(long)]
        trace: bool,
        /// Check semantics and measure decrease for every step.
        #[arg(long)]
        verify: bool,
        /// Load the rule catalog from a file instead of the built-in one.
        #[arg(long)]
        rules: Option<PathBuf>,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Enumerate every normal form reachable from the circuit.
    Nfs {
        path: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        max_states: usize,
        #[arg(long)]
        rules: Option<PathBuf>,
    },
    /// Check that every rule strictly decreases the move measure.
    VerifyRules {
        #[arg(long)]
        rules: Option<PathBuf>,
        /// Also print the suffix vectors of both sides.
        #[arg(long)]
        vectors: bool,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Output {
            stdout: String::new(),
            stderr,
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Output::ok(text)
            } else {
                Output::fail(code, text)
            }
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::StepLimitExceeded(_) => EXIT_STEP_LIMIT,
        Error::StateLimitExceeded(_) => EXIT_STATE_LIMIT,
        _ => EXIT_INVALID,
    }
}

fn diagnostic(path: &Path, e: &Error) -> String {
    match e {
        Error::Parse {
            line,
            column,
            message,
        } => format!("{}:{line}:{column}: error: {message}\n", path.display()),
        other => format!("{}: error: {other}\n", path.display()),
    }
}

fn read(path: &Path) -> Result<String, Output> {
    std::fs::read_to_string(path)
        .map_err(|e| Output::fail(EXIT_INVALID, format!("{}: error: {e}\n", path.display())))
}

fn load_circuit(path: &Path) -> Result<Diagram, Output> {
    parse_circuit(&read(path)?).map_err(|e| Output::fail(EXIT_INVALID, diagnostic(path, &e)))
}

fn load_rules(path: Option<&Path>) -> Result<Vec<Rule>, Output> {
    match path {
        None => Ok(builtin_rules()),
        Some(p) => {
            parse_rules(&read(p)?).map_err(|e| Output::fail(EXIT_INVALID, diagnostic(p, &e)))
        }
    }
}

pub fn execute(cmd: &Command) -> Output {
    match execute_inner(cmd) {
        Ok(out) | Err(out) => out,
    }
}

fn execute_inner(cmd: &Command) -> Result<Output, Output> {
    match cmd {
        Command::Check { path } => {
            let d = load_circuit(path)?;
            Ok(Output::ok(format!(
                "ok: width={} gates={}\n",
                d.width(),
                d.len()
            )))
        }
        Command::Truth { path } => {
            let d = load_circuit(path)?;
            let table = truth_table_capped(&d, configured_max_width())
                .map_err(|e| Output::fail(exit_code(&e), diagnostic(path, &e)))?;
            Ok(Output::ok(table.to_string()))
        }
        Command::Eval { path, input } => {
            let d = load_circuit(path)?;
            let bits: BitVec = input
                .parse()
                .map_err(|e| Output::fail(EXIT_INVALID, format!("error: --input: {e}\n")))?;
            if bits.len() != d.width() {
                return Err(Output::fail(
                    EXIT_INVALID,
                    format!(
                        "error: InputLengthMismatch: input has {} bits, circuit has {} wires\n",
                        bits.len(),
                        d.width()
                    ),
                ));
            }
            let out =
                eval(&d, &bits).map_err(|e| Output::fail(exit_code(&e), diagnostic(path, &e)))?;
            Ok(Output::ok(format!("{bits} -> {out}\n")))
        }
        Command::Measure { path } => {
            let d = load_circuit(path)?;
            let m = phi(&d);
            Ok(Output::ok(format!("{m}rank {}\n", m.epsilon_rank())))
        }
        Command::Normalize {
            path,
            trace,
            verify,
            rules,
            max_steps,
        } => {
            let d = load_circuit(path)?;
            let mut rewriter = Rewriter::new(load_rules(rules.as_deref())?);
            rewriter.max_steps = *max_steps;
            let (nf, steps) = rewriter
                .normalize(&d)
                .map_err(|e| Output::fail(exit_code(&e), diagnostic(path, &e)))?;
            let mut out = print_circuit(&nf);
            let _ = writeln!(out, "# {} steps", steps.len());
            if *trace {
                out.push_str(&steps.to_string());
            }
            let mut code = EXIT_OK;
            if *verify {
                let report = verify_trace_capped(&steps, configured_max_width());
                out.push_str(&report.to_string());
                if !report.is_ok() {
                    code = EXIT_VERIFY_FAILED;
                }
            }
            Ok(Output {
                stdout: out,
                stderr: String::new(),
                code,
            })
        }
        Command::Nfs {
            path,
            max_states,
            rules,
        } => {
            let d = load_circuit(path)?;
            let rewriter = Rewriter::new(load_rules(rules.as_deref())?);
            let nfs = rewriter
                .all_normal_forms(&d, *max_states)
                .map_err(|e| Output::fail(exit_code(&e), diagnostic(path, &e)))?;
            let mut out = String::new();
            for (i, nf) in nfs.iter().enumerate() {
                let _ = writeln!(out, "# normal form {}", i + 1);
                out.push_str(&print_circuit(nf));
                out.push('\n');
            }
            let _ = writeln!(out, "count: {}", nfs.len());
            Ok(Output::ok(out))
        }
        Command::VerifyRules { rules, vectors } => {
            let rules = load_rules(rules.as_deref())?;
            let report = verify_strict(&rules);
            let mut out = String::new();
            for e in &report.entries {
                let _ = writeln!(out, "{e}");
                if *vectors {
                    let _ = writeln!(out, "  {}", e.vectors());
                }
            }
            let code = if report.all_strict() {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            };
            Ok(Output {
                stdout: out,
                stderr: String::new(),
                code,
            })
        }
    }
}
