//! Command-line front end. [`run`] does all the work against arbitrary
//! writers so it can be driven in-process; `main` only wires up stdio.
//!
//! Exit codes: 0 success or representable, 1 not representable or
//! verification mismatch, 2 invalid input.

pub mod dot;
pub mod json;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::{frobenius_number, Denominations, Expression};
use crate::oracle::{self, DEFAULT_MAX_ENUM};
use crate::solver;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FOUND: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Environment variable overriding the enumeration budget.
pub const MAX_ENUM_VAR: &str = "FROBKIT_MAX_ENUM";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_enum: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_enum: DEFAULT_MAX_ENUM,
        }
    }
}

impl Config {
    pub fn from_env() -> std::result::Result<Self, String> {
        match std::env::var(MAX_ENUM_VAR) {
            Err(_) => Ok(Config::default()),
            Ok(raw) => raw
                .trim()
                .parse()
                .map(|max_enum| Config { max_enum })
                .map_err(|_| format!("{MAX_ENUM_VAR} must be a nonnegative integer, got {raw:?}")),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "frobkit",
    version,
    about = "Two-denomination coin problem toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Pair {
    /// First coin value
    #[arg(allow_negative_numbers = true)]
    pub a: i64,
    /// Second coin value
    #[arg(allow_negative_numbers = true)]
    pub b: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Step up from the expression of ab - a - b + 1
    Recursive,
    /// Minimal-x expression from the modular inverse of a
    Direct,
    /// Brute-force scan
    Oracle,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Frobenius number ab - a - b
    Frob {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Write d = a*x + b*y with x, y >= 0
    Represent {
        #[command(flatten)]
        pair: Pair,
        #[arg(allow_negative_numbers = true)]
        d: i64,
        /// Print every acceptable expression of d
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "recursive")]
        method: Method,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// List the values that cannot be represented
    Gaps {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Levels of acceptable expressions above the Frobenius number
    Tree {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 4)]
        depth: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Cross-check the solver against the brute-force oracle on 0..=N
    Verify {
        #[command(flatten)]
        pair: Pair,
        /// Upper end of the range (default 4ab)
        #[arg(long = "max-d")]
        max_d: Option<i64>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

/// Failure of a command: the diagnostic and the exit code it maps to.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure(format!("serialization failed: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn reject_format(command: &str, format: OutputFormat, allowed: &[OutputFormat]) -> CmdResult {
    if allowed.contains(&format) {
        Ok(EXIT_OK)
    } else {
        let name = format
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        Err(Failure(format!(
            "format {name} is not supported by {command}"
        )))
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> std::result::Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn expression_line(den: &Denominations, e: &Expression) -> String {
    format!("{} = {}*{} + {}*{}", e.d(), den.a(), e.x(), den.b(), e.y())
}

fn check_budget(size: u128, budget: u64) -> Result<()> {
    if size > budget as u128 {
        Err(Error::SizeGuard { size, budget })
    } else {
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_INVALID
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli.command, config, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
    }
}

fn execute(cmd: &Command, config: &Config, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    use OutputFormat::*;
    match cmd {
        Command::Frob { pair, format } => {
            reject_format("frob", *format, &[Text, Json])?;
            let den = Denominations::new(pair.a, pair.b)?;
            let f = frobenius_number(&den)?;
            match format {
                Json => write_json(out, &json::FrobeniusJson::new(&den, f))?,
                _ => writeln!(out, "{f}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Represent {
            pair,
            d,
            all,
            method,
            format,
        } => {
            reject_format("represent", *format, &[Text, Json])?;
            let den = Denominations::new(pair.a, pair.b)?;
            if *d < 0 {
                return Err(Error::NegativeTarget(*d).into());
            }
            if *all {
                represent_all(&den, *d, *format, config, out, err)
            } else {
                represent_one(&den, *d, *method, *format, out, err)
            }
        }
        Command::Gaps { pair, format } => {
            reject_format("gaps", *format, &[Text, Json, Csv])?;
            let den = Denominations::new(pair.a, pair.b)?;
            let report = oracle::gaps_with_budget(&den, config.max_enum)?;
            match format {
                Json => write_json(out, &json::GapsJson::from(&report))?,
                Csv => {
                    for g in &report.gaps {
                        writeln!(out, "{g}")?;
                    }
                }
                _ => {
                    let list: Vec<String> = report.gaps.iter().map(i64::to_string).collect();
                    writeln!(out, "gaps: {}", list.join(" "))?;
                    writeln!(out, "count: {}", report.count)?;
                    writeln!(out, "frobenius: {}", report.frobenius)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Tree {
            pair,
            depth,
            format,
        } => {
            reject_format("tree", *format, &[Text, Json, Dot])?;
            let den = Denominations::new(pair.a, pair.b)?;
            let max_depth = solver::default_max_depth(&den).min(config.max_enum);
            let tree = solver::expression_tree_bounded(&den, *depth, max_depth)?;
            match format {
                Json => write_json(out, &json::TreeJson::new(&den, &tree))?,
                Dot => write!(out, "{}", dot::tree_to_dot(&tree))?,
                _ => {
                    for (k, level) in tree.levels.iter().enumerate() {
                        let nodes: Vec<String> = level
                            .expressions
                            .iter()
                            .map(|e| format!("({},{})", e.x(), e.y()))
                            .collect();
                        writeln!(out, "d={}: {}", level.d, nodes.join(" "))?;
                        for t in tree.edges.get(k).into_iter().flatten() {
                            writeln!(out, "  {} -{}-> {}", t.from, t.added, t.to)?;
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            pair,
            max_d,
            format,
        } => {
            reject_format("verify", *format, &[Text, Json, Csv])?;
            let den = Denominations::new(pair.a, pair.b)?;
            let hi = max_d.unwrap_or_else(|| den.product().saturating_mul(4));
            if hi < 0 {
                return Err(Error::NegativeTarget(hi).into());
            }
            check_budget(hi as u128 + 1, config.max_enum)?;
            let report = oracle::verify_range(&den, 0, hi)?;
            match format {
                Json => write_json(out, &json::VerifyJson::from(&report))?,
                Csv => {
                    let cell = |e: &Option<Expression>| match e {
                        Some(e) => format!("{}:{}", e.x(), e.y()),
                        None => "none".to_string(),
                    };
                    for m in &report.mismatches {
                        writeln!(out, "{},{},{}", m.d, cell(&m.method), cell(&m.oracle))?;
                    }
                }
                _ => {
                    writeln!(
                        out,
                        "a={} b={} range={}..={} checked={} mismatches={} elapsed_ms={:.3}",
                        den.a(),
                        den.b(),
                        report.d_lo,
                        report.d_hi,
                        report.checked,
                        report.mismatches.len(),
                        report.elapsed.as_secs_f64() * 1e3
                    )?;
                    for m in &report.mismatches {
                        writeln!(out, "mismatch d={}: {}", m.d, m.reason)?;
                    }
                }
            }
            if !report.passed() {
                writeln!(
                    err,
                    "verification failed: {} mismatches",
                    report.mismatches.len()
                )?;
                return Ok(EXIT_NOT_FOUND);
            }
            Ok(EXIT_OK)
        }
    }
}

fn represent_one(
    den: &Denominations,
    d: i64,
    method: Method,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let expr = match method {
        Method::Direct => solver::represent_direct(den, d)?,
        Method::Oracle => oracle::oracle_representable(den, d)?,
        Method::Recursive => {
            let f = frobenius_number(den)?;
            if d <= f {
                writeln!(
                    err,
                    "note: d={d} is not above the Frobenius number {f}; using the direct method"
                )?;
                solver::represent_direct(den, d)?
            } else {
                Some(solver::represent_above_frobenius(den, d)?)
            }
        }
    };
    match format {
        OutputFormat::Json => write_json(out, &json::RepresentJson::new(den, d, expr.as_ref()))?,
        _ => {
            if let Some(e) = &expr {
                writeln!(out, "{}", expression_line(den, e))?;
            }
        }
    }
    if expr.is_none() {
        writeln!(
            err,
            "{d} cannot be written as {}x + {}y with x, y >= 0",
            den.a(),
            den.b()
        )?;
        return Ok(EXIT_NOT_FOUND);
    }
    Ok(EXIT_OK)
}

fn represent_all(
    den: &Denominations,
    d: i64,
    format: OutputFormat,
    config: &Config,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    check_budget(
        solver::count_acceptable_expressions(den, d)? as u128,
        config.max_enum,
    )?;
    let level = solver::all_acceptable_expressions(den, d)?;
    match format {
        OutputFormat::Json => write_json(out, &json::AllJson::new(den, &level))?,
        _ => {
            for e in &level.expressions {
                writeln!(out, "{}", expression_line(den, e))?;
            }
        }
    }
    if level.is_empty() {
        writeln!(
            err,
            "{d} cannot be written as {}x + {}y with x, y >= 0",
            den.a(),
            den.b()
        )?;
        return Ok(EXIT_NOT_FOUND);
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("frobkit").chain(args.iter().copied());
        let code = run(argv, &Config::default(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn format_restrictions() {
        assert_eq!(call(&["frob", "3", "5", "--format", "dot"]).0, EXIT_INVALID);
        assert_eq!(
            call(&["represent", "3", "5", "8", "--format", "csv"]).0,
            EXIT_INVALID
        );
        assert_eq!(call(&["gaps", "3", "5", "--format", "dot"]).0, EXIT_INVALID);
        assert_eq!(call(&["tree", "3", "5", "--format", "csv"]).0, EXIT_INVALID);
        assert_eq!(
            call(&["verify", "3", "5", "--format", "dot"]).0,
            EXIT_INVALID
        );
    }

    #[test]
    fn negative_inputs() {
        let (code, _, err) = call(&["frob", "-3", "5"]);
        assert_eq!(code, EXIT_INVALID);
        assert!(err.contains("positive"), "{err}");
        assert_eq!(call(&["represent", "3", "5", "-1"]).0, EXIT_INVALID);
    }

    #[test]
    fn help_is_not_an_error() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("represent"));
    }

    #[test]
    fn budget_guards() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let config = Config { max_enum: 10 };
        let code = run(["frobkit", "gaps", "3", "5"], &config, &mut out, &mut err);
        assert_eq!(code, EXIT_INVALID);
        let code = run(
            ["frobkit", "tree", "3", "5", "--depth", "11"],
            &config,
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_INVALID);
        let code = run(
            ["frobkit", "represent", "1", "2", "40", "--all"],
            &config,
            &mut out,
            &mut err,
        );
        assert_eq!(code, EXIT_INVALID);
    }
}
