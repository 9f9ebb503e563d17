//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative one (not a
//! tautology, no entailment, a failed check or audit), 2 when the command
//! could not run.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cpn_core::calculus::{audit_scheme, synthesize_with, AuditFailure, Corpus, SynthError, SynthOptions, SCHEMES};
use cpn_core::{check_proof, classify, entails, find_countermodel, parse, Chain, Formula, VerdictKind, Witness};
use serde_json::{json, Value};

use crate::json::{kind_name, verdict_to_json, witness_to_json};
use crate::proof_file::{parse_proof, write_proof};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cpn", version, about = "Propositional logic with multiple negations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Worlds {
    /// Number of worlds (alphabet size).
    #[arg(short = 'n', long = "worlds", value_parser = clap::value_parser!(u8).range(1..=16))]
    n: u8,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the canonical rendering of a formula.
    Parse {
        #[command(flatten)]
        worlds: Worlds,
        formula: String,
    },
    /// Classify a formula as tautology, contradiction or neither.
    Check {
        #[command(flatten)]
        worlds: Worlds,
        formula: String,
    },
    /// Print the first falsifying valuation, or `none`.
    Countermodel {
        #[command(flatten)]
        worlds: Worlds,
        formula: String,
    },
    /// Decide whether the premises entail the goal.
    Entail {
        #[command(flatten)]
        worlds: Worlds,
        /// A premise; may be repeated.
        #[arg(short = 'p', long = "premise")]
        premises: Vec<String>,
        goal: String,
    },
    /// Check or synthesize proofs.
    #[command(subcommand)]
    Prove(Prove),
    /// Audit the scheme corpus.
    Audit {
        #[command(flatten)]
        worlds: Worlds,
    },
}

#[derive(Debug, Subcommand)]
enum Prove {
    /// Check a proof file.
    Check { file: PathBuf },
    /// Synthesize a proof of a tautology and print it as a proof file.
    Synth {
        #[command(flatten)]
        worlds: Worlds,
        /// Chain whose cases are joined when eliminating an atom, e.g. `{1}`.
        #[arg(long)]
        pairing: Option<String>,
        formula: String,
    },
}

/// Failure that stops a command before it produces an answer.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

struct Ctx<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Result<(), Usage> {
        match self.format {
            Format::Text => writeln!(self.out, "{}", text())?,
            Format::Json => writeln!(self.out, "{}", value())?,
        }
        Ok(())
    }
}

fn formula(text: &str, n: u8) -> Result<Formula, Usage> {
    parse(text, n).map_err(|e| Usage(format!("cannot parse `{text}`: {e}")))
}

fn chain_arg(text: &str, n: u8) -> Result<Chain, Usage> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Usage(format!("expected a chain like {{1,2}}, got `{text}`")))?;
    let symbols = inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<u32>().map_err(|_| Usage(format!("bad chain symbol `{s}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Chain::canonical(&symbols, n as u32)?)
}

/// `world 1: p=F q=T; world 2: p=T q=T`, marking the reported world.
fn witness_text(w: &Witness) -> String {
    let worlds: Vec<String> = (1..=w.valuation.worlds())
        .map(|i| {
            let mut s = format!("world {i}{}:", if i == w.world { "*" } else { "" });
            for (a, m) in w.valuation.entries() {
                let v = if m & (1 << (i - 1)) != 0 { 'T' } else { 'F' };
                s.push_str(&format!(" {a}={v}"));
            }
            s
        })
        .collect();
    worlds.join("; ")
}

fn run_check(ctx: &mut Ctx, n: u8, text: &str) -> Result<i32, Usage> {
    let f = formula(text, n)?;
    let v = classify(&f, n)?;
    ctx.emit(
        || {
            let mut s = kind_name(v.kind).to_string();
            if let Some(w) = &v.witness_false {
                s.push_str(&format!("\nfalse at world {}: {}", w.world, witness_text(w)));
            }
            if let (VerdictKind::Neither, Some(w)) = (v.kind, &v.witness_true) {
                s.push_str(&format!("\ntrue at world {}: {}", w.world, witness_text(w)));
            }
            s
        },
        || verdict_to_json(&v),
    )?;
    Ok(if v.kind == VerdictKind::Tautology { EXIT_YES } else { EXIT_NO })
}

fn run_countermodel(ctx: &mut Ctx, n: u8, text: &str) -> Result<i32, Usage> {
    let f = formula(text, n)?;
    let w = find_countermodel(&f, n)?;
    ctx.emit(
        || match &w {
            Some(w) => format!("false at world {}: {}", w.world, witness_text(w)),
            None => "none".into(),
        },
        || json!({ "countermodel": w.as_ref().map(witness_to_json) }),
    )?;
    Ok(if w.is_none() { EXIT_YES } else { EXIT_NO })
}

fn run_entail(ctx: &mut Ctx, n: u8, premises: &[String], goal: &str) -> Result<i32, Usage> {
    let premises = premises.iter().map(|p| formula(p, n)).collect::<Result<Vec<_>, _>>()?;
    let goal = formula(goal, n)?;
    let e = entails(&premises, &goal, n)?;
    ctx.emit(
        || match &e.countermodel {
            Some(w) => format!("no\ncountermodel at world {}: {}", w.world, witness_text(w)),
            None => "yes".into(),
        },
        || json!({ "entails": e.holds, "countermodel": e.countermodel.as_ref().map(witness_to_json) }),
    )?;
    Ok(if e.holds { EXIT_YES } else { EXIT_NO })
}

fn run_prove_check(ctx: &mut Ctx, file: &PathBuf) -> Result<i32, Usage> {
    let text = std::fs::read_to_string(file).map_err(|e| Usage(format!("{}: {e}", file.display())))?;
    let proof = parse_proof(&text).map_err(|e| Usage(format!("{}: {e}", file.display())))?;
    let result = check_proof(&proof);
    ctx.emit(
        || match &result {
            Ok(()) => "ok".into(),
            Err(e) => e.to_string(),
        },
        || match &result {
            Ok(()) => json!({ "ok": true, "lines": proof.len() }),
            Err(e) => json!({ "ok": false, "line": e.line, "reason": e.kind.to_string() }),
        },
    )?;
    Ok(if result.is_ok() { EXIT_YES } else { EXIT_NO })
}

fn run_synth(ctx: &mut Ctx, n: u8, pairing: Option<&str>, text: &str, err: &mut dyn Write) -> Result<i32, Usage> {
    let f = formula(text, n)?;
    let opts = SynthOptions {
        pairing: pairing.map(|c| chain_arg(c, n)).transpose()?,
        ..SynthOptions::default()
    };
    match synthesize_with(&f, n, &opts) {
        Ok(p) => {
            ctx.emit(
                || write_proof(&p).trim_end().to_string(),
                || json!({ "lines": p.len(), "proof": write_proof(&p) }),
            )?;
            Ok(EXIT_YES)
        }
        Err(SynthError::NotATautology(w)) => {
            let detail = w.map(|w| format!(": false at world {}: {}", w.world, witness_text(&w)));
            writeln!(err, "not a tautology{}", detail.unwrap_or_default())?;
            Ok(EXIT_NO)
        }
        Err(e) => Err(e.into()),
    }
}

fn run_audit(ctx: &mut Ctx, n: u8) -> Result<i32, Usage> {
    let rows = SCHEMES.iter().map(|id| audit_scheme(id, n)).collect::<Result<Vec<_>, _>>()?;
    let failed: usize = rows.iter().map(|r| r.failures.len()).sum();
    ctx.emit(
        || {
            let mut s = format!("{:<30} {:<14} {:<10} {:>9} {:>8}  result\n", "scheme", "corpus", "condition", "instances", "failures");
            for r in &rows {
                let corpus = match r.scheme.corpus {
                    Corpus::Derivable => "derivable",
                    Corpus::NonDerivable => "non-derivable",
                };
                s.push_str(&format!(
                    "{:<30} {:<14} {:<10} {:>9} {:>8}  {}\n",
                    r.scheme.name,
                    corpus,
                    r.scheme.condition.to_string(),
                    r.instances,
                    r.failures.len(),
                    if r.passed() { "pass" } else { "FAIL" }
                ));
                for inst in &r.failures {
                    let why = match &inst.failure {
                        AuditFailure::NotTautology(_) => "not a tautology",
                        AuditFailure::NoCountermodel => "no countermodel",
                        AuditFailure::BadCountermodel(_) => "countermodel does not falsify",
                    };
                    s.push_str(&format!("    {}: {why}\n", inst.formula));
                }
            }
            s.push_str(&format!("{} schemes over {n} worlds, {failed} failures", rows.len()));
            s
        },
        || {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "scheme": r.scheme.name,
                        "text": r.scheme.text,
                        "derivable": r.scheme.corpus == Corpus::Derivable,
                        "instances": r.instances,
                        "failures": r.failures.iter().map(|i| i.formula.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({ "worlds": n, "rows": rows, "failures": failed })
        },
    )?;
    Ok(if failed == 0 { EXIT_YES } else { EXIT_NO })
}

/// Runs the command line `argv` (program name first), writing answers to
/// `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { format: cli.format, out };
    let result = match &cli.command {
        Command::Parse { worlds, formula: text } => formula(text, worlds.n).and_then(|f| {
            ctx.emit(|| f.to_string(), || json!({ "formula": f.to_string() }))?;
            Ok(EXIT_YES)
        }),
        Command::Check { worlds, formula } => run_check(&mut ctx, worlds.n, formula),
        Command::Countermodel { worlds, formula } => run_countermodel(&mut ctx, worlds.n, formula),
        Command::Entail { worlds, premises, goal } => run_entail(&mut ctx, worlds.n, premises, goal),
        Command::Prove(Prove::Check { file }) => run_prove_check(&mut ctx, file),
        Command::Prove(Prove::Synth { worlds, pairing, formula }) => {
            run_synth(&mut ctx, worlds.n, pairing.as_deref(), formula, err)
        }
        Command::Audit { worlds } => run_audit(&mut ctx, worlds.n),
    };
    match result {
        Ok(code) => code,
        Err(Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}
