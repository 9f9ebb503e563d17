//! The line-oriented proof format.
//!
//! ```text
//! worlds 2
//! premise p
//! premise bot{1}
//! 1. p ; premise 1
//! 2. bot{1} ; premise 2
//! 3. p -> bot{1} -> ~{1} p ; axiom A4
//! 4. bot{1} -> ~{1} p ; mp 3 1
//! 5. ~{1} p ; mp 4 2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use cpn_core::{parse, AxiomId, Justification, ParseError, Proof, ProofLine};
use thiserror::Error;

#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct ProofFileError {
    /// 1-based line number in the file.
    pub line: usize,
    pub kind: ProofFileErrorKind,
}

#[derive(Debug, Error)]
pub enum ProofFileErrorKind {
    #[error("expected `worlds N` before anything else")]
    MissingWorlds,
    #[error("`worlds` given twice")]
    DuplicateWorlds,
    #[error("bad world count `{0}`")]
    BadWorlds(String),
    #[error("premises must come before the first step")]
    LatePremise,
    #[error("expected `<idx>. <formula> ; <justification>`")]
    BadStep,
    #[error("bad justification `{0}`")]
    BadJustification(String),
    #[error(transparent)]
    Formula(#[from] ParseError),
}

fn parse_justification(text: &str) -> Option<Justification> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words[..] {
        ["premise", k] => k.parse().ok().map(Justification::Premise),
        ["axiom", id] => id.parse::<AxiomId>().ok().map(Justification::Axiom),
        ["mp", i, j] => Some(Justification::Mp(i.parse().ok()?, j.parse().ok()?)),
        _ => None,
    }
}

/// Reads a proof. Line numbers in the file are kept as written, so the
/// checker reports them unchanged.
pub fn parse_proof(text: &str) -> Result<Proof, ProofFileError> {
    let mut proof: Option<Proof> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |kind| ProofFileError { line: i + 1, kind };
        if let Some(rest) = line.strip_prefix("worlds") {
            if proof.is_some() {
                return Err(fail(ProofFileErrorKind::DuplicateWorlds));
            }
            let n: u8 = rest
                .trim()
                .parse()
                .ok()
                .filter(|n| (1..=cpn_core::MAX_WORLDS).contains(n))
                .ok_or_else(|| fail(ProofFileErrorKind::BadWorlds(rest.trim().to_string())))?;
            proof = Some(Proof::new(n, Vec::new()));
            continue;
        }
        let p = proof.as_mut().ok_or_else(|| fail(ProofFileErrorKind::MissingWorlds))?;
        if let Some(rest) = line.strip_prefix("premise ") {
            if !p.lines.is_empty() {
                return Err(fail(ProofFileErrorKind::LatePremise));
            }
            let f = parse(rest, p.n).map_err(|e| fail(e.into()))?;
            p.premises.push(f);
            continue;
        }
        let (index, rest) = line.split_once('.').ok_or_else(|| fail(ProofFileErrorKind::BadStep))?;
        let index: usize = index.trim().parse().map_err(|_| fail(ProofFileErrorKind::BadStep))?;
        let (formula, just) = rest.rsplit_once(';').ok_or_else(|| fail(ProofFileErrorKind::BadStep))?;
        let just = parse_justification(just)
            .ok_or_else(|| fail(ProofFileErrorKind::BadJustification(just.trim().to_string())))?;
        let formula = parse(formula, p.n).map_err(|e| fail(e.into()))?;
        p.lines.push(ProofLine { index, formula, just });
    }
    proof.ok_or(ProofFileError {
        line: text.lines().count().max(1),
        kind: ProofFileErrorKind::MissingWorlds,
    })
}

pub fn write_proof(p: &Proof) -> String {
    let mut out = format!("worlds {}\n", p.n);
    for f in &p.premises {
        let _ = writeln!(out, "premise {f}");
    }
    for l in &p.lines {
        let _ = writeln!(out, "{}. {} ; {}", l.index, l.formula, l.just);
    }
    out
}
