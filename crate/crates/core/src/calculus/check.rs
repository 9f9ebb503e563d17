use alloc::vec::Vec;

use thiserror::Error;

use super::axioms::match_axiom_as;
use super::proof::{AxiomId, Justification, Proof};
use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckErrorKind {
    #[error("proof has no lines")]
    EmptyProof,
    #[error("line numbers must be positive and strictly increasing")]
    BadLineIndex,
    #[error("there is no premise {0}")]
    BadPremiseIndex(usize),
    #[error("formula differs from premise {0}")]
    PremiseMismatch(usize),
    #[error("formula is not an instance of {0}")]
    AxiomMismatch(AxiomId),
    #[error("line {0} is referenced before it is derived")]
    ForwardReference(usize),
    #[error("there is no line {0}")]
    UnknownLine(usize),
    #[error("modus ponens: {0}")]
    BadMp(&'static str),
    #[error("formula uses chains over a different alphabet")]
    AlphabetMismatch,
}

/// A failed check, reported against the offending line's number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("error line {line}: {kind}")]
pub struct CheckError {
    pub line: usize,
    pub kind: CheckErrorKind,
}

/// Verifies every line. Formulas are compared after expansion, so sugar in
/// a proof is accepted wherever its core form would be.
pub fn check_proof(p: &Proof) -> Result<(), CheckError> {
    if p.lines.is_empty() {
        return Err(CheckError {
            line: 0,
            kind: CheckErrorKind::EmptyProof,
        });
    }
    let n = p.n;
    let mut expanded: Vec<Formula> = Vec::with_capacity(p.lines.len());
    let mut prev = 0;
    for line in &p.lines {
        let fail = |kind| {
            Err(CheckError {
                line: line.index,
                kind,
            })
        };
        if line.index <= prev {
            return fail(CheckErrorKind::BadLineIndex);
        }
        prev = line.index;
        if line.formula.check_alphabet(n).is_err() {
            return fail(CheckErrorKind::AlphabetMismatch);
        }
        let f = line.formula.expand(n);
        match line.just {
            Justification::Premise(k) => {
                let Some(premise) = k.checked_sub(1).and_then(|i| p.premises.get(i)) else {
                    return fail(CheckErrorKind::BadPremiseIndex(k));
                };
                if premise.check_alphabet(n).is_err() {
                    return fail(CheckErrorKind::AlphabetMismatch);
                }
                if premise.expand(n) != f {
                    return fail(CheckErrorKind::PremiseMismatch(k));
                }
            }
            Justification::Axiom(id) => {
                if match_axiom_as(id, &f).is_none() {
                    return fail(CheckErrorKind::AxiomMismatch(id));
                }
            }
            Justification::Mp(i, j) => {
                let lookup = |r: usize| {
                    if r >= line.index {
                        Err(CheckErrorKind::ForwardReference(r))
                    } else {
                        p.position(r)
                            .map(|pos| &expanded[pos])
                            .ok_or(CheckErrorKind::UnknownLine(r))
                    }
                };
                let (imp, ant) = match (lookup(i), lookup(j)) {
                    (Ok(a), Ok(b)) => (a, b),
                    (Err(e), _) | (_, Err(e)) => return fail(e),
                };
                let Some((lhs, rhs)) = imp.as_imp() else {
                    return fail(CheckErrorKind::BadMp("first reference is not an implication"));
                };
                if lhs != ant {
                    return fail(CheckErrorKind::BadMp(
                        "second reference is not the antecedent of the first",
                    ));
                }
                if *rhs != f {
                    return fail(CheckErrorKind::BadMp("formula is not the consequent"));
                }
            }
        }
        expanded.push(f);
    }
    Ok(())
}
