//! Discharging premises: the deduction transform and reductio.

use alloc::vec::Vec;

use thiserror::Error;

use super::builder::ProofBuilder;
use super::check::{check_proof, CheckError};
use super::proof::{Justification, Proof};
use crate::formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("the proof has no premise to discharge")]
    EmptyPremises,
    #[error("input proof does not check: {0}")]
    InvalidInput(CheckError),
    #[error("the last premise is not a strong negation")]
    NotANegation,
    #[error("there is no line {0}")]
    BadLine(usize),
    #[error("line {neg} is not the strong negation of line {pos}")]
    NotContradictory { pos: usize, neg: usize },
}

/// Rebuilds `p` without its last premise `φ`. Each requested line
/// (by position in `p.lines`) comes back as a line deriving `φ → ψ`.
///
/// Lines that do not depend on `φ` are copied as they are; only the
/// dependent ones are rewritten through A1/A2.
pub(crate) fn discharge(p: &Proof, targets: &[usize]) -> (ProofBuilder, Vec<usize>) {
    let n = p.n;
    let last = p.premises.len();
    let phi = p.premises[last - 1].expand(n);
    let mut b = ProofBuilder::new(n, p.premises[..last - 1].to_vec());
    // For each input line: whether it depends on φ, and the output line
    // deriving ψ (independent) or φ → ψ (dependent).
    let mut dep: Vec<bool> = Vec::with_capacity(p.lines.len());
    let mut out: Vec<usize> = Vec::with_capacity(p.lines.len());
    let pos = |r: usize| p.position(r).expect("checked proof");
    for line in &p.lines {
        let psi = line.formula.expand(n);
        let (d, o) = match line.just {
            Justification::Premise(k) if k == last => (true, b.refl(&phi)),
            Justification::Premise(k) => (false, b.premise(k)),
            Justification::Axiom(id) => (false, b.axiom(id, psi)),
            Justification::Mp(i, j) => {
                let (i, j) = (pos(i), pos(j));
                if !dep[i] && !dep[j] {
                    (false, b.mp(out[i], out[j]))
                } else {
                    let ant = p.lines[j].formula.expand(n);
                    let imp = lifted(&mut b, &phi, dep[i], out[i]);
                    let ant_line = lifted(&mut b, &phi, dep[j], out[j]);
                    let a2 = b.a2(phi.clone(), ant, psi);
                    (true, b.mp2(a2, imp, ant_line))
                }
            }
        };
        dep.push(d);
        out.push(o);
    }
    let lines = targets
        .iter()
        .map(|&t| lifted(&mut b, &phi, dep[t], out[t]))
        .collect();
    (b, lines)
}

/// `φ → ψ` from a line deriving either that or `ψ` itself.
fn lifted(b: &mut ProofBuilder, phi: &Formula, dependent: bool, line: usize) -> usize {
    if dependent {
        return line;
    }
    let psi = b.formula(line).clone();
    let a1 = b.a1(psi, phi.clone());
    b.mp(a1, line)
}

/// From a proof of `Σ, φ ⊢ ψ` builds a proof of `Σ ⊢ φ → ψ`.
pub fn deduction_transform(p: &Proof) -> Result<Proof, DeductionError> {
    if p.premises.is_empty() {
        return Err(DeductionError::EmptyPremises);
    }
    check_proof(p).map_err(DeductionError::InvalidInput)?;
    Ok(deduction_unchecked(p))
}

pub(crate) fn deduction_unchecked(p: &Proof) -> Proof {
    let (b, lines) = discharge(p, &[p.lines.len() - 1]);
    b.finish(lines[0])
}

/// From a proof with last premise `¬_(n)φ` containing lines `ψ` (labelled
/// `pos`) and `¬_(n)ψ` (labelled `neg`), builds a proof of `φ` from the
/// remaining premises.
pub fn reductio_transform(p: &Proof, pos: usize, neg: usize) -> Result<Proof, DeductionError> {
    let Some(assumption) = p.premises.last() else {
        return Err(DeductionError::EmptyPremises);
    };
    check_proof(p).map_err(DeductionError::InvalidInput)?;
    let n = p.n;
    let Formula::Neg(c, phi) = assumption.expand(n) else {
        return Err(DeductionError::NotANegation);
    };
    if !c.is_full() {
        return Err(DeductionError::NotANegation);
    }
    let pi = p.position(pos).ok_or(DeductionError::BadLine(pos))?;
    let ni = p.position(neg).ok_or(DeductionError::BadLine(neg))?;
    let psi = p.lines[pi].formula.expand(n);
    if p.lines[ni].formula.expand(n) != Formula::strong_neg(n, psi.clone()) {
        return Err(DeductionError::NotContradictory { pos, neg });
    }
    let (mut b, lines) = discharge(p, &[pi, ni]);
    // (¬φ → ¬ψ) → ((¬φ → ψ) → φ)
    let a3 = b.a3(psi, (*phi).clone());
    let done = b.mp2(a3, lines[1], lines[0]);
    Ok(b.finish(done))
}
