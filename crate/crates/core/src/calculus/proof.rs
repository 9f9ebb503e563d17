use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::chain::Chain;
use crate::formula::Formula;

/// One of the seven axiom schemas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
}

impl AxiomId {
    pub const ALL: [AxiomId; 7] = [
        AxiomId::A1,
        AxiomId::A2,
        AxiomId::A3,
        AxiomId::A4,
        AxiomId::A5,
        AxiomId::A6,
        AxiomId::A7,
    ];
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as u8 + 1)
    }
}

impl FromStr for AxiomId {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let digit = s.strip_prefix('A').or_else(|| s.strip_prefix('a')).ok_or(())?;
        match digit {
            "1" => Ok(AxiomId::A1),
            "2" => Ok(AxiomId::A2),
            "3" => Ok(AxiomId::A3),
            "4" => Ok(AxiomId::A4),
            "5" => Ok(AxiomId::A5),
            "6" => Ok(AxiomId::A6),
            "7" => Ok(AxiomId::A7),
            _ => Err(()),
        }
    }
}

/// Metavariable values recovered by matching a formula against a schema.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Bindings {
    pub phi: Option<Formula>,
    pub psi: Option<Formula>,
    pub chi: Option<Formula>,
    pub k: Option<Chain>,
    pub r: Option<Chain>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Justification {
    /// 1-based index into the proof's premise list.
    Premise(usize),
    Axiom(AxiomId),
    /// `Mp(i, j)`: line `i` is `φ → ψ`, line `j` is `φ`.
    Mp(usize, usize),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Premise(k) => write!(f, "premise {k}"),
            Justification::Axiom(id) => write!(f, "axiom {id}"),
            Justification::Mp(i, j) => write!(f, "mp {i} {j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub index: usize,
    pub formula: Formula,
    pub just: Justification,
}

/// A Hilbert-style derivation over `n` worlds. The conclusion is the last line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub n: u8,
    pub premises: Vec<Formula>,
    pub lines: Vec<ProofLine>,
}

impl Proof {
    pub fn new(n: u8, premises: Vec<Formula>) -> Proof {
        Proof {
            n,
            premises,
            lines: Vec::new(),
        }
    }

    /// Appends a line numbered after the current last one.
    pub fn push(&mut self, formula: Formula, just: Justification) -> usize {
        let index = self.lines.last().map_or(1, |l| l.index + 1);
        self.lines.push(ProofLine {
            index,
            formula,
            just,
        });
        index
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Position in `lines` of the line labelled `index`.
    pub fn position(&self, index: usize) -> Option<usize> {
        self.lines.binary_search_by_key(&index, |l| l.index).ok()
    }
}
