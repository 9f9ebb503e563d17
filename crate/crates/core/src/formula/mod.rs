//! Formula syntax: the AST, its concrete grammar, desugaring and
//! substitution.
//!
//! The core language has atoms, indexed bottoms `⊥_c`, indexed negations
//! `¬_c` and implication. Conjunction, disjunction and the biconditional are
//! kept as first-class nodes so they can be evaluated directly; [`Formula::expand`]
//! rewrites them into the core when a proof needs the canonical surface.

mod parse;
mod print;
mod schema;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::chain::{Chain, ChainError};

pub use parse::{parse, parse_schema, ParseError, SourceSpan};
pub use schema::{substitute, ChainExpr, Schema, SubstError};

/// A formula. Children are shared, so cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Bottom(Chain),
    Neg(Chain, Arc<Formula>),
    Imp(Arc<Formula>, Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Iff(Arc<Formula>, Arc<Formula>),
}

/// Whether `name` is a legal atom identifier (and not a keyword).
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && name != "bot" && name != "top"
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Arc::from(name))
    }

    pub fn bottom(c: Chain) -> Formula {
        Formula::Bottom(c)
    }

    /// `⊤_(n)`, written as `⊥_ε`.
    pub fn top(n: u8) -> Formula {
        Formula::Bottom(Chain::empty(n))
    }

    pub fn neg(c: Chain, body: Formula) -> Formula {
        Formula::Neg(c, Arc::new(body))
    }

    /// Strong negation `¬_(n)`.
    pub fn strong_neg(n: u8, body: Formula) -> Formula {
        Formula::neg(Chain::full(n), body)
    }

    pub fn imp(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Imp(Arc::new(lhs), Arc::new(rhs))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(Arc::new(lhs), Arc::new(rhs))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(Arc::new(lhs), Arc::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Iff(Arc::new(lhs), Arc::new(rhs))
    }

    /// `¬_c φ`, collapsing to `φ` when `c` is empty.
    pub fn neg_or_self(c: Chain, body: Formula) -> Formula {
        if c.is_empty() {
            body
        } else {
            Formula::neg(c, body)
        }
    }

    /// The two sides of an implication.
    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Imp(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// True when the formula uses only atoms, nonempty bottoms, nonempty
    /// negations and implication.
    pub fn is_core(&self) -> bool {
        match self {
            Formula::Atom(_) => true,
            Formula::Bottom(c) => !c.is_empty(),
            Formula::Neg(c, body) => !c.is_empty() && body.is_core(),
            Formula::Imp(a, b) => a.is_core() && b.is_core(),
            Formula::And(..) | Formula::Or(..) | Formula::Iff(..) => false,
        }
    }

    /// Rewrites the formula into the core language over `[n]`.
    ///
    /// `φ ∨ ψ` becomes `¬_(n)φ → ψ`, `φ ∧ ψ` becomes `¬_(n)(φ → ¬_(n)ψ)`,
    /// `φ ↔ ψ` becomes `(φ → ψ) ∧ (ψ → φ)` (then expanded), `¬_ε φ` becomes
    /// `φ`, and `⊤ = ⊥_ε` becomes `⊥_(n) → ⊥_(n)`.
    pub fn expand(&self, n: u8) -> Formula {
        if self.is_core() {
            return self.clone();
        }
        let full = Chain::full(n);
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Bottom(c) if c.is_empty() => {
                Formula::imp(Formula::Bottom(full), Formula::Bottom(full))
            }
            Formula::Bottom(_) => self.clone(),
            Formula::Neg(c, body) if c.is_empty() => body.expand(n),
            Formula::Neg(c, body) => Formula::neg(*c, body.expand(n)),
            Formula::Imp(a, b) => Formula::imp(a.expand(n), b.expand(n)),
            Formula::And(a, b) => core_and(n, a.expand(n), b.expand(n)),
            Formula::Or(a, b) => Formula::imp(Formula::neg(full, a.expand(n)), b.expand(n)),
            Formula::Iff(a, b) => {
                let (a, b) = (a.expand(n), b.expand(n));
                core_and(n, Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
            }
        }
    }

    /// Atom names in order of first occurrence, without duplicates.
    pub fn atoms(&self) -> Vec<Arc<str>> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut Vec<Arc<str>>) {
        match self {
            Formula::Atom(name) => {
                if !out.iter().any(|seen| seen == name) {
                    out.push(name.clone());
                }
            }
            Formula::Bottom(_) => {}
            Formula::Neg(_, body) => body.collect_atoms(out),
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Calls `f` on every chain in the formula.
    pub fn for_each_chain(&self, f: &mut impl FnMut(&Chain)) {
        match self {
            Formula::Atom(_) => {}
            Formula::Bottom(c) => f(c),
            Formula::Neg(c, body) => {
                f(c);
                body.for_each_chain(f);
            }
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                a.for_each_chain(f);
                b.for_each_chain(f);
            }
        }
    }

    /// The alphabet size of the first chain, if the formula has one.
    pub fn alphabet(&self) -> Option<u8> {
        let mut found = None;
        self.for_each_chain(&mut |c| {
            found.get_or_insert(c.alphabet());
        });
        found
    }

    /// Checks that every chain is over `[n]`.
    pub fn check_alphabet(&self, n: u8) -> Result<(), ChainError> {
        let mut err = None;
        self.for_each_chain(&mut |c| {
            if err.is_none() && c.alphabet() != n {
                err = Some(ChainError::AlphabetMismatch {
                    left: c.alphabet(),
                    right: n,
                });
            }
        });
        err.map_or(Ok(()), Err)
    }

    /// The same formula with every chain read over `[n]`.
    pub fn realphabet(&self, n: u8) -> Result<Formula, ChainError> {
        Ok(match self {
            Formula::Atom(_) => self.clone(),
            Formula::Bottom(c) => Formula::Bottom(c.realphabet(n)?),
            Formula::Neg(c, body) => Formula::neg(c.realphabet(n)?, body.realphabet(n)?),
            Formula::Imp(a, b) => Formula::imp(a.realphabet(n)?, b.realphabet(n)?),
            Formula::And(a, b) => Formula::and(a.realphabet(n)?, b.realphabet(n)?),
            Formula::Or(a, b) => Formula::or(a.realphabet(n)?, b.realphabet(n)?),
            Formula::Iff(a, b) => Formula::iff(a.realphabet(n)?, b.realphabet(n)?),
        })
    }

    /// Simultaneous replacement of atoms. Atoms without an entry stay put.
    pub fn substitute_atoms(&self, map: &BTreeMap<Arc<str>, Formula>) -> Formula {
        match self {
            Formula::Atom(name) => map.get(name).cloned().unwrap_or_else(|| self.clone()),
            Formula::Bottom(_) => self.clone(),
            Formula::Neg(c, body) => Formula::neg(*c, body.substitute_atoms(map)),
            Formula::Imp(a, b) => Formula::imp(a.substitute_atoms(map), b.substitute_atoms(map)),
            Formula::And(a, b) => Formula::and(a.substitute_atoms(map), b.substitute_atoms(map)),
            Formula::Or(a, b) => Formula::or(a.substitute_atoms(map), b.substitute_atoms(map)),
            Formula::Iff(a, b) => Formula::iff(a.substitute_atoms(map), b.substitute_atoms(map)),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom(_) => 1,
            Formula::Neg(_, body) => 1 + body.size(),
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// Height of the syntax tree; atoms and bottoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom(_) => 0,
            Formula::Neg(_, body) => 1 + body.depth(),
            Formula::Imp(a, b) | Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }
}

/// Core encoding of conjunction: `¬_(n)(a → ¬_(n)b)`.
pub(crate) fn core_and(n: u8, a: Formula, b: Formula) -> Formula {
    let full = Chain::full(n);
    Formula::neg(full, Formula::imp(a, Formula::neg(full, b)))
}

/// Core encoding of the biconditional.
pub(crate) fn core_iff(n: u8, a: Formula, b: Formula) -> Formula {
    core_and(n, Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
}
