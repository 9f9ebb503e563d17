//! Proof synthesis for tautologies, following the completeness argument.
//!
//! For a valuation `V`, write `φ^V` for `¬_c φ` where `c` is the chain of
//! worlds in which `φ` is false (so `φ^V = φ` when `φ` is true everywhere).
//! By induction on `f`, `p_m^V, …, p_1^V ⊢ f^V`. When `f` is a tautology
//! `f^V = f`, and the premises are removed one atom at a time: the
//! derivations under `¬_c p` and under `¬_c' p` are joined by cases on
//! `¬_c p`, using `¬_(n)¬_c p ↔ ¬_c' p`.
//!
//! Implication steps use templates `¬_k A → (¬_s B → ¬_(s⊗(k∩s))(A → B))`,
//! one per chain pair, proved by the world-split prover and cached.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use thiserror::Error;

use super::axioms::match_axiom;
use super::builder::{abc, ProofBuilder};
use super::classical::Classical;
use super::deduction::deduction_unchecked;
use super::proof::{Justification, Proof};
use super::worlds::prove_by_worlds;
use crate::chain::{Chain, ChainError};
use crate::formula::Formula;
use crate::semantics::{classify, SemanticsError, VerdictKind, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("not a tautology")]
    NotATautology(Option<Witness>),
    #[error("{what} {value} exceeds the synthesis bound {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynthOptions {
    pub max_atoms: usize,
    pub max_worlds: u8,
    /// Chain `c` whose cases `¬_c p` / `¬_c' p` are joined when an atom is
    /// eliminated. `None` means the empty chain, i.e. `p` against `¬_(n) p`.
    pub pairing: Option<Chain>,
}

impl Default for SynthOptions {
    fn default() -> Self {
        SynthOptions {
            max_atoms: 3,
            max_worlds: 3,
            pairing: None,
        }
    }
}

/// Proof synthesis for a fixed alphabet size, caching the templates.
pub struct Synthesizer {
    n: u8,
    lib: Classical,
    templates: RefCell<BTreeMap<(Chain, Chain), Arc<Proof>>>,
}

impl Synthesizer {
    pub fn new(n: u8) -> Synthesizer {
        Synthesizer {
            n,
            lib: Classical::new(n),
            templates: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn library(&self) -> &Classical {
        &self.lib
    }

    /// `⊢ ¬_k A → (¬_s B → ¬_(s⊗(k∩s))(A → B))`.
    pub fn implication_template(&self, k: Chain, s: Chain) -> Arc<Proof> {
        if let Some(p) = self.templates.borrow().get(&(k, s)) {
            return p.clone();
        }
        let (a, b) = (Formula::atom("A"), Formula::atom("B"));
        let g = Formula::imp(
            Formula::neg_or_self(k, a.clone()),
            Formula::imp(
                Formula::neg_or_self(s, b.clone()),
                Formula::neg_or_self(implication_class(k, s), Formula::imp(a, b)),
            ),
        );
        let p = Arc::new(prove_by_worlds(&g, self.n, &self.lib));
        self.templates.borrow_mut().insert((k, s), p.clone());
        p
    }

    /// A premise-free proof of `f` (in core form).
    pub fn synthesize(&self, f: &Formula, opts: &SynthOptions) -> Result<Proof, SynthError> {
        let n = self.n;
        if n > opts.max_worlds {
            return Err(SynthError::BoundExceeded {
                what: "world count",
                value: n as usize,
                max: opts.max_worlds as usize,
            });
        }
        f.check_alphabet(n)?;
        let g = f.expand(n);
        let atoms = g.atoms();
        if atoms.len() > opts.max_atoms {
            return Err(SynthError::BoundExceeded {
                what: "atom count",
                value: atoms.len(),
                max: opts.max_atoms,
            });
        }
        let verdict = classify(&g, n)?;
        if verdict.kind != VerdictKind::Tautology {
            return Err(SynthError::NotATautology(verdict.witness_false));
        }
        if let Some((id, _)) = match_axiom(&g) {
            let mut p = Proof::new(n, Vec::new());
            p.push(g, Justification::Axiom(id));
            return Ok(p);
        }
        let pairing = match opts.pairing {
            Some(c) if c.alphabet() != n => {
                return Err(ChainError::AlphabetMismatch {
                    left: c.alphabet(),
                    right: n,
                }
                .into())
            }
            Some(c) => c,
            None => Chain::empty(n),
        };
        let mut choice = Vec::with_capacity(atoms.len());
        Ok(self.eliminate(&g, &atoms, pairing, &mut choice))
    }

    /// Contingency chain of atom `k`'s premise: `false` picks the pairing
    /// chain, `true` its complement. `choice[j]` belongs to atom `m - 1 - j`.
    fn atom_class(pairing: Chain, choice: &[bool], m: usize, k: usize) -> Chain {
        if choice[m - 1 - k] {
            pairing.complement()
        } else {
            pairing
        }
    }

    /// Premises `[p_m^V, …, p_j^V]` for the atoms fixed by `choice`.
    fn premises(&self, atoms: &[Arc<str>], pairing: Chain, choice: &[bool]) -> Vec<Formula> {
        let m = atoms.len();
        (0..choice.len())
            .map(|j| {
                let k = m - 1 - j;
                Formula::neg_or_self(
                    Self::atom_class(pairing, choice, m, k),
                    Formula::Atom(atoms[k].clone()),
                )
            })
            .collect()
    }

    fn eliminate(&self, g: &Formula, atoms: &[Arc<str>], pairing: Chain, choice: &mut Vec<bool>) -> Proof {
        let n = self.n;
        let m = atoms.len();
        let premises = self.premises(atoms, pairing, choice);
        if choice.len() == m {
            let mut b = ProofBuilder::new(n, premises);
            let lines: Vec<usize> = (0..m).map(|k| b.premise(m - k)).collect();
            let (line, class) = self.hat(&mut b, g, atoms, &lines, pairing, choice);
            debug_assert!(class.is_empty(), "tautology is true everywhere");
            return b.finish(line);
        }
        // Next atom to fix, counting down from p_m; p_1 is the innermost
        // premise and is discharged first.
        let k = m - 1 - choice.len();
        choice.push(false);
        let first = deduction_unchecked(&self.eliminate(g, atoms, pairing, choice));
        choice.pop();
        choice.push(true);
        let second = deduction_unchecked(&self.eliminate(g, atoms, pairing, choice));
        choice.pop();

        let lib = &self.lib;
        let full = Chain::full(n);
        let p = Formula::Atom(atoms[k].clone());
        let mut b = ProofBuilder::new(n, premises);
        let ids: Vec<usize> = (1..=b.premises().len()).map(|i| b.premise(i)).collect();
        // ¬_c p → g and ¬_c' p → g
        let l1 = b.splice(&first, &ids);
        let l2 = b.splice(&second, &ids);
        let pc = Formula::neg_or_self(pairing, p.clone());
        let l2 = if pairing.is_empty() {
            l2
        } else {
            // ¬¬_c p → ¬_c' p, then chain with ¬_c' p → g.
            let iff = b.a5(p, full, pairing);
            let lr = lib.iff_lr(&mut b, iff);
            lib.chain(&mut b, lr, l2)
        };
        let c = lib.cases_at(&mut b, &pc, g);
        let done = b.mp2(c, l1, l2);
        b.finish(done)
    }

    /// Derives `f^V` and returns its line with `f`'s contingency chain.
    fn hat(
        &self,
        b: &mut ProofBuilder,
        f: &Formula,
        atoms: &[Arc<str>],
        atom_lines: &[usize],
        pairing: Chain,
        choice: &[bool],
    ) -> (usize, Chain) {
        let n = self.n;
        let lib = &self.lib;
        match f {
            Formula::Atom(name) => {
                let k = atoms.iter().position(|a| a == name).expect("known atom");
                (atom_lines[k], Self::atom_class(pairing, choice, atoms.len(), k))
            }
            Formula::Bottom(c) => {
                // ¬_c⊥_c ↔ ⊤
                let iff = b.a6(*c, *c);
                let top = lib.top_at(b);
                (lib.forward(b, iff, top, true), *c)
            }
            Formula::Neg(s, x) => {
                let (lx, k) = self.hat(b, x, atoms, atom_lines, pairing, choice);
                let class = k.coconcat(s).expect("same alphabet");
                let x = (**x).clone();
                let line = if k.is_empty() {
                    // x ⊢ ¬_s¬_s x
                    let iff = b.a5(x, *s, *s);
                    lib.forward(b, iff, lx, true)
                } else if class.is_empty() {
                    lx
                } else {
                    // ¬_k x ⊢ ¬_(k⊗s)¬_s x
                    let iff = b.a5(x, class, *s);
                    lib.forward(b, iff, lx, true)
                };
                (line, class)
            }
            Formula::Imp(x, y) => {
                let (lx, k) = self.hat(b, x, atoms, atom_lines, pairing, choice);
                let (ly, s) = self.hat(b, y, atoms, atom_lines, pairing, choice);
                let t = self.implication_template(k, s);
                let inst = b.splice_subst(&t, &abc(x, Some(y), None), &[]);
                (b.mp2(inst, lx, ly), implication_class(k, s))
            }
            Formula::And(..) | Formula::Or(..) | Formula::Iff(..) => {
                let _ = n;
                unreachable!("synthesis works on core formulas")
            }
        }
    }
}

/// Worlds where `x → y` is false, given those where `x` and `y` are:
/// `s ⊗ (k ∩ s)`.
pub fn implication_class(k: Chain, s: Chain) -> Chain {
    let common = k.common(&s).expect("same alphabet");
    s.coconcat(&common).expect("same alphabet")
}

/// A premise-free, checkable proof of the tautology `f` over `n` worlds,
/// with default bounds (at most 3 atoms and 3 worlds).
pub fn synthesize_proof(f: &Formula, n: u8) -> Result<Proof, SynthError> {
    synthesize_with(f, n, &SynthOptions::default())
}

pub fn synthesize_with(f: &Formula, n: u8, opts: &SynthOptions) -> Result<Proof, SynthError> {
    if n == 0 || n > opts.max_worlds {
        return Err(SynthError::BoundExceeded {
            what: "world count",
            value: n as usize,
            max: opts.max_worlds as usize,
        });
    }
    Synthesizer::new(n).synthesize(f, opts)
}
