//! Incremental proof construction with line sharing.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::axioms::{self, match_axiom_as};
use super::proof::{AxiomId, Justification, Proof, ProofLine};
use crate::chain::Chain;
use crate::formula::Formula;

/// Builds a proof line by line. A formula that is already derived is never
/// derived again: every push returns the existing line instead.
pub struct ProofBuilder {
    n: u8,
    premises: Vec<Formula>,
    lines: Vec<ProofLine>,
    known: BTreeMap<Formula, usize>,
}

impl ProofBuilder {
    pub fn new(n: u8, premises: Vec<Formula>) -> ProofBuilder {
        ProofBuilder {
            n,
            premises,
            lines: Vec::new(),
            known: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn premises(&self) -> &[Formula] {
        &self.premises
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Formula on line `index` (1-based).
    pub fn formula(&self, index: usize) -> &Formula {
        &self.lines[index - 1].formula
    }

    /// Line deriving `f`, if any.
    pub fn find(&self, f: &Formula) -> Option<usize> {
        self.known.get(f).copied()
    }

    fn push(&mut self, formula: Formula, just: Justification) -> usize {
        if let Some(&i) = self.known.get(&formula) {
            return i;
        }
        let index = self.lines.len() + 1;
        self.known.insert(formula.clone(), index);
        self.lines.push(ProofLine {
            index,
            formula,
            just,
        });
        index
    }

    /// Cites premise `k` (1-based).
    pub fn premise(&mut self, k: usize) -> usize {
        let f = self.premises[k - 1].expand(self.n);
        self.push(f, Justification::Premise(k))
    }

    /// Adds an axiom instance. `f` must be in core form.
    pub fn axiom(&mut self, id: AxiomId, f: Formula) -> usize {
        debug_assert!(match_axiom_as(id, &f).is_some(), "{f} is not an instance of {id}");
        self.push(f, Justification::Axiom(id))
    }

    /// Modus ponens from the implication on line `imp` and its antecedent on
    /// line `ant`.
    pub fn mp(&mut self, imp: usize, ant: usize) -> usize {
        let (lhs, rhs) = self
            .formula(imp)
            .as_imp()
            .unwrap_or_else(|| panic!("line {imp} is not an implication"));
        debug_assert_eq!(lhs, self.formula(ant), "antecedent mismatch");
        let rhs = rhs.clone();
        self.push(rhs, Justification::Mp(imp, ant))
    }

    /// Modus ponens twice: from `a → (b → c)`, `a` and `b`, derive `c`.
    pub fn mp2(&mut self, imp: usize, a: usize, b: usize) -> usize {
        let step = self.mp(imp, a);
        self.mp(step, b)
    }

    pub fn a1(&mut self, phi: Formula, psi: Formula) -> usize {
        self.axiom(AxiomId::A1, axioms::a1(phi, psi))
    }

    pub fn a2(&mut self, phi: Formula, psi: Formula, chi: Formula) -> usize {
        self.axiom(AxiomId::A2, axioms::a2(phi, psi, chi))
    }

    pub fn a3(&mut self, phi: Formula, psi: Formula) -> usize {
        let n = self.n;
        self.axiom(AxiomId::A3, axioms::a3(phi, psi, n))
    }

    pub fn a4(&mut self, phi: Formula, k: Chain) -> usize {
        self.axiom(AxiomId::A4, axioms::a4(phi, k))
    }

    pub fn a5(&mut self, phi: Formula, k: Chain, r: Chain) -> usize {
        self.axiom(AxiomId::A5, axioms::a5(phi, k, r))
    }

    pub fn a6(&mut self, k: Chain, r: Chain) -> usize {
        self.axiom(AxiomId::A6, axioms::a6(k, r))
    }

    pub fn a7(&mut self, k: Chain, r: Chain) -> usize {
        self.axiom(AxiomId::A7, axioms::a7(k, r))
    }

    /// `φ → φ` in five lines.
    pub fn refl(&mut self, phi: &Formula) -> usize {
        if let Some(i) = self.find(&Formula::imp(phi.clone(), phi.clone())) {
            return i;
        }
        let pp = Formula::imp(phi.clone(), phi.clone());
        let s1 = self.a2(phi.clone(), pp.clone(), phi.clone());
        let s2 = self.a1(phi.clone(), pp);
        let s3 = self.mp(s1, s2);
        let s4 = self.a1(phi.clone(), phi.clone());
        self.mp(s3, s4)
    }

    /// Copies `proof` in, citing `premise_lines[k - 1]` wherever it cites
    /// premise `k`. Returns the line of its conclusion.
    pub fn splice(&mut self, proof: &Proof, premise_lines: &[usize]) -> usize {
        self.splice_with(proof, premise_lines, |f| f.clone())
    }

    /// Like [`splice`](Self::splice), replacing atoms throughout first.
    pub fn splice_subst(
        &mut self,
        proof: &Proof,
        subst: &BTreeMap<Arc<str>, Formula>,
        premise_lines: &[usize],
    ) -> usize {
        self.splice_with(proof, premise_lines, |f| f.substitute_atoms(subst))
    }

    fn splice_with(
        &mut self,
        proof: &Proof,
        premise_lines: &[usize],
        map: impl Fn(&Formula) -> Formula,
    ) -> usize {
        let mut out: Vec<usize> = Vec::with_capacity(proof.lines.len());
        let at = |out: &Vec<usize>, r: usize| out[proof.position(r).expect("checked proof")];
        for line in &proof.lines {
            let i = match line.just {
                Justification::Premise(k) => {
                    let target = premise_lines[k - 1];
                    debug_assert_eq!(*self.formula(target), map(&line.formula.expand(proof.n)));
                    target
                }
                Justification::Axiom(id) => self.axiom(id, map(&line.formula.expand(proof.n))),
                Justification::Mp(i, j) => {
                    let (i, j) = (at(&out, i), at(&out, j));
                    self.mp(i, j)
                }
            };
            out.push(i);
        }
        *out.last().expect("nonempty proof")
    }

    /// Finishes with line `conclusion` as the last line, repeating it at
    /// the end if it was derived earlier.
    pub fn finish(mut self, conclusion: usize) -> Proof {
        if conclusion != self.lines.len() {
            let line = self.lines[conclusion - 1].clone();
            let index = self.lines.len() + 1;
            self.lines.push(ProofLine { index, ..line });
        }
        Proof {
            n: self.n,
            premises: self.premises,
            lines: self.lines,
        }
    }
}

/// Substitution map `A := a, B := b, C := c` for the template atoms.
pub(crate) fn abc(a: &Formula, b: Option<&Formula>, c: Option<&Formula>) -> BTreeMap<Arc<str>, Formula> {
    let mut m = BTreeMap::new();
    m.insert(Arc::from("A"), a.clone());
    if let Some(b) = b {
        m.insert(Arc::from("B"), b.clone());
    }
    if let Some(c) = c {
        m.insert(Arc::from("C"), c.clone());
    }
    m
}
