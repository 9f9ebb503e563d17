//! Classical theorems over strong negation, proved once from A1–A3 and
//! reused by substitution.
//!
//! Each template is a premise-free proof over the atoms `A`, `B` (and `C`).
//! Uniform substitution maps axiom instances to axiom instances, so any
//! instance of a template is again a valid proof.

use alloc::vec;

use super::axioms::core_bottom;
use super::builder::{abc, ProofBuilder};
use super::deduction::deduction_unchecked;
use super::proof::Proof;
use crate::chain::Chain;
use crate::formula::Formula;

/// The template library for one alphabet size.
pub struct Classical {
    n: u8,
    /// `A → A`
    pub refl: Proof,
    /// `(A → B) → ((B → C) → (A → C))`
    pub syllogism: Proof,
    /// `¬A → (A → B)`
    pub efq: Proof,
    /// `¬¬A → A`
    pub dne: Proof,
    /// `A → ¬¬A`
    pub dni: Proof,
    /// `(¬B → ¬A) → (A → B)`
    pub contrapos_rev: Proof,
    /// `(A → B) → (¬B → ¬A)`
    pub mt: Proof,
    /// `A → (¬B → ¬(A → B))`
    pub imp_intro_neg: Proof,
    /// `(A → B) → ((¬A → B) → B)`
    pub cases: Proof,
    /// `(¬A → A) → A`
    pub mirabilis: Proof,
    /// `¬(A → ¬B) → A`
    pub and_l: Proof,
    /// `¬(A → ¬B) → B`
    pub and_r: Proof,
    /// `A → (B → ¬(A → ¬B))`
    pub and_intro: Proof,
    /// `¬_(n) ⊥_(n)`
    pub neg_bot_full: Proof,
}

fn atom(name: &str) -> Formula {
    Formula::atom(name)
}

fn discharge_all(mut p: Proof) -> Proof {
    while !p.premises.is_empty() {
        p = deduction_unchecked(&p);
    }
    p
}

impl Classical {
    pub fn new(n: u8) -> Classical {
        let (a, b, c) = (atom("A"), atom("B"), atom("C"));
        let neg = |f: &Formula| Formula::strong_neg(n, f.clone());

        let refl = {
            let mut pb = ProofBuilder::new(n, vec![]);
            let l = pb.refl(&a);
            pb.finish(l)
        };

        let syllogism = {
            let imp = Formula::imp;
            let mut pb = ProofBuilder::new(n, vec![imp(a.clone(), b.clone()), imp(b.clone(), c.clone()), a.clone()]);
            let (ab, bc, pa) = (pb.premise(1), pb.premise(2), pb.premise(3));
            let pbb = pb.mp(ab, pa);
            let pc = pb.mp(bc, pbb);
            discharge_all(pb.finish(pc))
        };

        let efq = {
            let mut pb = ProofBuilder::new(n, vec![neg(&a), a.clone()]);
            let (na, pa) = (pb.premise(1), pb.premise(2));
            let t1 = pb.a1(neg(&a), neg(&b));
            let nb_na = pb.mp(t1, na);
            let t3 = pb.a3(a.clone(), b.clone());
            let t4 = pb.mp(t3, nb_na);
            let t5 = pb.a1(a.clone(), neg(&b));
            let nb_a = pb.mp(t5, pa);
            let pbb = pb.mp(t4, nb_a);
            discharge_all(pb.finish(pbb))
        };

        let dne = {
            let mut pb = ProofBuilder::new(n, vec![neg(&neg(&a))]);
            let nna = pb.premise(1);
            let t3 = pb.a3(neg(&a), a.clone());
            let t1 = pb.a1(neg(&neg(&a)), neg(&a));
            let na_nna = pb.mp(t1, nna);
            let s = pb.mp(t3, na_nna);
            let r = pb.refl(&neg(&a));
            let pa = pb.mp(s, r);
            discharge_all(pb.finish(pa))
        };

        let mut lib = Classical {
            n,
            refl,
            syllogism,
            efq,
            dne,
            dni: Proof::new(n, vec![]),
            contrapos_rev: Proof::new(n, vec![]),
            mt: Proof::new(n, vec![]),
            imp_intro_neg: Proof::new(n, vec![]),
            cases: Proof::new(n, vec![]),
            mirabilis: Proof::new(n, vec![]),
            and_l: Proof::new(n, vec![]),
            and_r: Proof::new(n, vec![]),
            and_intro: Proof::new(n, vec![]),
            neg_bot_full: Proof::new(n, vec![]),
        };

        lib.dni = {
            let nnna = neg(&neg(&neg(&a)));
            let mut pb = ProofBuilder::new(n, vec![a.clone()]);
            let pa = pb.premise(1);
            let t3 = pb.a3(a.clone(), neg(&neg(&a)));
            let d = lib.dne_at(&mut pb, &neg(&a));
            let s = pb.mp(t3, d);
            let t1 = pb.a1(a.clone(), nnna);
            let l = pb.mp(t1, pa);
            let nna = pb.mp(s, l);
            discharge_all(pb.finish(nna))
        };

        lib.contrapos_rev = {
            let mut pb = ProofBuilder::new(n, vec![Formula::imp(neg(&b), neg(&a)), a.clone()]);
            let (h, pa) = (pb.premise(1), pb.premise(2));
            let t3 = pb.a3(a.clone(), b.clone());
            let s = pb.mp(t3, h);
            let t1 = pb.a1(a.clone(), neg(&b));
            let l = pb.mp(t1, pa);
            let pbb = pb.mp(s, l);
            discharge_all(pb.finish(pbb))
        };

        lib.mt = {
            // A → B, ¬¬A ⊢ ¬¬B, then contraposition.
            let ab = Formula::imp(a.clone(), b.clone());
            let mut pb = ProofBuilder::new(n, vec![ab.clone(), neg(&neg(&a))]);
            let (h, nna) = (pb.premise(1), pb.premise(2));
            let d = lib.dne_at(&mut pb, &a);
            let pa = pb.mp(d, nna);
            let pbb = pb.mp(h, pa);
            let i = lib.dni_at(&mut pb, &b);
            let nnb = pb.mp(i, pbb);
            let inner = deduction_unchecked(&pb.finish(nnb));

            let mut pb = ProofBuilder::new(n, vec![ab]);
            let h = pb.premise(1);
            let l = pb.splice(&inner, &[h]);
            let cr = pb.splice_subst(&lib.contrapos_rev, &abc(&neg(&b), Some(&neg(&a)), None), &[]);
            let done = pb.mp(cr, l);
            discharge_all(pb.finish(done))
        };

        lib.imp_intro_neg = {
            let ab = Formula::imp(a.clone(), b.clone());
            let mut pb = ProofBuilder::new(n, vec![a.clone(), ab.clone()]);
            let (pa, h) = (pb.premise(1), pb.premise(2));
            let pbb = pb.mp(h, pa);
            let inner = deduction_unchecked(&pb.finish(pbb));

            let mut pb = ProofBuilder::new(n, vec![a.clone(), neg(&b)]);
            let (pa, nb) = (pb.premise(1), pb.premise(2));
            let l = pb.splice(&inner, &[pa]);
            let m = lib.mt_at(&mut pb, &ab, &b);
            let done = pb.mp2(m, l, nb);
            discharge_all(pb.finish(done))
        };

        lib.cases = {
            let mut pb = ProofBuilder::new(
                n,
                vec![Formula::imp(a.clone(), b.clone()), Formula::imp(neg(&a), b.clone())],
            );
            let (h1, h2) = (pb.premise(1), pb.premise(2));
            let m1 = lib.mt_at(&mut pb, &a, &b);
            let nb_na = pb.mp(m1, h1);
            let m2 = lib.mt_at(&mut pb, &neg(&a), &b);
            let nb_nna = pb.mp(m2, h2);
            let t3 = pb.a3(neg(&a), b.clone());
            let done = pb.mp2(t3, nb_nna, nb_na);
            discharge_all(pb.finish(done))
        };

        lib.mirabilis = {
            let mut pb = ProofBuilder::new(n, vec![]);
            let t3 = pb.a3(a.clone(), a.clone());
            let r = pb.refl(&neg(&a));
            let done = pb.mp(t3, r);
            pb.finish(done)
        };

        let conj = Formula::strong_neg(n, Formula::imp(a.clone(), neg(&b)));

        lib.and_l = {
            let mut pb = ProofBuilder::new(n, vec![conj.clone()]);
            let h = pb.premise(1);
            let e = lib.efq_at(&mut pb, &a, &neg(&b));
            let m = lib.mt_at(&mut pb, &neg(&a), &Formula::imp(a.clone(), neg(&b)));
            let nnx = pb.mp2(m, e, h);
            let d = lib.dne_at(&mut pb, &a);
            let done = pb.mp(d, nnx);
            discharge_all(pb.finish(done))
        };

        lib.and_r = {
            let mut pb = ProofBuilder::new(n, vec![conj.clone()]);
            let h = pb.premise(1);
            let t1 = pb.a1(neg(&b), a.clone());
            let m = lib.mt_at(&mut pb, &neg(&b), &Formula::imp(a.clone(), neg(&b)));
            let nnb = pb.mp2(m, t1, h);
            let d = lib.dne_at(&mut pb, &b);
            let done = pb.mp(d, nnb);
            discharge_all(pb.finish(done))
        };

        lib.and_intro = {
            let mut pb = ProofBuilder::new(n, vec![a.clone(), b.clone()]);
            let (pa, pbb) = (pb.premise(1), pb.premise(2));
            let i = lib.dni_at(&mut pb, &b);
            let nnb = pb.mp(i, pbb);
            let t = lib.imp_intro_neg_at(&mut pb, &a, &neg(&b));
            let done = pb.mp2(t, pa, nnb);
            discharge_all(pb.finish(done))
        };

        lib.neg_bot_full = {
            let full = Chain::full(n);
            let mut pb = ProofBuilder::new(n, vec![]);
            let iff = pb.a6(full, full);
            let rl = lib.iff_rl(&mut pb, iff);
            let r = pb.refl(&Formula::Bottom(full));
            let done = pb.mp(rl, r);
            pb.finish(done)
        };

        lib
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    fn inst(&self, b: &mut ProofBuilder, t: &Proof, x: &Formula, y: Option<&Formula>, z: Option<&Formula>) -> usize {
        b.splice_subst(t, &abc(x, y, z), &[])
    }

    /// `(x → y) → ((y → z) → (x → z))`
    pub fn syllogism_at(&self, b: &mut ProofBuilder, x: &Formula, y: &Formula, z: &Formula) -> usize {
        self.inst(b, &self.syllogism, x, Some(y), Some(z))
    }

    /// From lines `x → y` and `y → z`, the line `x → z`.
    pub fn chain(&self, b: &mut ProofBuilder, xy: usize, yz: usize) -> usize {
        let (x, y) = split_imp(b.formula(xy));
        let (_, z) = split_imp(b.formula(yz));
        let s = self.syllogism_at(b, &x, &y, &z);
        b.mp2(s, xy, yz)
    }

    /// `¬x → (x → y)`
    pub fn efq_at(&self, b: &mut ProofBuilder, x: &Formula, y: &Formula) -> usize {
        self.inst(b, &self.efq, x, Some(y), None)
    }

    /// `¬¬x → x`
    pub fn dne_at(&self, b: &mut ProofBuilder, x: &Formula) -> usize {
        self.inst(b, &self.dne, x, None, None)
    }

    /// `x → ¬¬x`
    pub fn dni_at(&self, b: &mut ProofBuilder, x: &Formula) -> usize {
        self.inst(b, &self.dni, x, None, None)
    }

    /// `(x → y) → (¬y → ¬x)`
    pub fn mt_at(&self, b: &mut ProofBuilder, x: &Formula, y: &Formula) -> usize {
        self.inst(b, &self.mt, x, Some(y), None)
    }

    /// `x → (¬y → ¬(x → y))`
    pub fn imp_intro_neg_at(&self, b: &mut ProofBuilder, x: &Formula, y: &Formula) -> usize {
        self.inst(b, &self.imp_intro_neg, x, Some(y), None)
    }

    /// `(x → y) → ((¬x → y) → y)`
    pub fn cases_at(&self, b: &mut ProofBuilder, x: &Formula, y: &Formula) -> usize {
        self.inst(b, &self.cases, x, Some(y), None)
    }

    /// `(¬x → x) → x`
    pub fn mirabilis_at(&self, b: &mut ProofBuilder, x: &Formula) -> usize {
        self.inst(b, &self.mirabilis, x, None, None)
    }

    /// `¬_(n) ⊥_(n)`
    pub fn neg_bot_full_at(&self, b: &mut ProofBuilder) -> usize {
        b.splice(&self.neg_bot_full, &[])
    }

    /// `x → y` from the line of a core biconditional `x ↔ y`.
    pub fn iff_lr(&self, b: &mut ProofBuilder, iff: usize) -> usize {
        let (lr, rl) = iff_halves(b.formula(iff));
        let t = self.inst(b, &self.and_l, &lr, Some(&rl), None);
        b.mp(t, iff)
    }

    /// `y → x` from the line of a core biconditional `x ↔ y`.
    pub fn iff_rl(&self, b: &mut ProofBuilder, iff: usize) -> usize {
        let (lr, rl) = iff_halves(b.formula(iff));
        let t = self.inst(b, &self.and_r, &lr, Some(&rl), None);
        b.mp(t, iff)
    }

    /// From line `x` and line `x → y`, or the reverse direction of an
    /// A5/A6 biconditional, whichever is supplied.
    pub fn forward(&self, b: &mut ProofBuilder, iff: usize, from: usize, right_to_left: bool) -> usize {
        let imp = if right_to_left {
            self.iff_rl(b, iff)
        } else {
            self.iff_lr(b, iff)
        };
        b.mp(imp, from)
    }

    /// `⊥_c` in core form (`⊥_ε` is `⊥_(n) → ⊥_(n)`) when it is a theorem;
    /// only used for `c = ε`.
    pub fn top_at(&self, b: &mut ProofBuilder) -> usize {
        let full = Formula::Bottom(Chain::full(self.n));
        debug_assert_eq!(core_bottom(Chain::empty(self.n)), Formula::imp(full.clone(), full.clone()));
        b.refl(&full)
    }
}

fn split_imp(f: &Formula) -> (Formula, Formula) {
    let (x, y) = f.as_imp().expect("an implication");
    (x.clone(), y.clone())
}

/// `(x → y, y → x)` from `¬_(n)((x → y) → ¬_(n)(y → x))`.
fn iff_halves(f: &Formula) -> (Formula, Formula) {
    let Formula::Neg(_, body) = f else { panic!("not a biconditional: {f}") };
    let (lr, neg_rl) = body.as_imp().expect("biconditional body");
    let Formula::Neg(_, rl) = neg_rl else { panic!("not a biconditional: {f}") };
    (lr.clone(), (**rl).clone())
}
