//! A tautology prover that works one world at a time.
//!
//! The guard `w_i = ⊥_([n]∖{i})` holds only in world `i`. Under `w_i` every
//! weak negation is either classical negation or the identity, so each
//! subformula's truth value can be derived as a literal (the formula or its
//! strong negation) from literal premises for the atoms. Atoms are then
//! eliminated by cases, giving `⊢ w_i → G` for every world, and the worlds
//! are combined: assuming `¬G`, each `w_i → G` yields `⊥_{i}`, together
//! `⊥_(n)`, which contradicts `¬_(n)⊥_(n)`.
//!
//! This backs the implication templates of the completeness construction.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::builder::ProofBuilder;
use super::classical::Classical;
use super::deduction::deduction_unchecked;
use super::proof::Proof;
use crate::chain::Chain;
use crate::formula::Formula;

struct Literals<'a> {
    lib: &'a Classical,
    n: u8,
    world: u8,
    /// Line of the guard `w_i`, absent when `n = 1`.
    guard: Option<usize>,
    atoms: &'a [Arc<str>],
    values: &'a [bool],
    /// Line of each atom's literal premise.
    atom_lines: &'a [usize],
}

impl Literals<'_> {
    fn neg(&self, f: &Formula) -> Formula {
        Formula::strong_neg(self.n, f.clone())
    }

    /// `⊥_c` for a nonempty chain missing this world.
    fn bottom(&self, b: &mut ProofBuilder, c: Chain) -> usize {
        debug_assert!(!c.contains(self.world) && !c.is_empty());
        let guard = self.guard.expect("a guard exists whenever n > 1");
        let g = Chain::singleton(self.world, self.n).complement();
        let a7 = b.a7(g, c);
        b.mp(a7, guard)
    }

    /// The line of `f` or of `¬_(n) f`, and `f`'s value in this world.
    fn prove(&self, b: &mut ProofBuilder, f: &Formula) -> (usize, bool) {
        let full = Chain::full(self.n);
        let lib = self.lib;
        match f {
            Formula::Atom(name) => {
                let k = self.atoms.iter().position(|a| a == name).expect("known atom");
                (self.atom_lines[k], self.values[k])
            }
            Formula::Bottom(c) if c.contains(self.world) => {
                let rest = c.complement();
                if rest.is_empty() {
                    return (lib.neg_bot_full_at(b), false);
                }
                // ¬_(n)⊥_c ↔ ⊥_c'
                let bot = self.bottom(b, rest);
                let iff = b.a6(full, *c);
                (lib.forward(b, iff, bot, true), false)
            }
            Formula::Bottom(c) => (self.bottom(b, *c), true),
            Formula::Neg(c, x) => {
                let (lx, vx) = self.prove(b, x);
                let x = (**x).clone();
                let rest = c.complement();
                match (c.contains(self.world), vx) {
                    (false, true) => {
                        let bot = self.bottom(b, *c);
                        let a4 = b.a4(x, *c);
                        (b.mp2(a4, lx, bot), true)
                    }
                    (false, false) => {
                        // ¬x ⊢ ¬_c¬x ⊢ ¬_c'x ⊢ ¬¬_c x
                        let bot = self.bottom(b, *c);
                        let a4 = b.a4(self.neg(&x), *c);
                        let l = b.mp2(a4, lx, bot);
                        let iff = b.a5(x.clone(), *c, full);
                        let l = lib.forward(b, iff, l, false);
                        let iff = b.a5(x, full, *c);
                        (lib.forward(b, iff, l, true), false)
                    }
                    (true, true) => {
                        // x ⊢ ¬_c'x ⊢ ¬¬_c x
                        let l = if rest.is_empty() {
                            lx
                        } else {
                            let bot = self.bottom(b, rest);
                            let a4 = b.a4(x.clone(), rest);
                            b.mp2(a4, lx, bot)
                        };
                        let iff = b.a5(x, full, *c);
                        (lib.forward(b, iff, l, true), false)
                    }
                    (true, false) => {
                        if rest.is_empty() {
                            return (lx, true);
                        }
                        // ¬x ⊢ ¬_c'¬x ⊢ ¬_c x
                        let bot = self.bottom(b, rest);
                        let a4 = b.a4(self.neg(&x), rest);
                        let l = b.mp2(a4, lx, bot);
                        let iff = b.a5(x, rest, full);
                        (lib.forward(b, iff, l, false), true)
                    }
                }
            }
            Formula::Imp(x, y) => {
                let (lx, vx) = self.prove(b, x);
                if !vx {
                    let t = lib.efq_at(b, x, y);
                    return (b.mp(t, lx), true);
                }
                let (ly, vy) = self.prove(b, y);
                if vy {
                    let t = b.a1((**y).clone(), (**x).clone());
                    return (b.mp(t, ly), true);
                }
                let t = lib.imp_intro_neg_at(b, x, y);
                (b.mp2(t, lx, ly), false)
            }
            Formula::And(..) | Formula::Or(..) | Formula::Iff(..) => {
                unreachable!("the prover works on core formulas")
            }
        }
    }
}

/// A premise-free proof of the core tautology `g` over `n` worlds.
///
/// Panics if `g` is not a tautology.
pub fn prove_by_worlds(g: &Formula, n: u8, lib: &Classical) -> Proof {
    debug_assert!(g.is_core());
    let atoms = g.atoms();
    if n == 1 {
        return prove_world(g, 1, n, lib, &atoms);
    }
    let full = Chain::full(n);
    let ng = Formula::strong_neg(n, g.clone());
    let mut b = ProofBuilder::new(n, alloc::vec![ng]);
    let hyp = b.premise(1);
    let mut acc: Option<(Chain, usize)> = None;
    for i in 1..=n {
        let guarded = prove_world(g, i, n, lib, &atoms);
        let gi = b.splice(&guarded, &[]);
        let w = Chain::singleton(i, n).complement();
        // ¬G ⊢ ¬w_i ⊢ ⊥_{i}
        let m = lib.mt_at(&mut b, &Formula::Bottom(w), g);
        let nw = b.mp2(m, gi, hyp);
        let iff = b.a6(full, w);
        let bot_i = lib.forward(&mut b, iff, nw, false);
        let single = Chain::singleton(i, n);
        acc = Some(match acc {
            None => (single, bot_i),
            Some((c, line)) => {
                // ⊥_c, ⊥_{i} ⊢ ¬_{i}⊥_c ⊢ ⊥_(c·i)
                let a4 = b.a4(Formula::Bottom(c), single);
                let l = b.mp2(a4, line, bot_i);
                let iff = b.a6(single, c);
                let merged = c.concat(&single).expect("same alphabet");
                (merged, lib.forward(&mut b, iff, l, false))
            }
        });
    }
    let (c, bot_n) = acc.expect("n >= 1");
    debug_assert!(c.is_full());
    let nbot = lib.neg_bot_full_at(&mut b);
    let e = lib.efq_at(&mut b, &Formula::Bottom(full), g);
    let got = b.mp2(e, nbot, bot_n);
    let ng_g = deduction_unchecked(&b.finish(got));

    let mut b = ProofBuilder::new(n, Vec::new());
    let l = b.splice(&ng_g, &[]);
    let m = lib.mirabilis_at(&mut b, g);
    let done = b.mp(m, l);
    b.finish(done)
}

/// `⊢ w_i → g`, or `⊢ g` when `n = 1`.
fn prove_world(g: &Formula, world: u8, n: u8, lib: &Classical, atoms: &[Arc<str>]) -> Proof {
    let mut values = Vec::with_capacity(atoms.len());
    let p = eliminate(g, world, n, lib, atoms, &mut values);
    if n == 1 {
        p
    } else {
        deduction_unchecked(&p)
    }
}

/// Proof of `g` from the guard and literal premises for the atoms fixed in
/// `values`; the remaining atoms are split by cases.
fn eliminate(
    g: &Formula,
    world: u8,
    n: u8,
    lib: &Classical,
    atoms: &[Arc<str>],
    values: &mut Vec<bool>,
) -> Proof {
    let guard = (n > 1).then(|| Formula::Bottom(Chain::singleton(world, n).complement()));
    let literal = |k: usize, v: bool| {
        let a = Formula::Atom(atoms[k].clone());
        if v {
            a
        } else {
            Formula::strong_neg(n, a)
        }
    };
    let premises: Vec<Formula> = guard
        .iter()
        .cloned()
        .chain(values.iter().enumerate().map(|(k, &v)| literal(k, v)))
        .collect();
    let offset = premises.len() - values.len();

    if values.len() == atoms.len() {
        let mut b = ProofBuilder::new(n, premises);
        let guard_line = guard.as_ref().map(|_| b.premise(1));
        let atom_lines: Vec<usize> = (0..atoms.len()).map(|k| b.premise(offset + k + 1)).collect();
        let lits = Literals {
            lib,
            n,
            world,
            guard: guard_line,
            atoms,
            values,
            atom_lines: &atom_lines,
        };
        let (line, value) = lits.prove(&mut b, g);
        assert!(value, "not a tautology: {g} is false in world {world}");
        return b.finish(line);
    }

    let k = values.len();
    values.push(true);
    let pos = deduction_unchecked(&eliminate(g, world, n, lib, atoms, values));
    values.pop();
    values.push(false);
    let neg = deduction_unchecked(&eliminate(g, world, n, lib, atoms, values));
    values.pop();

    let mut b = ProofBuilder::new(n, premises);
    let ids: Vec<usize> = (1..=b.premises().len()).map(|i| b.premise(i)).collect();
    let lp = b.splice(&pos, &ids);
    let ln = b.splice(&neg, &ids);
    let atom = Formula::Atom(atoms[k].clone());
    let c = lib.cases_at(&mut b, &atom, g);
    let done = b.mp2(c, lp, ln);
    b.finish(done)
}
