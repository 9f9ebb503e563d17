//! Random premise-free proofs and a corpus of hand-built derivations.

use cpn_core::calculus::{a1, a2, a3, a4, a5, a6, a7, Classical, ProofBuilder};
use cpn_core::{AxiomId, Chain, Formula, Justification, Proof};
use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

fn random_chain(rng: &mut impl Rng, n: u8) -> Chain {
    Chain::from_mask(rng.gen(), n)
}

/// A core formula of depth at most `depth` over `p` and `q`.
pub fn random_core(rng: &mut impl Rng, n: u8, depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..5) {
            0 => Formula::Bottom(Chain::from_mask(rng.gen::<u16>() | 1, n)),
            1 | 2 => Formula::atom("p"),
            _ => Formula::atom("q"),
        };
    }
    if rng.gen_bool(0.5) {
        let c = Chain::from_mask(rng.gen::<u16>() | 1 << rng.gen_range(0..n), n);
        Formula::neg(c, random_core(rng, n, depth - 1))
    } else {
        Formula::imp(random_core(rng, n, depth - 1), random_core(rng, n, depth - 1))
    }
}

/// A random axiom instance in core form, sometimes reusing `seen` so that
/// modus ponens has something to act on.
pub fn random_axiom<R: Rng>(rng: &mut R, n: u8, seen: &[Formula]) -> (AxiomId, Formula) {
    fn pick(rng: &mut impl Rng, n: u8, seen: &[Formula]) -> Formula {
        if !seen.is_empty() && rng.gen_bool(0.4) {
            seen.choose(rng).unwrap().clone()
        } else {
            random_core(rng, n, 2)
        }
    }
    let pick = |rng: &mut R| pick(rng, n, seen);
    let id = *AxiomId::ALL.choose(rng).unwrap();
    let f = match id {
        AxiomId::A1 => {
            let (x, y) = (pick(rng), pick(rng));
            a1(x, y)
        }
        AxiomId::A2 => {
            let nested = seen.iter().find_map(|f| {
                let (x, rest) = f.as_imp()?;
                let (y, z) = rest.as_imp()?;
                Some((x.clone(), y.clone(), z.clone()))
            });
            match nested {
                Some((x, y, z)) if rng.gen_bool(0.5) => a2(x, y, z),
                _ => {
                    let (x, y, z) = (pick(rng), pick(rng), pick(rng));
                    a2(x, y, z)
                }
            }
        }
        AxiomId::A3 => {
            let (x, y) = (pick(rng), pick(rng));
            a3(x, y, n)
        }
        AxiomId::A4 => a4(pick(rng), random_chain(rng, n)),
        AxiomId::A5 => a5(pick(rng), random_chain(rng, n), random_chain(rng, n)),
        AxiomId::A6 => a6(random_chain(rng, n), random_chain(rng, n)),
        AxiomId::A7 => {
            let k = random_chain(rng, n);
            let r = Chain::from_mask(k.mask() & rng.gen::<u16>(), n);
            a7(k, r)
        }
    };
    (id, f.expand(n))
}

/// A premise-free proof of about `steps` lines mixing axiom instances and
/// every modus ponens step that becomes available.
pub fn random_proof(rng: &mut impl Rng, n: u8, steps: usize) -> (Proof, usize) {
    let mut p = Proof::new(n, Vec::new());
    let mut mp_steps = 0;
    while p.len() < steps {
        let formulas: Vec<Formula> = p.lines.iter().map(|l| l.formula.clone()).collect();
        let mut options = Vec::new();
        for (i, f) in formulas.iter().enumerate() {
            if let Some((lhs, rhs)) = f.as_imp() {
                if formulas.contains(rhs) {
                    continue;
                }
                if let Some(j) = formulas.iter().position(|g| g == lhs) {
                    options.push((i, j, rhs.clone()));
                }
            }
        }
        if !options.is_empty() && rng.gen_bool(0.6) {
            let (i, j, rhs) = options.choose(rng).unwrap().clone();
            p.push(rhs, Justification::Mp(i + 1, j + 1));
            mp_steps += 1;
        } else {
            let (id, f) = random_axiom(rng, n, &formulas);
            p.push(f, Justification::Axiom(id));
        }
    }
    (p, mp_steps)
}

fn parse(text: &str, n: u8) -> Formula {
    cpn_core::parse(text, n).unwrap()
}

/// Derivations of derived rules, each a proof from premises. Uses `k = {1}`
/// and `r = {2}`, so `n >= 2`.
pub fn derivations(n: u8) -> Vec<(&'static str, Proof)> {
    assert!(n >= 2);
    let lib = Classical::new(n);
    let full = Chain::full(n);
    let k = Chain::singleton(1, n);
    let r = Chain::singleton(2, n);
    let kc = k.complement();
    let phi = Formula::atom("p");
    let nk = |f: Formula| Formula::neg(k, f);
    let strong = |f: Formula| Formula::strong_neg(n, f);
    let mut out = Vec::new();

    // p, bot{1} |- ~{1} p, written out line by line
    let mut p = Proof::new(n, vec![phi.clone(), Formula::Bottom(k)]);
    p.push(phi.clone(), Justification::Premise(1));
    p.push(Formula::Bottom(k), Justification::Premise(2));
    p.push(a4(phi.clone(), k), Justification::Axiom(AxiomId::A4));
    p.push(parse("bot{1} -> ~{1} p", n), Justification::Mp(3, 1));
    p.push(nk(phi.clone()), Justification::Mp(4, 2));
    out.push(("weak-negation-intro", p));

    // ~k p, bot_k |- p
    let mut b = ProofBuilder::new(n, vec![nk(phi.clone()), Formula::Bottom(k)]);
    let (l1, l2) = (b.premise(1), b.premise(2));
    let a = b.a4(nk(phi.clone()), k);
    let l = b.mp2(a, l1, l2);
    let iff = b.a5(phi.clone(), k, k);
    let done = lib.forward(&mut b, iff, l, false);
    out.push(("weak-explosion", b.finish(done)));

    // ~k p, bot_k' |- ~p
    let mut b = ProofBuilder::new(n, vec![nk(phi.clone()), Formula::Bottom(kc)]);
    let (l1, l2) = (b.premise(1), b.premise(2));
    let a = b.a4(nk(phi.clone()), kc);
    let l = b.mp2(a, l1, l2);
    let iff = b.a5(phi.clone(), kc, k);
    let done = lib.forward(&mut b, iff, l, false);
    out.push(("weak-to-strong", b.finish(done)));

    // bot_k', ~p |- ~k p
    let mut b = ProofBuilder::new(n, vec![Formula::Bottom(kc), strong(phi.clone())]);
    let (l1, l2) = (b.premise(1), b.premise(2));
    let a = b.a4(strong(phi.clone()), kc);
    let l = b.mp2(a, l2, l1);
    let iff = b.a5(phi.clone(), kc, full);
    let done = lib.forward(&mut b, iff, l, false);
    out.push(("weak-excluded-middle", b.finish(done)));

    // ~k ~r p |- ~r ~k p
    let mut b = ProofBuilder::new(n, vec![Formula::neg(k, Formula::neg(r, phi.clone()))]);
    let l1 = b.premise(1);
    let iff = b.a5(phi.clone(), k, r);
    let l = lib.forward(&mut b, iff, l1, false);
    let iff = b.a5(phi.clone(), r, k);
    let done = lib.forward(&mut b, iff, l, true);
    out.push(("negation-commute", b.finish(done)));

    // ~k ~k p |- p
    let mut b = ProofBuilder::new(n, vec![nk(nk(phi.clone()))]);
    let l1 = b.premise(1);
    let iff = b.a5(phi.clone(), k, k);
    let done = lib.forward(&mut b, iff, l1, false);
    out.push(("weak-double-negation-elim", b.finish(done)));

    // p |- ~k ~k p
    let mut b = ProofBuilder::new(n, vec![phi.clone()]);
    let l1 = b.premise(1);
    let iff = b.a5(phi.clone(), k, k);
    let done = lib.forward(&mut b, iff, l1, true);
    out.push(("weak-double-negation-intro", b.finish(done)));

    // ~ ~k p |- ~k' p
    let mut b = ProofBuilder::new(n, vec![strong(nk(phi.clone()))]);
    let l1 = b.premise(1);
    let iff = b.a5(phi.clone(), full, k);
    let done = lib.forward(&mut b, iff, l1, false);
    out.push(("strong-of-weak", b.finish(done)));

    // ~r bot_k |- ~k bot_r
    let mut b = ProofBuilder::new(n, vec![Formula::neg(r, Formula::Bottom(k))]);
    let l1 = b.premise(1);
    let iff = b.a6(r, k);
    let l = lib.forward(&mut b, iff, l1, false);
    let iff = b.a6(k, r);
    let done = lib.forward(&mut b, iff, l, true);
    out.push(("bottom-commute", b.finish(done)));

    // ~ bot_k |- bot_k'
    let mut b = ProofBuilder::new(n, vec![strong(Formula::Bottom(k))]);
    let l1 = b.premise(1);
    let iff = b.a6(full, k);
    let done = lib.forward(&mut b, iff, l1, false);
    out.push(("strong-bottom", b.finish(done)));

    // p, ~k p |- bot_k
    let mut b = ProofBuilder::new(n, vec![phi.clone(), nk(phi.clone())]);
    let (l1, l2) = (b.premise(1), b.premise(2));
    let a = b.a4(phi.clone(), kc);
    let intro = b.mp(a, l1);
    let m = lib.mt_at(&mut b, &Formula::Bottom(kc), &Formula::neg(kc, phi.clone()));
    let contra = b.mp(m, intro);
    let iff = b.a5(phi.clone(), full, kc);
    let nn = lib.forward(&mut b, iff, l2, true);
    let nbot = b.mp(contra, nn);
    let iff = b.a6(full, kc);
    let done = lib.forward(&mut b, iff, nbot, false);
    let weak_contradiction = b.finish(done);
    out.push(("weak-contradiction", weak_contradiction.clone()));

    // ~k p, ~k' p |- bot
    let mut b = ProofBuilder::new(n, vec![nk(phi.clone()), Formula::neg(kc, phi.clone())]);
    let (l1, l2) = (b.premise(1), b.premise(2));
    let iff = b.a5(phi.clone(), full, k);
    let nn = lib.forward(&mut b, iff, l2, true);
    let e = lib.efq_at(&mut b, &nk(phi.clone()), &Formula::Bottom(full));
    let done = b.mp2(e, nn, l1);
    out.push(("complementary-negations", b.finish(done)));

    // p & ~k p |- bot_k, through the conjunction templates
    let conj = Formula::and(phi.clone(), nk(phi.clone()));
    let mut b = ProofBuilder::new(n, vec![conj]);
    let l1 = b.premise(1);
    let mut subst = BTreeMap::new();
    subst.insert(Arc::from("A"), phi.clone());
    subst.insert(Arc::from("B"), nk(phi.clone()));
    let el = b.splice_subst(&lib.and_l, &subst, &[]);
    let er = b.splice_subst(&lib.and_r, &subst, &[]);
    let lp = b.mp(el, l1);
    let lnp = b.mp(er, l1);
    let done = b.splice(&weak_contradiction, &[lp, lnp]);
    out.push(("weak-contradiction-conjunction", b.finish(done)));

    out
}
