//! Shared helpers for the integration tests: formula generators and a
//! brute-force evaluator that does not use the library's semantics.

#![allow(dead_code)]

pub mod proofs;

use cpn_core::{enumerate_chains, Chain, Formula, VerdictKind};
use proptest::prelude::*;

pub fn chain_strategy(n: u8) -> impl Strategy<Value = Chain> {
    let all = enumerate_chains(n as u32).unwrap();
    proptest::sample::select(all)
}

/// Random formulas of depth at most `depth` over `atoms`, using every
/// connective and every chain over `[n]`.
pub fn formula_strategy(n: u8, atoms: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let leaf = prop_oneof![
        3 => proptest::sample::select(atoms).prop_map(Formula::atom),
        1 => chain_strategy(n).prop_map(Formula::Bottom),
    ];
    leaf.prop_recursive(depth, 64, 2, move |inner| {
        prop_oneof![
            2 => (chain_strategy(n), inner.clone()).prop_map(|(c, x)| Formula::neg(c, x)),
            2 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            1 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            1 => (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
    .boxed()
}

/// Truth value in `world` (1-based) from the textbook clauses.
pub fn truth(f: &Formula, world: u8, atom: &dyn Fn(&str) -> bool) -> bool {
    match f {
        Formula::Atom(a) => atom(a),
        Formula::Bottom(c) => !c.contains(world),
        Formula::Neg(c, x) => {
            let v = truth(x, world, atom);
            if c.contains(world) {
                !v
            } else {
                v
            }
        }
        Formula::Imp(a, b) => !truth(a, world, atom) || truth(b, world, atom),
        Formula::And(a, b) => truth(a, world, atom) && truth(b, world, atom),
        Formula::Or(a, b) => truth(a, world, atom) || truth(b, world, atom),
        Formula::Iff(a, b) => truth(a, world, atom) == truth(b, world, atom),
    }
}

/// Classification by sweeping all `2^(n·m)` product valuations.
pub fn product_classify(f: &Formula, n: u8) -> VerdictKind {
    let atoms = f.atoms();
    let bits = atoms.len() * n as usize;
    assert!(bits <= 20, "product sweep too large");
    let (mut any_true, mut any_false) = (false, false);
    for code in 0u32..(1 << bits) {
        for world in 1..=n {
            let lookup = |name: &str| {
                let k = atoms.iter().position(|a| &**a == name).unwrap();
                code >> (k * n as usize + (world as usize - 1)) & 1 == 1
            };
            if truth(f, world, &lookup) {
                any_true = true;
            } else {
                any_false = true;
            }
        }
        if any_true && any_false {
            return VerdictKind::Neither;
        }
    }
    match (any_true, any_false) {
        (true, false) => VerdictKind::Tautology,
        (false, true) => VerdictKind::Contradiction,
        _ => VerdictKind::Neither,
    }
}

pub fn chain(symbols: &[u32], n: u8) -> Chain {
    Chain::canonical(symbols, n as u32).unwrap()
}

/// A random formula over `atoms` using every connective and chain.
pub fn random_formula(rng: &mut impl rand::Rng, n: u8, atoms: &[&str], depth: u32) -> Formula {
    use rand::seq::SliceRandom;
    let chain = |rng: &mut dyn rand::RngCore| Chain::from_mask(rand::Rng::gen(rng), n);
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.8) {
            Formula::atom(atoms.choose(rng).unwrap())
        } else {
            Formula::Bottom(chain(rng))
        };
    }
    let sub = |rng: &mut _| random_formula(rng, n, atoms, depth - 1);
    match rng.gen_range(0..6) {
        0 | 1 => {
            let c = chain(rng);
            Formula::neg(c, sub(rng))
        }
        2 => Formula::imp(sub(rng), sub(rng)),
        3 => Formula::and(sub(rng), sub(rng)),
        4 => Formula::or(sub(rng), sub(rng)),
        _ => Formula::iff(sub(rng), sub(rng)),
    }
}

/// Tautology by the product sweep, stopping at the first falsified world.
pub fn product_tautology(f: &Formula, n: u8) -> bool {
    let atoms = f.atoms();
    let bits = atoms.len() * n as usize;
    assert!(bits <= 20, "product sweep too large");
    (0u32..(1 << bits)).all(|code| {
        (1..=n).all(|world| {
            let lookup = |name: &str| {
                let k = atoms.iter().position(|a| &**a == name).unwrap();
                code >> (k * n as usize + (world as usize - 1)) & 1 == 1
            };
            truth(f, world, &lookup)
        })
    })
}
