//! Multi-world semantics.
//!
//! A valuation assigns each atom a truth value in each of the `n` worlds.
//! Evaluation is bit-parallel: a formula's value under a valuation is a
//! `u16` whose bit `i - 1` is the truth value in world `i`.
//!
//! Worlds never interact, so a formula is a tautology iff each world's
//! classical projection is. [`classify`] therefore sweeps the `2^m`
//! assignments that are uniform across worlds and reads off every world at
//! once, instead of enumerating the `2^(n·m)` product.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use thiserror::Error;

use crate::chain::{Chain, ChainError, MAX_WORLDS};
use crate::formula::Formula;

/// Largest number of atoms handled by the exhaustive sweeps.
pub const MAX_ATOMS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("world {world} is outside 1..={n}")]
    WorldOutOfRange { world: u32, n: u8 },
    #[error("atom `{0}` has no truth value")]
    UnassignedAtom(String),
    #[error("formula uses chains over [{found}] but the valuation has {n} worlds")]
    AlphabetMismatch { found: u8, n: u8 },
    #[error("{what} {value} exceeds the bound {max}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        max: usize,
    },
}

impl From<ChainError> for SemanticsError {
    fn from(e: ChainError) -> Self {
        match e {
            ChainError::AlphabetMismatch { left, right } => SemanticsError::AlphabetMismatch {
                found: left,
                n: right,
            },
            ChainError::BoundExceeded(n) => SemanticsError::BoundExceeded {
                what: "world count",
                value: n as usize,
                max: MAX_WORLDS as usize,
            },
            ChainError::OutOfAlphabet { symbol, n } => SemanticsError::WorldOutOfRange { world: symbol, n },
            ChainError::DuplicateSymbol(s) => SemanticsError::WorldOutOfRange {
                world: s,
                n: 0,
            },
        }
    }
}

fn full_mask(n: u8) -> u16 {
    Chain::full(n).mask()
}

fn check_worlds(n: u8) -> Result<(), SemanticsError> {
    if n == 0 || n > MAX_WORLDS {
        Err(SemanticsError::BoundExceeded {
            what: "world count",
            value: n as usize,
            max: MAX_WORLDS as usize,
        })
    } else {
        Ok(())
    }
}

/// Truth values of atoms in each world.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Valuation {
    n: u8,
    /// Atom name and the mask of worlds where it is true.
    assign: Vec<(Arc<str>, u16)>,
}

impl Valuation {
    /// A valuation over `n` worlds with no atoms assigned.
    pub fn new(n: u8) -> Valuation {
        Valuation {
            n,
            assign: Vec::new(),
        }
    }

    /// Every listed atom false in every world.
    pub fn all_false(n: u8, atoms: &[Arc<str>]) -> Valuation {
        Valuation {
            n,
            assign: atoms.iter().map(|a| (a.clone(), 0)).collect(),
        }
    }

    pub fn worlds(&self) -> u8 {
        self.n
    }

    /// Sets `atom` in world `i`.
    pub fn set(&mut self, atom: &str, world: u8, value: bool) -> Result<(), SemanticsError> {
        self.check_world(world)?;
        let bit = 1u16 << (world - 1);
        let slot = match self.assign.iter().position(|(a, _)| &**a == atom) {
            Some(i) => &mut self.assign[i].1,
            None => {
                self.assign.push((Arc::from(atom), 0));
                &mut self.assign.last_mut().expect("just pushed").1
            }
        };
        if value {
            *slot |= bit;
        } else {
            *slot &= !bit;
        }
        Ok(())
    }

    /// Sets `atom` in every world at once from a world mask.
    pub fn set_mask(&mut self, atom: &str, mask: u16) {
        let mask = mask & full_mask(self.n);
        match self.assign.iter_mut().find(|(a, _)| &**a == atom) {
            Some(slot) => slot.1 = mask,
            None => self.assign.push((Arc::from(atom), mask)),
        }
    }

    pub fn get(&self, atom: &str, world: u8) -> Option<bool> {
        if world == 0 || world > self.n {
            return None;
        }
        self.mask(atom).map(|m| m & (1 << (world - 1)) != 0)
    }

    /// Worlds where `atom` is true, as a bitmask.
    pub fn mask(&self, atom: &str) -> Option<u16> {
        self.assign
            .iter()
            .find(|(a, _)| &**a == atom)
            .map(|&(_, m)| m)
    }

    /// Assigned atoms in insertion order with their world masks.
    pub fn entries(&self) -> impl Iterator<Item = (&Arc<str>, u16)> + '_ {
        self.assign.iter().map(|(a, m)| (a, *m))
    }

    fn check_world(&self, world: u8) -> Result<(), SemanticsError> {
        if world == 0 || world > self.n {
            Err(SemanticsError::WorldOutOfRange {
                world: world as u32,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

impl core::fmt::Debug for Valuation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("Valuation[")?;
        for w in 1..=self.n {
            if w > 1 {
                f.write_str("; ")?;
            }
            write!(f, "w{w}:")?;
            for (a, m) in &self.assign {
                let v = if m & (1 << (w - 1)) != 0 { 'T' } else { 'F' };
                write!(f, " {a}={v}")?;
            }
        }
        f.write_str("]")
    }
}

/// Bit-parallel evaluation: bit `i - 1` of the result is the value in world `i`.
pub fn eval_mask(f: &Formula, v: &Valuation) -> Result<u16, SemanticsError> {
    f.check_alphabet(v.n)?;
    eval_unchecked(f, v.n, &|name| v.mask(name))
}

fn eval_unchecked(
    f: &Formula,
    n: u8,
    lookup: &dyn Fn(&str) -> Option<u16>,
) -> Result<u16, SemanticsError> {
    let full = full_mask(n);
    let go = |g: &Formula| eval_unchecked(g, n, lookup);
    Ok(match f {
        Formula::Atom(name) => {
            lookup(name).ok_or_else(|| SemanticsError::UnassignedAtom(name.to_string()))? & full
        }
        Formula::Bottom(c) => !c.mask() & full,
        Formula::Neg(c, body) => go(body)? ^ c.mask(),
        Formula::Imp(a, b) => (!go(a)? | go(b)?) & full,
        Formula::And(a, b) => go(a)? & go(b)?,
        Formula::Or(a, b) => go(a)? | go(b)?,
        Formula::Iff(a, b) => !(go(a)? ^ go(b)?) & full,
    })
}

/// Value of `f` in world `i`.
pub fn eval_world(f: &Formula, world: u8, v: &Valuation) -> Result<bool, SemanticsError> {
    v.check_world(world)?;
    Ok(eval_mask(f, v)? & (1 << (world - 1)) != 0)
}

/// The truth vector `(v̄_1(f), …, v̄_n(f))`.
pub fn eval(f: &Formula, v: &Valuation) -> Result<Vec<bool>, SemanticsError> {
    let m = eval_mask(f, v)?;
    Ok((0..v.n).map(|i| m & (1 << i) != 0).collect())
}

/// The chain of worlds where `f` is false under `v`; empty when `f` is
/// true everywhere.
pub fn contingency_class(f: &Formula, v: &Valuation) -> Result<Chain, SemanticsError> {
    let m = eval_mask(f, v)?;
    Ok(Chain::from_mask(!m, v.n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Tautology,
    Contradiction,
    Neither,
}

/// A valuation together with a world it is reported for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub valuation: Valuation,
    pub world: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// First valuation (in enumeration order) falsifying some world.
    pub witness_false: Option<Witness>,
    /// First valuation (in enumeration order) satisfying some world.
    pub witness_true: Option<Witness>,
}

/// Per-world outcome of the uniform sweep.
struct Sweep {
    n: u8,
    atoms: Vec<Arc<str>>,
    /// For each world, the first assignment index where the formula is false.
    first_false: Vec<Option<u32>>,
    first_true: Vec<Option<u32>>,
}

fn collect_atoms(formulas: &[&Formula]) -> Vec<Arc<str>> {
    let mut atoms = Vec::new();
    for f in formulas {
        f.collect_atoms(&mut atoms);
    }
    atoms
}

fn check_inputs(formulas: &[&Formula], n: u8) -> Result<Vec<Arc<str>>, SemanticsError> {
    check_worlds(n)?;
    for f in formulas {
        f.check_alphabet(n)?;
    }
    let atoms = collect_atoms(formulas);
    if atoms.len() > MAX_ATOMS {
        return Err(SemanticsError::BoundExceeded {
            what: "atom count",
            value: atoms.len(),
            max: MAX_ATOMS,
        });
    }
    Ok(atoms)
}

/// Masks for uniform assignment `j`: atom `k` is true in all worlds iff bit
/// `m - 1 - k` of `j` is set, so the first atom is the most significant.
fn uniform_lookup<'a>(atoms: &'a [Arc<str>], j: u32, full: u16) -> impl Fn(&str) -> Option<u16> + 'a {
    let m = atoms.len();
    move |name| {
        atoms
            .iter()
            .position(|a| &**a == name)
            .map(|k| if (j >> (m - 1 - k)) & 1 == 1 { full } else { 0 })
    }
}

/// Sweeps every uniform assignment; `bad` maps the per-assignment masks
/// of the tracked formulas to a mask of "failing" worlds.
fn sweep(
    formulas: &[&Formula],
    n: u8,
    atoms: Vec<Arc<str>>,
    combine: impl Fn(&[u16]) -> u16,
) -> Result<Sweep, SemanticsError> {
    let full = full_mask(n);
    let mut first_false = alloc::vec![None; n as usize];
    let mut first_true = alloc::vec![None; n as usize];
    let mut values = alloc::vec![0u16; formulas.len()];
    for j in 0..(1u32 << atoms.len()) {
        let lookup = uniform_lookup(&atoms, j, full);
        for (slot, f) in values.iter_mut().zip(formulas) {
            *slot = eval_unchecked(f, n, &lookup)?;
        }
        let good = combine(&values);
        for w in 0..n as usize {
            let slot = if good & (1 << w) != 0 {
                &mut first_true[w]
            } else {
                &mut first_false[w]
            };
            slot.get_or_insert(j);
        }
        if first_false.iter().all(Option::is_some) && first_true.iter().all(Option::is_some) {
            break;
        }
    }
    Ok(Sweep {
        n,
        atoms,
        first_false,
        first_true,
    })
}

impl Sweep {
    /// The valuation with world `w` set to assignment `j` and every other
    /// world all-false.
    fn candidate(&self, w: usize, j: u32) -> Valuation {
        let m = self.atoms.len();
        let mut v = Valuation::all_false(self.n, &self.atoms);
        for (k, slot) in v.assign.iter_mut().enumerate() {
            if (j >> (m - 1 - k)) & 1 == 1 {
                slot.1 = 1 << w;
            }
        }
        v
    }

    /// Enumeration key: atoms outermost, worlds ascending, false < true.
    fn key(&self, v: &Valuation) -> Vec<bool> {
        let mut key = Vec::with_capacity(self.atoms.len() * self.n as usize);
        for (_, mask) in &v.assign {
            for w in 0..self.n {
                key.push(mask & (1 << w) != 0);
            }
        }
        key
    }

    /// The first valuation in enumeration order whose projection to some
    /// world is listed in `firsts`. Every such valuation dominates the
    /// candidate built from its world's first listed assignment, so the
    /// minimum over those candidates is the global first.
    fn first_witness(&self, firsts: &[Option<u32>], wanted_false: bool, f: &dyn Fn(&Valuation) -> u16) -> Option<Witness> {
        let best = firsts
            .iter()
            .enumerate()
            .filter_map(|(w, j)| j.map(|j| self.candidate(w, j)))
            .min_by(|a, b| self.key(a).cmp(&self.key(b)))?;
        let mask = f(&best);
        let world = (0..self.n)
            .find(|&w| (mask & (1 << w) != 0) != wanted_false)
            .map(|w| w + 1)
            .expect("candidate hits its world");
        Some(Witness {
            valuation: best,
            world,
        })
    }
}

/// Classifies `f` over `n` worlds.
pub fn classify(f: &Formula, n: u8) -> Result<Verdict, SemanticsError> {
    let atoms = check_inputs(&[f], n)?;
    let s = sweep(&[f], n, atoms, |vals| vals[0])?;
    let value = |v: &Valuation| eval_unchecked(f, n, &|name| v.mask(name)).unwrap_or(0);
    let witness_false = s.first_witness(&s.first_false, true, &value);
    let witness_true = s.first_witness(&s.first_true, false, &value);
    let kind = match (&witness_false, &witness_true) {
        (None, _) => VerdictKind::Tautology,
        (_, None) => VerdictKind::Contradiction,
        _ => VerdictKind::Neither,
    };
    Ok(Verdict {
        kind,
        witness_false,
        witness_true,
    })
}

pub fn is_tautology(f: &Formula, n: u8) -> Result<bool, SemanticsError> {
    let atoms = check_inputs(&[f], n)?;
    let full = full_mask(n);
    for j in 0..(1u32 << atoms.len()) {
        if eval_unchecked(f, n, &uniform_lookup(&atoms, j, full))? != full {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The first valuation (atoms in first-occurrence order, worlds ascending,
/// false before true) that falsifies `f` in some world, with the first such
/// world; `None` for a tautology.
pub fn find_countermodel(f: &Formula, n: u8) -> Result<Option<Witness>, SemanticsError> {
    Ok(classify(f, n)?.witness_false)
}

/// Result of an entailment query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entailment {
    pub holds: bool,
    /// A valuation and world where every premise is true and the goal false.
    pub countermodel: Option<Witness>,
}

/// Local entailment: in every world of every valuation where all premises
/// are true, the goal is true. Equivalent to `p1 -> ... -> goal` being a
/// tautology.
pub fn entails(premises: &[Formula], goal: &Formula, n: u8) -> Result<Entailment, SemanticsError> {
    let mut all: Vec<&Formula> = premises.iter().collect();
    all.push(goal);
    let atoms = check_inputs(&all, n)?;
    let full = full_mask(n);
    let holds_mask = |vals: &[u16]| {
        let (goal, prems) = vals.split_last().expect("goal present");
        let prem = prems.iter().fold(full, |acc, m| acc & m);
        (!prem | goal) & full
    };
    let s = sweep(&all, n, atoms, holds_mask)?;
    let value = |v: &Valuation| {
        let vals: Vec<u16> = all
            .iter()
            .map(|f| eval_unchecked(f, n, &|name| v.mask(name)).unwrap_or(0))
            .collect();
        holds_mask(&vals)
    };
    let countermodel = s.first_witness(&s.first_false, true, &value);
    Ok(Entailment {
        holds: countermodel.is_none(),
        countermodel,
    })
}

/// Tests the implication "tautology over `n + 1` worlds ⇒ tautology over
/// `n` worlds" for a formula whose chains are over `[n]`.
pub fn hierarchy_check(f: &Formula, n: u8) -> Result<bool, SemanticsError> {
    f.check_alphabet(n)?;
    if n >= MAX_WORLDS {
        return Err(SemanticsError::BoundExceeded {
            what: "world count",
            value: n as usize + 1,
            max: MAX_WORLDS as usize,
        });
    }
    let lifted = f.realphabet(n + 1)?;
    Ok(!is_tautology(&lifted, n + 1)? || is_tautology(f, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;
    use alloc::vec;

    fn f(text: &str, n: u8) -> Formula {
        parse(text, n).unwrap()
    }

    fn val(n: u8, entries: &[(&str, u8, bool)]) -> Valuation {
        let mut v = Valuation::new(n);
        for &(a, w, b) in entries {
            v.set(a, w, b).unwrap();
        }
        v
    }

    #[test]
    fn eval_world_examples() {
        let v = val(2, &[("p", 1, true), ("p", 2, true)]);
        assert!(eval_world(&f("p & ~{1} p", 2), 2, &v).unwrap());
        assert!(!eval_world(&f("bot{1}", 2), 1, &v).unwrap());
        assert!(eval_world(&f("~{1} p", 2), 2, &v).unwrap());
        assert_eq!(
            eval_world(&f("p", 2), 3, &v),
            Err(SemanticsError::WorldOutOfRange { world: 3, n: 2 })
        );
        assert_eq!(
            eval_world(&f("q", 2), 1, &v),
            Err(SemanticsError::UnassignedAtom("q".into()))
        );
        assert!(matches!(
            eval(&f("bot{1}", 3), &v),
            Err(SemanticsError::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn eval_examples() {
        let v = val(2, &[("p", 1, true), ("p", 2, true)]);
        assert_eq!(eval(&f("p & ~{1} p", 2), &v).unwrap(), vec![false, true]);
        assert_eq!(eval(&f("bot{}", 2), &Valuation::new(2)).unwrap(), vec![true, true]);
        let v = val(2, &[("p", 1, true), ("p", 2, false)]);
        assert_eq!(eval(&f("~{} p", 2), &v).unwrap(), eval(&f("p", 2), &v).unwrap());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&f("p -> (bot{1} -> ~{1} p)", 2), 2).unwrap().kind,
            VerdictKind::Tautology
        );
        let v = classify(&f("p", 2), 2).unwrap();
        assert_eq!(v.kind, VerdictKind::Neither);
        assert!(v.witness_false.is_some() && v.witness_true.is_some());
        let v = classify(&f("bot", 2), 2).unwrap();
        assert_eq!(v.kind, VerdictKind::Contradiction);
        assert!(v.witness_true.is_none());
    }

    #[test]
    fn contingency_examples() {
        let p = f("p", 2);
        let v = val(2, &[("p", 1, false), ("p", 2, true)]);
        assert_eq!(contingency_class(&p, &v).unwrap(), Chain::singleton(1, 2));
        let v = val(2, &[("p", 1, false), ("p", 2, false)]);
        assert_eq!(contingency_class(&p, &v).unwrap(), Chain::full(2));
        let v = val(2, &[("p", 1, true), ("p", 2, true)]);
        assert!(contingency_class(&p, &v).unwrap().is_empty());
    }

    #[test]
    fn countermodel_examples() {
        let cm = find_countermodel(&f("(p & ~{1} p) -> q", 2), 2).unwrap().unwrap();
        assert_eq!(cm.world, 2);
        assert_eq!(cm.valuation.get("p", 2), Some(true));
        assert_eq!(cm.valuation.get("q", 2), Some(false));
        assert!(find_countermodel(&f("p | ~ p", 2), 2).unwrap().is_none());
        let cm = find_countermodel(&f("p | ~{1} p", 2), 2).unwrap().unwrap();
        assert_eq!(cm.world, 2);
        assert_eq!(cm.valuation.get("p", 2), Some(false));
    }

    #[test]
    fn countermodel_is_first_in_order() {
        // World 1 forces p true to falsify; world 2 forces p false. The
        // tuple (p@1, p@2) = (F, F) already falsifies world 2.
        let cm = find_countermodel(&f("~{1} p", 2), 2).unwrap().unwrap();
        assert_eq!(cm.valuation.mask("p"), Some(0));
        assert_eq!(cm.world, 2);
    }

    #[test]
    fn entailment_examples() {
        let e = entails(&[f("p", 2), f("p -> q", 2)], &f("q", 2), 2).unwrap();
        assert!(e.holds);
        let e = entails(&[f("p", 2), f("~{1} p", 2)], &f("q", 2), 2).unwrap();
        assert!(!e.holds);
        let cm = e.countermodel.unwrap();
        assert_eq!(cm.world, 2);
        assert_eq!(cm.valuation.get("p", 2), Some(true));
        assert_eq!(cm.valuation.get("q", 2), Some(false));
        assert!(entails(&[], &f("p -> q -> p", 2), 2).unwrap().holds);
    }

    #[test]
    fn hierarchy_examples() {
        assert!(hierarchy_check(&f("p -> q -> p", 2), 2).unwrap());
        assert!(hierarchy_check(&f("p | ~{1} p", 2), 2).unwrap());
        assert!(hierarchy_check(&f("bot{1} -> p", 2), 2).unwrap());
        assert!(!is_tautology(&f("bot{1} -> p", 3), 3).unwrap());
    }

    #[test]
    fn bounds() {
        let many: Vec<String> = (0..17).map(|i| alloc::format!("a{i}")).collect();
        let text = many.join(" -> ");
        assert!(matches!(
            classify(&f(&text, 2), 2),
            Err(SemanticsError::BoundExceeded { .. })
        ));
    }
}
