//! The axiom schemas and matching against them.
//!
//! Instances are built directly in the core language: `↔` is the expanded
//! conjunction of both implications, `¬_ε φ` is `φ` and `⊥_ε` is
//! `⊥_(n) → ⊥_(n)`. Matching pulls candidate bindings out of the formula's
//! shape, rebuilds the instance and compares, so a match always reproduces
//! its input.

use alloc::vec::Vec;

use crate::chain::Chain;
use crate::formula::{core_iff, parse_schema, Formula, Schema};

use super::proof::{AxiomId, Bindings};

fn strong(n: u8, f: Formula) -> Formula {
    Formula::strong_neg(n, f)
}

/// `⊥_c`, with `⊥_ε` written in core form.
pub(crate) fn core_bottom(c: Chain) -> Formula {
    if c.is_empty() {
        let full = Formula::Bottom(Chain::full(c.alphabet()));
        Formula::imp(full.clone(), full)
    } else {
        Formula::Bottom(c)
    }
}

/// `φ → (ψ → φ)`
pub fn a1(phi: Formula, psi: Formula) -> Formula {
    Formula::imp(phi.clone(), Formula::imp(psi, phi))
}

/// `(φ → (ψ → χ)) → ((φ → ψ) → (φ → χ))`
pub fn a2(phi: Formula, psi: Formula, chi: Formula) -> Formula {
    Formula::imp(
        Formula::imp(phi.clone(), Formula::imp(psi.clone(), chi.clone())),
        Formula::imp(Formula::imp(phi.clone(), psi), Formula::imp(phi, chi)),
    )
}

/// `(¬_(n)ψ → ¬_(n)φ) → ((¬_(n)ψ → φ) → ψ)`
pub fn a3(phi: Formula, psi: Formula, n: u8) -> Formula {
    let npsi = strong(n, psi.clone());
    Formula::imp(
        Formula::imp(npsi.clone(), strong(n, phi.clone())),
        Formula::imp(Formula::imp(npsi, phi), psi),
    )
}

/// `φ → (⊥_k → ¬_k φ)`
pub fn a4(phi: Formula, k: Chain) -> Formula {
    Formula::imp(
        phi.clone(),
        Formula::imp(core_bottom(k), Formula::neg_or_self(k, phi)),
    )
}

/// `¬_k ¬_r φ ↔ ¬_(k⊗r) φ`
pub fn a5(phi: Formula, k: Chain, r: Chain) -> Formula {
    let kr = k.coconcat(&r).expect("chains share an alphabet");
    core_iff(
        k.alphabet(),
        Formula::neg_or_self(k, Formula::neg_or_self(r, phi.clone())),
        Formula::neg_or_self(kr, phi),
    )
}

/// `¬_k ⊥_r ↔ ⊥_(k⊗r)`
pub fn a6(k: Chain, r: Chain) -> Formula {
    let kr = k.coconcat(&r).expect("chains share an alphabet");
    core_iff(
        k.alphabet(),
        Formula::neg_or_self(k, core_bottom(r)),
        core_bottom(kr),
    )
}

/// `⊥_k → ⊥_r` for `r` a subchain of `k`.
pub fn a7(k: Chain, r: Chain) -> Formula {
    Formula::imp(core_bottom(k), core_bottom(r))
}

/// The schema text of an axiom in the schema mini-syntax.
pub fn axiom_schema_text(id: AxiomId) -> &'static str {
    match id {
        AxiomId::A1 => "phi -> psi -> phi",
        AxiomId::A2 => "(phi -> psi -> chi) -> (phi -> psi) -> phi -> chi",
        AxiomId::A3 => "(~psi -> ~phi) -> (~psi -> phi) -> psi",
        AxiomId::A4 => "phi -> bot[k] -> ~[k] phi",
        AxiomId::A5 => "~[k] ~[r] phi <-> ~[k ^ r] phi",
        AxiomId::A6 => "~[k] bot[r] <-> bot[k ^ r]",
        AxiomId::A7 => "bot[k] -> bot[r]",
    }
}

pub fn axiom_schema(id: AxiomId) -> Schema {
    parse_schema(axiom_schema_text(id)).expect("axiom schemas parse")
}

/// The lowest-numbered axiom `f` is an instance of, with its bindings.
///
/// `f` should be in core form; a formula with sugar is expanded first when
/// its alphabet can be read off its chains.
pub fn match_axiom(f: &Formula) -> Option<(AxiomId, Bindings)> {
    let expanded;
    let f = if f.is_core() {
        f
    } else {
        expanded = f.expand(f.alphabet()?);
        &expanded
    };
    AxiomId::ALL
        .iter()
        .find_map(|&id| match_core(id, f).map(|b| (id, b)))
}

/// Bindings for `f` as an instance of the given axiom, if it is one.
pub fn match_axiom_as(id: AxiomId, f: &Formula) -> Option<Bindings> {
    if f.is_core() {
        match_core(id, f)
    } else {
        match_core(id, &f.expand(f.alphabet()?))
    }
}

fn match_core(id: AxiomId, f: &Formula) -> Option<Bindings> {
    match id {
        AxiomId::A1 => match_a1(f),
        AxiomId::A2 => match_a2(f),
        AxiomId::A3 => match_a3(f),
        AxiomId::A4 => match_a4(f),
        AxiomId::A5 => match_a5(f),
        AxiomId::A6 => match_a6(f),
        AxiomId::A7 => match_a7(f),
    }
}

fn match_a1(f: &Formula) -> Option<Bindings> {
    let (phi, rest) = f.as_imp()?;
    let (psi, phi2) = rest.as_imp()?;
    (phi == phi2).then(|| Bindings {
        phi: Some(phi.clone()),
        psi: Some(psi.clone()),
        ..Bindings::default()
    })
}

fn match_a2(f: &Formula) -> Option<Bindings> {
    let (lhs, _) = f.as_imp()?;
    let (phi, rest) = lhs.as_imp()?;
    let (psi, chi) = rest.as_imp()?;
    let candidate = a2(phi.clone(), psi.clone(), chi.clone());
    (&candidate == f).then(|| Bindings {
        phi: Some(phi.clone()),
        psi: Some(psi.clone()),
        chi: Some(chi.clone()),
        ..Bindings::default()
    })
}

fn as_strong_neg(f: &Formula) -> Option<(u8, &Formula)> {
    match f {
        Formula::Neg(c, body) if c.is_full() => Some((c.alphabet(), body)),
        _ => None,
    }
}

fn match_a3(f: &Formula) -> Option<Bindings> {
    let (lhs, _) = f.as_imp()?;
    let (npsi, nphi) = lhs.as_imp()?;
    let (n, psi) = as_strong_neg(npsi)?;
    let (_, phi) = as_strong_neg(nphi)?;
    let candidate = a3(phi.clone(), psi.clone(), n);
    (&candidate == f).then(|| Bindings {
        phi: Some(phi.clone()),
        psi: Some(psi.clone()),
        ..Bindings::default()
    })
}

fn match_a4(f: &Formula) -> Option<Bindings> {
    let (phi, rest) = f.as_imp()?;
    let (bot, _) = rest.as_imp()?;
    let n = f.alphabet()?;
    let k = as_core_bottom(bot, n)?;
    let candidate = a4(phi.clone(), k).expand(n);
    (&candidate == f).then(|| Bindings {
        phi: Some(phi.clone()),
        k: Some(k),
        ..Bindings::default()
    })
}

/// The chain `c` when `f` is `⊥_c` in core form.
fn as_core_bottom(f: &Formula, n: u8) -> Option<Chain> {
    match f {
        Formula::Bottom(c) if !c.is_empty() => Some(*c),
        _ if *f == core_bottom(Chain::empty(n)) => Some(Chain::empty(n)),
        _ => None,
    }
}

/// The sides of a core biconditional `¬_(n)((L → R) → ¬_(n)(R → L))`,
/// with `n`.
fn iff_sides(f: &Formula) -> Option<(u8, &Formula, &Formula)> {
    let (n, body) = as_strong_neg(f)?;
    let (lr, _) = body.as_imp()?;
    let (l, r) = lr.as_imp()?;
    Some((n, l, r))
}

/// Ways of reading `f` as `¬_k g` with `k` possibly empty, nonempty `k`
/// first.
fn peel(f: &Formula, n: u8) -> Vec<(Chain, &Formula)> {
    let mut out = Vec::with_capacity(2);
    if let Formula::Neg(k, body) = f {
        out.push((*k, &**body));
    }
    out.push((Chain::empty(n), f));
    out
}

fn match_a5(f: &Formula) -> Option<Bindings> {
    let (n, left, _) = iff_sides(f)?;
    for (k, inner) in peel(left, n) {
        for (r, phi) in peel(inner, n) {
            let candidate = a5(phi.clone(), k, r).expand(n);
            if &candidate == f {
                return Some(Bindings {
                    phi: Some(phi.clone()),
                    k: Some(k),
                    r: Some(r),
                    ..Bindings::default()
                });
            }
        }
        // ¬_k with the inner chain empty
        if !k.is_empty() {
            let candidate = a5(inner.clone(), Chain::empty(n), k).expand(n);
            if &candidate == f {
                return Some(Bindings {
                    phi: Some(inner.clone()),
                    k: Some(Chain::empty(n)),
                    r: Some(k),
                    ..Bindings::default()
                });
            }
        }
    }
    None
}

fn match_a6(f: &Formula) -> Option<Bindings> {
    let (n, left, _) = iff_sides(f)?;
    for (k, inner) in peel(left, n) {
        let Some(r) = as_core_bottom(inner, n) else { continue };
        let candidate = a6(k, r).expand(n);
        if &candidate == f {
            return Some(Bindings {
                k: Some(k),
                r: Some(r),
                ..Bindings::default()
            });
        }
    }
    None
}

fn match_a7(f: &Formula) -> Option<Bindings> {
    let (lhs, rhs) = f.as_imp()?;
    let n = f.alphabet()?;
    let k = as_core_bottom(lhs, n)?;
    let r = as_core_bottom(rhs, n)?;
    if !r.is_subchain(&k).ok()? {
        return None;
    }
    Some(Bindings {
        k: Some(k),
        r: Some(r),
        ..Bindings::default()
    })
}

/// Rebuilds the instance of `id` described by `b` over `[n]`.
pub fn instantiate_axiom(id: AxiomId, b: &Bindings, n: u8) -> Option<Formula> {
    let f = |x: &Option<Formula>| x.clone();
    Some(match id {
        AxiomId::A1 => a1(f(&b.phi)?, f(&b.psi)?),
        AxiomId::A2 => a2(f(&b.phi)?, f(&b.psi)?, f(&b.chi)?),
        AxiomId::A3 => a3(f(&b.phi)?, f(&b.psi)?, n),
        AxiomId::A4 => a4(f(&b.phi)?, b.k?),
        AxiomId::A5 => a5(f(&b.phi)?, b.k?, b.r?),
        AxiomId::A6 => a6(b.k?, b.r?),
        AxiomId::A7 => a7(b.k?, b.r?),
    }
    .expand(n))
}
