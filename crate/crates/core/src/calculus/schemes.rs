//! The scheme corpus: derivable schemes with their side conditions, and the
//! schemes that fail once a negation's chain is proper.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::chain::{chains_with_len, enumerate_chains, Chain, ChainError};
use crate::formula::{parse_schema, substitute, Formula, Schema, SubstError};
use crate::semantics::{classify, eval_world, SemanticsError, VerdictKind, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corpus {
    /// Theorems for every admissible chain tuple.
    Derivable,
    /// Falsifiable whenever the chains have between 1 and `n - 1` symbols.
    NonDerivable,
}

/// Restriction on the chain variables of a scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    None,
    /// `s` is a subchain of `k`.
    SInK,
    /// `k` is a subchain of `s`.
    KInS,
    /// `k` and `s` share no symbol.
    Disjoint,
    /// `r` differs from `k`.
    RNotK,
}

impl Condition {
    fn holds(self, cmap: &BTreeMap<Arc<str>, Chain>) -> bool {
        let get = |name: &str| cmap.get(name).copied();
        match self {
            Condition::None => true,
            Condition::SInK => matches!((get("s"), get("k")), (Some(s), Some(k)) if s.is_subchain(&k) == Ok(true)),
            Condition::KInS => matches!((get("k"), get("s")), (Some(k), Some(s)) if k.is_subchain(&s) == Ok(true)),
            Condition::Disjoint => {
                matches!((get("k"), get("s")), (Some(k), Some(s)) if k.common(&s).is_ok_and(|c| c.is_empty()))
            }
            Condition::RNotK => matches!((get("r"), get("k")), (Some(r), Some(k)) if r != k),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::None => "-",
            Condition::SInK => "s <= k",
            Condition::KInS => "k <= s",
            Condition::Disjoint => "k & s = {}",
            Condition::RNotK => "r != k",
        })
    }
}

/// A named scheme. Formula slots are `phi` and `psi`; chain slots are `k`,
/// `r` and `s`.
#[derive(Debug, PartialEq, Eq)]
pub struct SchemeId {
    pub name: &'static str,
    pub text: &'static str,
    pub corpus: Corpus,
    pub condition: Condition,
}

const fn d(name: &'static str, text: &'static str) -> SchemeId {
    SchemeId {
        name,
        text,
        corpus: Corpus::Derivable,
        condition: Condition::None,
    }
}

const fn nd(name: &'static str, text: &'static str) -> SchemeId {
    SchemeId {
        name,
        text,
        corpus: Corpus::NonDerivable,
        condition: Condition::None,
    }
}

const fn when(mut s: SchemeId, condition: Condition) -> SchemeId {
    s.condition = condition;
    s
}

pub static SCHEMES: &[SchemeId] = &[
    // negations of negations
    d("neg-commute", "~[k] ~[r] phi <-> ~[r] ~[k] phi"),
    d("strong-of-weak", "~ ~[k] phi <-> ~[k'] phi"),
    d("strong-of-complement", "~ ~[k'] phi <-> ~[k] phi"),
    d("complementary-pair", "~[k] ~[k'] phi <-> ~phi"),
    d("weak-double-neg", "~[k] ~[k] phi <-> phi"),
    // negated bottoms
    d("bottom-commute", "~[r] bot[k] <-> ~[k] bot[r]"),
    d("strong-bottom", "~ bot[k] <-> bot[k']"),
    d("strong-bottom-complement", "~ bot[k'] <-> bot[k]"),
    d("bottom-complement", "~[k] bot[k'] <-> bot"),
    d("bottom-self", "~[k] bot[k] <-> top"),
    // factorization
    d("neg-factor", "~[k] phi <-> ~[k ^ r] ~[r] phi"),
    d("bottom-factor", "bot[k] <-> ~[k ^ r] bot[r]"),
    // weak negation against its own chain
    d("weak-contradiction", "phi & ~[k] phi -> bot[k]"),
    d("weak-excluded-middle", "bot[k'] -> phi | ~[k] phi"),
    d("weak-explosion", "~[k] phi -> bot[k] -> phi"),
    d("weak-to-strong", "~[k] phi -> bot[k'] -> ~phi"),
    d("weak-iff-bottom", "~[k] phi -> (phi <-> bot[k])"),
    d("complementary-negations", "~[k] phi & ~[k'] phi -> bot"),
    d("complementary-bottoms", "bot[k] & bot[k'] -> bot"),
    d("bottom-non-contradiction", "bot[k] -> ~[k'] (phi & ~[k'] phi)"),
    d("and-intro", "~[k] phi & ~[k] psi -> ~[k] (phi & psi)"),
    d("or-split", "~[k] (phi | psi) -> ~[k] phi | ~[k] psi"),
    d("and-split", "~[k] (phi & psi) -> ~[k] phi | ~[k] psi"),
    d("or-intro", "~[k] phi & ~[k] psi -> ~[k] (phi | psi)"),
    // implication classes
    d("implication-class", "~[k] phi -> ~[s] psi -> ~[s ^ (k & s)] (phi -> psi)"),
    when(d("implication-class-sub", "~[k] phi -> ~[s] psi -> phi -> psi"), Condition::SInK),
    when(
        d("implication-class-super", "~[k] phi -> ~[s] psi -> ~[k ^ s] (phi -> psi)"),
        Condition::KInS,
    ),
    when(
        d("implication-class-disjoint", "~[k] phi -> ~[s] psi -> ~[s] (phi -> psi)"),
        Condition::Disjoint,
    ),
    // fail for proper chains
    nd("weak-explosion-any", "phi & ~[k] phi -> psi"),
    nd("weak-contradiction-full", "phi & ~[k] phi -> bot"),
    nd("weak-non-contradiction", "~[k] (phi & ~[k] phi)"),
    nd("excluded-middle-weak", "phi | ~[k] phi"),
    nd("bottom-explosion", "bot[k] -> phi"),
    when(nd("mixed-double-neg", "~[r] ~[k] phi -> phi"), Condition::RNotK),
    nd("weak-neg-explosion", "~[k] phi -> phi -> psi"),
    nd("reverse-contraposition", "(~[k] phi -> ~[k] psi) -> psi -> phi"),
    nd("contraposition", "(phi -> psi) -> ~[k] psi -> ~[k] phi"),
    nd("disjunctive-syllogism", "(phi | psi) & ~[k] phi -> psi"),
    nd("modus-tollens", "(phi -> psi) & ~[k] psi -> ~[k] phi"),
    nd("and-weaken", "~[k] phi -> ~[k] (phi & psi)"),
    nd("de-morgan-or", "~[k] phi | ~[k] psi -> ~[k] (phi & psi)"),
    nd("de-morgan-and", "~[k] (phi | psi) -> ~[k] phi & ~[k] psi"),
];

impl SchemeId {
    pub fn by_name(name: &str) -> Option<&'static SchemeId> {
        SCHEMES.iter().find(|s| s.name == name)
    }

    pub fn schema(&self) -> Schema {
        parse_schema(self.text).expect("corpus texts parse")
    }

    /// Number of formula slots and chain slots.
    pub fn arity(&self) -> (usize, usize) {
        let s = self.schema();
        (s.formula_vars().len(), s.chain_vars().len())
    }

    pub fn admits(&self, cmap: &BTreeMap<Arc<str>, Chain>) -> bool {
        self.condition.holds(cmap)
    }
}

impl fmt::Display for SchemeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("unknown scheme `{0}`")]
    UnknownScheme(String),
    #[error("scheme `{scheme}` takes {expected:?} formula/chain bindings, got {found:?}")]
    ArityMismatch {
        scheme: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("metavariable `{0}` is not bound")]
    UnboundMetavariable(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// The scheme's formula with its slots filled.
pub fn instantiate_scheme(
    id: &'static SchemeId,
    fmap: &BTreeMap<Arc<str>, Formula>,
    cmap: &BTreeMap<Arc<str>, Chain>,
    n: u8,
) -> Result<Formula, SchemeError> {
    let expected = id.arity();
    let found = (fmap.len(), cmap.len());
    if expected != found {
        return Err(SchemeError::ArityMismatch {
            scheme: id.name,
            expected,
            found,
        });
    }
    substitute(&id.schema(), fmap, cmap, n).map_err(|e| match e {
        SubstError::UnboundMetavariable(v) => SchemeError::UnboundMetavariable(v),
        SubstError::Chain(c) => SchemeError::Chain(c),
    })
}

/// Why an instance failed the audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditFailure {
    /// A derivable instance with a falsifying valuation.
    NotTautology(Option<Witness>),
    /// A non-derivable instance that is a tautology.
    NoCountermodel,
    /// The countermodel search returned a valuation that does not falsify.
    BadCountermodel(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditInstance {
    pub chains: Vec<(Arc<str>, Chain)>,
    pub formula: Formula,
    pub failure: AuditFailure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditRow {
    pub scheme: &'static SchemeId,
    pub instances: usize,
    pub failures: Vec<AuditInstance>,
}

impl AuditRow {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Largest world count [`audit`] accepts.
pub const AUDIT_MAX_WORLDS: u8 = 6;

/// Formula bindings used by the audit: `phi := p`, `psi := q`.
pub fn atomic_bindings(id: &SchemeId) -> BTreeMap<Arc<str>, Formula> {
    id.schema()
        .formula_vars()
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            let atom = ["p", "q", "r", "s"].get(i).copied().unwrap_or("t");
            (v, Formula::atom(atom))
        })
        .collect()
}

/// Every admissible chain binding of the scheme over `[n]`: all chains for
/// derivable schemes, chains of length `1..=n-1` for the others.
pub fn chain_tuples(id: &SchemeId, n: u8) -> Vec<BTreeMap<Arc<str>, Chain>> {
    let pool: Vec<Chain> = match id.corpus {
        Corpus::Derivable => enumerate_chains(n as u32).unwrap_or_default(),
        Corpus::NonDerivable => chains_with_len(n, 1, (n as usize).saturating_sub(1)),
    };
    let vars = id.schema().chain_vars();
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    product(&vars, &pool, &mut current, &mut out);
    out.retain(|cmap| id.admits(cmap));
    out
}

fn product(
    vars: &[Arc<str>],
    pool: &[Chain],
    current: &mut BTreeMap<Arc<str>, Chain>,
    out: &mut Vec<BTreeMap<Arc<str>, Chain>>,
) {
    let Some((v, rest)) = vars.split_first() else {
        out.push(current.clone());
        return;
    };
    for &c in pool {
        current.insert(v.clone(), c);
        product(rest, pool, current, out);
    }
    current.remove(v);
}

/// Checks every admissible instance of one scheme over `[n]`.
pub fn audit_scheme(id: &'static SchemeId, n: u8) -> Result<AuditRow, SemanticsError> {
    if n == 0 || n > AUDIT_MAX_WORLDS {
        return Err(SemanticsError::BoundExceeded {
            what: "audit world count",
            value: n as usize,
            max: AUDIT_MAX_WORLDS as usize,
        });
    }
    let fmap = atomic_bindings(id);
    let tuples = chain_tuples(id, n);
    let mut failures = Vec::new();
    for cmap in &tuples {
        let formula = instantiate_scheme(id, &fmap, cmap, n).map_err(|e| match e {
            SchemeError::Chain(c) => SemanticsError::from(c),
            other => SemanticsError::UnassignedAtom(other.to_string()),
        })?;
        let verdict = classify(&formula, n)?;
        let failure = match id.corpus {
            Corpus::Derivable if verdict.kind != VerdictKind::Tautology => {
                Some(AuditFailure::NotTautology(verdict.witness_false))
            }
            Corpus::Derivable => None,
            Corpus::NonDerivable => match verdict.witness_false {
                None => Some(AuditFailure::NoCountermodel),
                Some(w) if eval_world(&formula, w.world, &w.valuation)? => Some(AuditFailure::BadCountermodel(w)),
                Some(_) => None,
            },
        };
        if let Some(failure) = failure {
            failures.push(AuditInstance {
                chains: cmap.iter().map(|(k, v)| (k.clone(), *v)).collect(),
                formula,
                failure,
            });
        }
    }
    Ok(AuditRow {
        scheme: id,
        instances: tuples.len(),
        failures,
    })
}

/// Audits the whole corpus over `[n]`.
pub fn audit(n: u8) -> Result<Vec<AuditRow>, SemanticsError> {
    SCHEMES.iter().map(|id| audit_scheme(id, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn cmap(pairs: &[(&str, &[u32])], n: u8) -> BTreeMap<Arc<str>, Chain> {
        pairs
            .iter()
            .map(|(k, c)| (Arc::from(*k), Chain::canonical(c, n as u32).unwrap()))
            .collect()
    }

    fn fmap(pairs: &[(&str, &str)]) -> BTreeMap<Arc<str>, Formula> {
        pairs.iter().map(|(k, v)| (Arc::from(*k), Formula::atom(v))).collect()
    }

    #[test]
    fn names_are_unique_and_texts_parse() {
        for (i, s) in SCHEMES.iter().enumerate() {
            assert!(SCHEMES[..i].iter().all(|t| t.name != s.name), "{}", s.name);
            let (f, c) = s.arity();
            assert!((1..=2).contains(&c) && f <= 2, "{}", s.name);
        }
        assert_eq!(SCHEMES.iter().filter(|s| s.corpus == Corpus::Derivable).count(), 28);
        assert_eq!(SCHEMES.iter().filter(|s| s.corpus == Corpus::NonDerivable).count(), 14);
    }

    #[test]
    fn instantiation_examples() {
        let id = SchemeId::by_name("weak-contradiction").unwrap();
        let got = instantiate_scheme(id, &fmap(&[("phi", "p")]), &cmap(&[("k", &[1])], 2), 2).unwrap();
        assert_eq!(got, parse("(p & ~{1} p) -> bot{1}", 2).unwrap());

        let id = SchemeId::by_name("implication-class").unwrap();
        let got = instantiate_scheme(
            id,
            &fmap(&[("phi", "p"), ("psi", "q")]),
            &cmap(&[("k", &[1, 2]), ("s", &[2, 3])], 3),
            3,
        )
        .unwrap();
        assert_eq!(got, parse("~{1,2} p -> (~{2,3} q -> ~{3} (p -> q))", 3).unwrap());

        let id = SchemeId::by_name("and-intro").unwrap();
        let got = instantiate_scheme(id, &fmap(&[("phi", "p"), ("psi", "q")]), &cmap(&[("k", &[1])], 2), 2).unwrap();
        assert_eq!(got, parse("(~{1} p & ~{1} q) -> ~{1} (p & q)", 2).unwrap());
    }

    #[test]
    fn instantiation_errors() {
        let id = SchemeId::by_name("and-intro").unwrap();
        let err = instantiate_scheme(id, &fmap(&[("phi", "p")]), &cmap(&[("k", &[1])], 2), 2);
        assert!(matches!(err, Err(SchemeError::ArityMismatch { expected: (2, 1), found: (1, 1), .. })));
        let err = instantiate_scheme(id, &fmap(&[("phi", "p"), ("chi", "q")]), &cmap(&[("k", &[1])], 2), 2);
        assert_eq!(err, Err(SchemeError::UnboundMetavariable("psi".into())));
    }

    #[test]
    fn audit_passes_for_small_alphabets() {
        for n in 1..=3 {
            for row in audit(n).unwrap() {
                assert!(row.passed(), "{} n={n}: {:?}", row.scheme.name, row.failures.first());
            }
        }
    }

    #[test]
    fn side_conditions_filter_tuples() {
        let id = SchemeId::by_name("implication-class-sub").unwrap();
        let tuples = chain_tuples(id, 2);
        // pairs (k, s) with s a subchain of k over two symbols: 3^2
        assert_eq!(tuples.len(), 9);
        let id = SchemeId::by_name("mixed-double-neg").unwrap();
        assert_eq!(chain_tuples(id, 2).len(), 2);
        assert!(chain_tuples(id, 1).is_empty());
    }
}
