//! Propositional calculus with multiple negations: chains, formulas,
//! multi-world semantics and a Hilbert-style calculus.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod chain;
pub mod formula;

pub use chain::{enumerate_chains, Chain, ChainError, MAX_WORLDS};
pub use formula::{parse, parse_schema, substitute, Formula, ParseError, Schema, SourceSpan};

pub mod semantics;

pub use semantics::{
    classify, contingency_class, entails, eval, eval_world, find_countermodel, hierarchy_check,
    Valuation, Verdict, VerdictKind, Witness,
};

pub mod calculus;

pub use calculus::{
    audit, check_proof, deduction_transform, instantiate_scheme, match_axiom, synthesize_proof,
    AxiomId, Justification, Proof, ProofLine, SchemeId,
};
