//! The Hilbert calculus: proofs, axioms, checking, premise discharge and
//! proof synthesis.

mod axioms;
mod builder;
mod check;
mod classical;
mod deduction;
mod proof;
mod schemes;
mod synth;
mod worlds;

pub use axioms::{
    a1, a2, a3, a4, a5, a6, a7, axiom_schema, axiom_schema_text, instantiate_axiom, match_axiom,
    match_axiom_as,
};
pub use builder::ProofBuilder;
pub use check::{check_proof, CheckError, CheckErrorKind};
pub use classical::Classical;
pub use deduction::{deduction_transform, reductio_transform, DeductionError};
pub use proof::{AxiomId, Bindings, Justification, Proof, ProofLine};
pub use schemes::{
    atomic_bindings, audit, audit_scheme, chain_tuples, instantiate_scheme, AuditFailure, AuditInstance,
    AuditRow, Condition, Corpus, SchemeError, SchemeId, AUDIT_MAX_WORLDS, SCHEMES,
};
pub use synth::{
    implication_class, synthesize_proof, synthesize_with, SynthError, SynthOptions, Synthesizer,
};
pub use worlds::prove_by_worlds;
