//! File formats and the command-line front end for `cpn-core`.

pub mod cli;
pub mod json;
pub mod proof_file;

pub use json::{valuation_from_json, valuation_to_json};
pub use proof_file::{parse_proof, write_proof, ProofFileError};
