//! System BV in the calculus of structures.
//!
//! - [`structure`]: structures modulo the equational theory, contexts, depth.
//! - [`web`]: relation webs, their characterization and reconstruction.
//! - [`prover`]: deep-inference proof search and derivation checking.
//! - [`counterexample`]: the `alpha_n` / `S_n` family and its certified proofs.
//! - [`shallow`]: structure schemes, the strength order and shallow rules.
//! - [`fixtures`]: worked examples with known answers.

pub mod counterexample;
pub mod exec;
pub mod fixtures;
pub mod prover;
pub mod shallow;
pub mod structure;
pub mod web;

pub use structure::{parse, Atom, Kind, Structure};
