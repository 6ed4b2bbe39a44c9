//! Exact knot invariants computed from a Seifert matrix.
//!
//! The crate covers Tristram–Levine signature functions and their integrals
//! (abelian L²-eta invariants), averages over finite cyclic covers, the torsion
//! homology of cyclic covers with its linking form, explicit metabelian unitary
//! representations of `Z/m ⋉ F`, and residual-finiteness resolutions of
//! `Z ⋉ Λ/ΔΛ`. All returned values are exact or carry certified error bounds.

pub mod alexmod;
pub mod cyclotomic;
pub mod fixtures;
pub mod interval;
pub mod laurent;
pub mod matrix;
pub mod mbreps;
pub mod numtheory;
pub mod qpoly;
pub mod resolve;
pub mod seifert;
pub mod signature;
pub mod snf;

pub use laurent::IntLaurentPoly;
pub use seifert::{alexander_polynomial, arf_invariant, find_seifert_metabolizer, Metabolizer, SeifertError, SeifertMatrix};
