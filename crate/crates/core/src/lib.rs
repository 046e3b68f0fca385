//! Finite models of domain semirings, test dioids with domain, antidomain
//! semirings and domain quantales.
//!
//! Algebras are operation tables over dense element indices
//! ([`FiniteAlgebra`]). The [`laws`] module checks each axiom and derived
//! statement exhaustively with minimal counterexample witnesses, [`models`]
//! builds relation and path algebras and the named example structures, and
//! [`finder`] enumerates small dioids and domain maps to search for models
//! and counterexamples.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod finder;
pub mod lattice;
pub mod laws;
pub mod models;
pub mod subset;

pub use algebra::{validate, Elem, FiniteAlgebra, Issue, RawAlgebra, ValidationReport};
pub use error::{Error, Result};
pub use lattice::{
    complemented_subidentities, fixpoints, image, is_boolean_subalgebra, lattice_view, subidentities, LatticeView,
};
pub use laws::{check, CheckOptions, LawId, LawReport, LawStatus};
pub use subset::Subset;
