//! Frobenius objects in the category of finite spans.
//!
//! Spans are compared through their multiplicity matrices; monoids and
//! Frobenius structures are read off 2-truncated simplicial sets, and the
//! resulting 2d TQFT invariants are computed exactly.

pub mod constructions;
pub mod error;
pub mod frobenius;
pub mod io;
pub mod linear;
pub mod matrix;
pub mod rel;
pub mod simplicial;
pub mod span;
pub mod tqft;

pub use error::{Error, Result};
