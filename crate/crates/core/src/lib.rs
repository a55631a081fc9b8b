//! Eulerian recurrences, their even/odd pair systems, and the brute-force
//! combinatorial oracles used to check every identity between them.
//!
//! The modules line up with the layers of the computation:
//!
//! - [`poly`]: exact dense polynomials over `Z` and `Q`.
//! - [`recurrence`]: single recurrences, pair systems, the derivation between
//!   them, and the catalog of named sequences.
//! - [`enumerate`]: permutations, signed permutations, Stirling permutations
//!   and their statistics.
//! - [`analyze`]: symmetry, unimodality, gamma expansions, real roots,
//!   interlacing and Hurwitz stability.
//! - [`series`]: truncated exponential generating functions.
//! - [`identities`]: the registry of executable checks.
//! - [`dsl`]: the `.eurec` text format for single recurrences.

pub mod analyze;
pub mod dsl;
pub mod enumerate;
pub mod error;
pub mod identities;
mod par;
pub mod poly;
pub mod recurrence;
pub mod series;

pub use error::{Error, Result};
pub use par::set_threads;
pub use poly::{DegreeBound, IntPoly, RatPoly};
pub use recurrence::{CoeffFamily, PairSystemSpec, RecurrenceSpec};
