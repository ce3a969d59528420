//! Exact desk-scale computations around general Kneser hypergraphs.
//!
//! The crate builds Kneser hypergraphs `KG^r(H, L)` from (multi)hypergraph
//! representations, computes generalized, alternating and strong
//! alternating Turan numbers, altermatic lower-bound certificates and exact
//! chromatic numbers, and checks the closed-form chromatic-number results
//! that tie them together.

pub mod bits;
pub mod error;
pub mod exactsolve;
pub mod harness;
pub mod hyperstruct;
pub mod kneser;
pub mod patterns;
pub mod turanalt;
pub mod verify;

pub use error::{Error, Result};
pub use hyperstruct::{Hypergraph, LinearOrdering, NamedFamily, SignVector};
