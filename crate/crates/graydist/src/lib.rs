//! Verification workbench for monads and distributive laws presented by finite
//! data.
//!
//! The toolkit has three layers:
//!
//! - a combinatorial layer: the augmented simplex and interval categories
//!   ([`ordinals`]), finitely presented strict 2-categories with a formal
//!   2-cell term algebra ([`twocat`]), tensor-style presentations of walking
//!   monads and their iterated powers ([`gray`]), and the path-based lax
//!   functor classifier ([`classifier`]);
//! - a semantic layer: finite polynomial (container) endofunctors of finite
//!   sets with decidable equality of natural transformations and a pointwise
//!   brute-force oracle ([`container`]);
//! - a law layer: monad, distributive-law, Yang-Baxter and n-fold system
//!   checkers ([`laws`]) and the Writer/Either parametric constructions with
//!   their module and coslice lifts ([`parametric`]).
//!
//! Everything is exhaustive at desk scale: sets are small, checks are exact,
//! and every failure carries a concrete counterexample.

pub mod classifier;
pub mod container;
pub mod error;
pub mod gray;
pub mod laws;
pub mod ordinals;
pub mod parametric;
pub mod report;
pub mod scenario;
pub mod twocat;

pub use error::{Error, Result};
pub use report::{CheckInstance, CheckReport};
