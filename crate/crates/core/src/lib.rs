//! Finite rings and the properties studied around unit-regular and strongly
//! unit nil-clean rings.
//!
//! Rings are built from `Z(n)` with matrix, triangular, group-ring,
//! trivial-extension, generalized-matrix and formal-matrix constructions,
//! frozen to cache their units, idempotents, nilpotents and Jacobson radical,
//! and then classified by exhaustive search. The [`harness`] module turns
//! the ring-theoretic characterizations into executable suites that compare
//! number-theoretic fast paths with brute force.

pub mod constructions;
pub mod deciders;
pub mod error;
pub mod exec;
pub mod expr;
pub mod fastpath;
pub mod frozen;
pub mod groups;
pub mod harness;
pub mod ring;

pub use deciders::{classify, classify_with, PropertyReport};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use expr::{parse, GroupExpr, ParseError, RingExpr};
pub use frozen::{freeze, freeze_with, FrozenRing};
pub use groups::FiniteGroup;
pub use ring::{Caps, Element, Kind, Ring};
