//! Exact models of the spaces in the (gl_n, gl_m)-duality picture and
//! checks of their decompositions.
//!
//! - [`combinatorics`]: partitions, tableaux, Kostka numbers, characters
//! - [`rsk`]: RSK and Robinson–Schensted
//! - [`linalg`]: exact rational linear algebra
//! - [`flags`]: flags over `Q^d`, orbit invariants, dimension calculus
//! - [`tensor`]: tensor space and symmetric-algebra models
//! - [`schur`]: Schur algebra and intertwiner spaces
//! - [`verify`]: the check suites, producing [`report::VerificationReport`]s

pub mod budget;
pub mod combinatorics;
pub mod error;
pub mod flags;
pub mod linalg;
pub mod report;
pub mod rsk;
pub mod schur;
pub mod tensor;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
