//! Exact-arithmetic analysis of finite normal-form games via the semi-tensor
//! product of matrices: symmetry verification (ordinary, weighted, renaming,
//! strategy and name-irrelevant) through linear representations of the
//! symmetric group, and synthesis of (weighted) potential functions,
//! including closed forms for symmetric and negation-symmetric Boolean games.
//!
//! All arithmetic is exact rational; every identity checked by this crate is
//! bit-exact. Values are immutable after construction and all operations are
//! pure functions, so everything here can be freely shared across threads.

pub mod boolean;
pub mod cli;
pub mod game;
pub mod group;
pub mod linalg;
pub mod potential;
pub mod rational;
pub mod stp;
pub mod symmetry;

use std::fmt;

/// An enumeration or basis computation would exceed its configured size
/// bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundExceeded {
    pub required: u128,
    pub bound: u128,
}

impl fmt::Display for BoundExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "computation size {} exceeds the configured bound {}",
            self.required, self.bound
        )
    }
}

impl std::error::Error for BoundExceeded {}
