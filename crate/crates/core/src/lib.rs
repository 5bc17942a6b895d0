//! Exact ideal arithmetic in finite commutative rings.
//!
//! A ring is presented by an additive basis with cyclic orders and a table of
//! structure constants; every presentation is validated exhaustively at
//! construction time. Ideals are additive subgroups in a unique canonical
//! (Howell-style) form, so equality, hashing and deterministic ordering are
//! matrix comparisons. On top of the lattice operations sits a factorization
//! engine that classifies ideals as molecules (ideals with no factorization
//! into proper ideals) and enumerates all factorizations into molecules.
//!
//! The `construct` module builds finite models of infinite domains together
//! with an exactness certificate: the kernel of the truncation is contained in
//! the square of the ideal under study, so every product of ideals containing
//! that ideal is computed exactly.
//!
//! The crate is `no_std` (with `alloc`); everything is deterministic.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(any(test, feature = "test-oracle"))]
extern crate std;

pub mod construct;
pub mod factor;
pub mod ideal;
pub mod linalg;
pub mod props;
pub mod ring;

#[cfg(any(test, feature = "test-oracle"))]
pub mod oracle;

use alloc::string::String;
use core::fmt;

/// Errors shared by ring construction, ideal arithmetic and the engines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A ring presentation violates an axiom (associativity, identity,
    /// order consistency, ...) or a constructor argument is out of range.
    InvalidPresentation(String),
    /// Two operands belong to rings with different presentations.
    RingMismatch,
    /// No unital embedding exists between the given fields.
    NoEmbedding(String),
    /// A ring or quotient exceeds the configured size guard.
    SizeGuardExceeded { size: u128, limit: u128 },
    /// An operation was invoked outside its stated domain
    /// (zero or full ideal where a proper one is required, etc.).
    PreconditionViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPresentation(why) => write!(f, "invalid presentation: {why}"),
            Error::RingMismatch => write!(f, "ring mismatch: operands live in different rings"),
            Error::NoEmbedding(why) => write!(f, "no embedding: {why}"),
            Error::SizeGuardExceeded { size, limit } => {
                write!(f, "size guard exceeded: {size} elements, limit {limit}")
            }
            Error::PreconditionViolation(why) => write!(f, "precondition violated: {why}"),
        }
    }
}

impl core::error::Error for Error {}

/// Default bound on ring and quotient sizes accepted by the enumerating
/// operations. Configurable everywhere it applies.
pub const DEFAULT_MAX_RING_SIZE: u64 = 1 << 24;
