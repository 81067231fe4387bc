//! Exact combinatorics of the inverse Kostka matrix.
//!
//! The crate enumerates semistandard and special rim-hook tableaux, builds
//! the Kostka matrix and its inverse as signed sums over special rim-hook
//! tableaux, runs the rooted-tableau sign-reversing involution that cancels
//! the last column of `K^{-1} K`, and expands chromatic symmetric functions
//! of (3+1)-free posets in the Schur and elementary bases.
//!
//! Matrices and expansions are generic over an exact signed scalar (see
//! [`Coefficient`]); the aliases below fix it to arbitrary-precision
//! integers, which is what every public entry point of the CLI uses.

pub mod error;
pub mod involution;
pub mod partitions;
pub mod posets;
pub mod render;
pub mod scalar;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use involution::{HookClass, RootedTableau, Rule, Trace};
pub use partitions::{enumerate_partitions, Cell, Partition};
pub use posets::{Graph, Poset};
pub use scalar::Coefficient;
pub use symfunc::{Basis, PartitionMatrix, SymFuncExpansion};
pub use tableaux::{RimHook, SemistandardTableau, SpecialRimHookTableau};

/// Arbitrary-precision integer used for all coefficients by default.
pub type Integer = num_bigint::BigInt;

/// Partition-indexed matrix with arbitrary-precision entries.
pub type IntMatrix = PartitionMatrix<Integer>;

/// Symmetric function expansion with arbitrary-precision coefficients.
pub type Expansion = SymFuncExpansion<Integer>;

/// Machine-word variants, adequate for every weight the test-suite touches.
pub type SmallMatrix = PartitionMatrix<i64>;
pub type SmallExpansion = SymFuncExpansion<i64>;
