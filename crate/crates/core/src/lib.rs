//! Exact-arithmetic toolkit for higher-order MDS codes.
//!
//! The crate decides whether a linear code over a finite field is MDS of a
//! given order, brute-forces average-radius list decodability of small codes,
//! evaluates field-size bounds exactly, and searches for Reed-Solomon codes
//! with the higher-order property. Everything is exact: finite-field
//! arithmetic, big-integer bound evaluation, and deterministic enumeration.

pub mod code;
pub mod collections;
mod error;
pub mod gf;
pub mod linalg;
pub mod listdec;
pub mod poly;
pub mod rs;
pub mod sizer;
pub mod verifier;

pub use code::CodeDescription;
pub use collections::{partitions, SetPartition, SubsetCollection};
pub use error::{Error, Result};
pub use gf::{Fe, Gf};
pub use linalg::{Matrix, Subspace};
pub use rs::RsCode;
pub use verifier::{VerificationReport, VerifyOptions};
