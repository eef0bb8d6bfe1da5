//! Exact construction and analysis of binary Reed-Muller codes and the
//! quantum codes built from them: CSS codes, entanglement-assisted (EA) CSS
//! codes, and EA tensor product codes.
//!
//! Everything is computed exactly: linear algebra over GF(2) on bit-packed
//! matrices, code parameters as arbitrary-precision integers, and rates as
//! exact rationals. Floating point is never used internally; decimal output
//! is rendered from the exact rationals on demand.
//!
//! Module map:
//!
//! * [`gf2`] — dense bit-packed GF(2) matrices, vectors, and symplectic
//!   vectors, with rank, reduced row echelon form, kernel, Kronecker
//!   products, and row-space tests.
//! * [`rm`] — Reed-Muller generator/parity-check construction from monomial
//!   evaluation vectors, code parameters, and a brute-force distance oracle.
//! * [`tpc`] — classical tensor product and product codes.
//! * [`ea`] — CSS check matrices, ebit counting, symplectic Gram-Schmidt,
//!   and entanglement-extended check matrices.
//! * [`rate`] — exact coding/trade-off/catalytic rates, the positive
//!   catalytic-rate threshold search, region classification of the (r, m)
//!   plane, and table generation.
//! * [`verify`] — seeded, self-contained invariant suites runnable from the
//!   CLI.

pub mod binom;
pub mod caps;
pub mod ea;
pub mod error;
pub mod gf2;
pub mod params;
pub mod rate;
pub mod rm;
pub mod tpc;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
