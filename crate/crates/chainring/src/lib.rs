//! Exact arithmetic and coding theory over finite chain rings.
//!
//! The crate builds up in layers:
//!
//! * [`ring`] - finite chain rings (Galois rings GR(p^s, n) and
//!   `F_{p^n}[u]/(u^s)`): Teichmuller sets, theta-adic digits, valuations.
//! * [`ext`] - unramified Galois extensions S|R: Frobenius, trace,
//!   trace-dual bases, fixed subrings.
//! * [`linalg`] - matrices over a chain ring and the unique row standard
//!   form, matrix inverses and the structured parity-check construction.
//! * [`code`] - linear codes as canonical row-standard-form objects:
//!   lattice operations, Euclidean/Hermitian duality, the Galois closure
//!   and interior, the trace/restriction correspondence, and rank bounds.
//! * [`cyclic`] - cyclic codes of length coprime to the residue
//!   characteristic: cyclotomic cosets, the lifted factorization of
//!   x^ell - 1, idempotents, evaluation codes, defining-set calculus and
//!   the BCH bound with exact minimum weights.
//! * [`oracle`] - brute-force reference implementations used to cross-check
//!   every identity at desk scale.
//! * [`verify`] - seeded verification suites behind the `verify` CLI
//!   subcommand and the acceptance tests.
//!
//! See the `examples/` directory for one runnable walkthrough per
//! capability, and the `chainring` binary for scriptable access.

pub mod code;
pub mod cyclic;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod fp;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod rng;
pub mod verify;

pub use error::{Error, Result};
pub use ring::{Degree, Element, Family, Ring, DEFAULT_ENUM_GUARD};
