//! Rational Dyck paths, the sweep map, and its inversion.
//!
//! * [`path`]: frames, paths, ranks, area, dinv, and the rank complement.
//! * [`sweep`]: the sweep map, its SW/EN words, and inversion from both words.
//! * [`fuss`]: tableaux for `m = kn ± 1` and the linear-time inverse.
//! * [`reduction`]: removing a tableau column and enumerating its fibres.
//! * [`qtcatalan`]: path counts and higher q,t-Catalan polynomials.
//! * `oracle` (feature `oracle`): brute-force references.

pub mod error;
pub mod fuss;
pub mod path;
pub mod qtcatalan;
pub mod reduction;
pub mod sweep;

#[cfg(feature = "oracle")]
pub mod oracle;

pub use error::{Error, Result};
pub use fuss::{FussTableau, WalkPermutation};
pub use path::{DyckPath, Frame, Fuss, RankSequence, Sign, Step};
pub use qtcatalan::QtPolynomial;
pub use sweep::{BounceStrategy, EnWord, SwWord};
