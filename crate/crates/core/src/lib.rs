//! Linear algebra over idempotent semirings, applied to path problems.
//!
//! The pieces fit together in three layers:
//!
//! - [`semiring`]: the scalar algebra. Five ready-made instances
//!   (max-plus, min-plus, boolean, max-min, max-times) share one
//!   [`semiring::Semiring`] trait with ⊕, ⊙, the zero φ, the unit e,
//!   and the scalar star a* = e ⊕ a ⊕ a² ⊕ ….
//! - [`matrix`]: dense matrices and vectors over any such semiring,
//!   with products, powers, the two closure routines (back substitution
//!   for strictly upper triangular matrices, pivot elimination for
//!   general ones), operation counters, and a text format.
//! - [`lis`] and [`pathproblems`]: applications. The longest increasing
//!   subsequence of a key sequence falls out of one triangular solve
//!   over max-plus; shortest paths, reachability, bottlenecks, and
//!   reliabilities are all the same closure under different semirings.
//!
//! ```
//! use pathalgebra::lis::{lis_backsub, Sequence};
//!
//! let s = Sequence::from(vec![5, 2, 8, 6, 3, 6, 9, 7]);
//! let result = lis_backsub(&s);
//! assert_eq!(result.length, 4);
//! let keys: Vec<i64> = result.witness.unwrap().into_iter().map(|(_, k)| k).collect();
//! assert_eq!(keys, vec![2, 3, 6, 9]);
//! ```

pub mod error;
pub mod lis;
pub mod matrix;
pub mod pathproblems;
pub mod semiring;

pub use error::Error;
pub use matrix::{OpCount, SemiringMatrix, SemiringVector, ShapeHint};
pub use semiring::{Elem, ExtendedScalar, RawWeight, Semiring, SemiringKind};
