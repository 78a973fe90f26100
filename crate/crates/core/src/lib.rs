//! Exact Hermite forms of matrices of Ore polynomials over `Q(z)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`field`]: exact arithmetic in `Q`, `Q[z]` and `Q(z)`, plus the ring
//!   specification that fixes the automorphism `sigma` and the
//!   `sigma`-derivation `delta`.
//! * [`ore`]: the Ore polynomial ring `Q(z)[D; sigma, delta]`.
//! * [`euclid`]: one-sided Euclidean algorithms (GCRD/LCLM and GCLD/LCRM).
//! * [`skewfrac`]: the skew field of fractions, with its degree valuation.
//! * [`detform`]: quasideterminants, skew-field inverses and the degree of
//!   the Dieudonne determinant.
//! * [`hermite`]: the Hermite form, computed either by Euclidean elimination
//!   or by solving linear systems over `Q(z)` for a guessed diagonal degree
//!   sequence.
//! * [`text`]: the textual syntax used by the command-line tool.

pub mod degree;
pub mod detform;
pub mod error;
pub mod euclid;
pub mod field;
pub mod hermite;
pub mod matrix;
pub mod ore;
pub mod skewfrac;
pub mod text;

pub use degree::Degree;
pub use error::{Error, Result};
pub use field::{RatFun, Rational, RingKind, RingSpec, UPoly};
pub use matrix::OreMatrix;
pub use ore::OrePoly;
pub use skewfrac::SkewFraction;
