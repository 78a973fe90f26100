//! The ground field `Q(z)` and the ring specification `(sigma, delta)`.

mod clear;
pub mod intpoly;
mod ratfun;
mod ring;
mod upoly;

pub use clear::{clear_row, clear_row_with_lcm, primitive_row};
pub use intpoly::IntPoly;
pub use ratfun::RatFun;
pub use ring::{Mobius, RingKind, RingSpec};
pub use upoly::UPoly;

pub type Rational = num_rational::BigRational;
