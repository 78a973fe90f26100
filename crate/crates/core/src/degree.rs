use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A degree in `Z ∪ {-∞}`.
///
/// The derived ordering puts `NegInfinity` below every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }

    pub fn of_len(len: usize) -> Degree {
        if len == 0 {
            Degree::NegInfinity
        } else {
            Degree::Finite(len as i64 - 1)
        }
    }
}

impl From<i64> for Degree {
    fn from(d: i64) -> Self {
        Degree::Finite(d)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

/// Subtraction of a finite degree. Subtracting `-∞` is not meaningful and
/// yields `-∞`.
impl Sub for Degree {
    type Output = Degree;
    fn sub(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a - b),
            _ => Degree::NegInfinity,
        }
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        match self {
            Degree::Finite(a) => Degree::Finite(-a),
            Degree::NegInfinity => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::NegInfinity => write!(f, "-inf"),
        }
    }
}
