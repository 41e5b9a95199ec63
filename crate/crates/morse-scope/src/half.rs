//! Exact half-integers.
//!
//! Gromov products on unit-edge graphs and sequence cross-ratios are always
//! multiples of 1/2. Storing twice the value as an `i64` keeps every
//! comparison exact.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A signed half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);

    /// Builds the half-integer `numerator_x2 / 2`.
    pub fn from_twice(numerator_x2: i64) -> Half {
        Half(numerator_x2)
    }

    pub fn from_int(value: i64) -> Half {
        Half(value * 2)
    }

    /// Twice the value; always exact.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub fn as_int(self) -> Option<i64> {
        if self.is_integer() {
            Some(self.0 / 2)
        } else {
            None
        }
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl From<u32> for Half {
    fn from(value: u32) -> Half {
        Half(i64::from(value) * 2)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}", self.0 as f64 / 2.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_arithmetic() {
        let g = Half::from_twice(5);
        assert_eq!(g.to_string(), "2.5");
        assert_eq!((g + Half::from_int(1)).to_string(), "3.5");
        assert_eq!((-g).twice(), -5);
        assert_eq!(Half::from_int(3).as_int(), Some(3));
        assert_eq!(g.as_int(), None);
        assert!(Half::from_twice(-3).abs() > Half::ZERO);
    }
}
