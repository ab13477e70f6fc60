//! The closed set of symbolic parameters: nine structure constants and `rho`.
//!
//! The parameter universe is fixed once and for all; this keeps polynomial
//! canonicalization and constraint elimination decidable without a general
//! variable registry.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Number of admissible parameter names.
pub const PARAM_COUNT: usize = 10;

/// A symbolic parameter: one of `a1..a3`, `b1..b3`, `c1..c3`, `rho`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    Rho,
}

impl Param {
    /// All parameters in canonical order.
    pub const ALL: [Param; PARAM_COUNT] = [
        Param::A1,
        Param::A2,
        Param::A3,
        Param::B1,
        Param::B2,
        Param::B3,
        Param::C1,
        Param::C2,
        Param::C3,
        Param::Rho,
    ];

    /// Index of the parameter within the canonical order.
    pub fn index(self) -> usize {
        match self {
            Param::A1 => 0,
            Param::A2 => 1,
            Param::A3 => 2,
            Param::B1 => 3,
            Param::B2 => 4,
            Param::B3 => 5,
            Param::C1 => 6,
            Param::C2 => 7,
            Param::C3 => 8,
            Param::Rho => 9,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::A1 => "a1",
            Param::A2 => "a2",
            Param::A3 => "a3",
            Param::B1 => "b1",
            Param::B2 => "b2",
            Param::B3 => "b3",
            Param::C1 => "c1",
            Param::C2 => "c2",
            Param::C3 => "c3",
            Param::Rho => "rho",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        for p in Param::ALL {
            if p.name() == s {
                return Ok(p);
            }
        }
        Err(Error::UnknownParameter(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_names() {
        for p in Param::ALL {
            assert_eq!(p.name().parse::<Param>().unwrap(), p);
        }
    }

    #[test]
    fn rejects_foreign_names() {
        assert!("d1".parse::<Param>().is_err());
        assert!("z".parse::<Param>().is_err());
    }
}
