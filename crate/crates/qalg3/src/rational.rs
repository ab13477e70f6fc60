//! Exact rational scalars.
//!
//! Every numeric coefficient in the engine is a `Rat` (arbitrary-precision
//! rational, always in lowest terms with a positive denominator). There is no
//! floating point anywhere: deformation identities are checked exactly.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rat = BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fraction `p/q`. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse a rational from `"p"` or `"p/q"` notation, exactly.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let p: BigInt = num.trim().parse().ok()?;
        let q: BigInt = den.trim().parse().ok()?;
        if q == BigInt::from(0) {
            return None;
        }
        Some(Rat::new(p, q))
    } else {
        let p: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(p))
    }
}

/// Render a rational as `p` or `p/q` (lowest terms, denominator positive).
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `1/n!` as an exact rational.
pub fn inv_factorial(n: usize) -> Rat {
    let mut f = BigInt::from(1);
    for k in 2..=n {
        f *= BigInt::from(k as u64);
    }
    Rat::new(BigInt::from(1), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("2/3").unwrap(), ratio(2, 3));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7));
        assert_eq!(parse_rat(" 4 / -6 ").unwrap(), ratio(-2, 3));
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
        assert_eq!(fmt_rat(&ratio(-2, 3)), "-2/3");
        assert_eq!(fmt_rat(&rat(5)), "5");
    }

    #[test]
    fn factorials() {
        assert_eq!(inv_factorial(0), rat(1));
        assert_eq!(inv_factorial(5), ratio(1, 120));
        assert!(!inv_factorial(11).is_zero());
    }
}
