//! Truncated formal power series in the deformation parameter `z`.
//!
//! A `ZSeries` of truncation order `N` stores coefficients for `z^0..z^N`;
//! every operation drops degrees above `N` identically. Coefficients are
//! `ParamPoly`, so series may carry symbolic structure constants.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::ParamPoly;
use crate::rational::{fmt_rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSeries {
    coeffs: Vec<ParamPoly>,
}

impl ZSeries {
    pub fn zero(order: usize) -> Self {
        ZSeries {
            coeffs: vec![ParamPoly::zero(); order + 1],
        }
    }

    pub fn constant(p: ParamPoly, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = p;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(ParamPoly::one(), order)
    }

    /// Build from explicit coefficients `c0 + c1 z + ...`, padded/truncated
    /// to the requested order.
    pub fn from_coeffs(mut coeffs: Vec<ParamPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, ParamPoly::zero());
        ZSeries { coeffs }
    }

    /// A single term `c * z^k`.
    pub fn monomial(c: ParamPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &ParamPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_zero)
    }

    pub fn lowest_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.truncation_order() != other.truncation_order() {
            return Err(Error::TruncationMismatch {
                lhs: self.truncation_order(),
                rhs: other.truncation_order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(ZSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(ZSeries { coeffs })
    }

    pub fn negate(&self) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(ParamPoly::negate).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.truncation_order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn scale_poly(&self, p: &ParamPoly) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| c.mul(p)).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// `z -> -z`: flips the sign of odd-degree coefficients.
    pub fn negate_z(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { c.negate() } else { c.clone() })
            .collect();
        ZSeries { coeffs }
    }

    /// Divide by `z`. The constant term must vanish; the truncation order
    /// drops by one because the incoming top coefficient is unknown.
    pub fn div_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::DivByZ);
        }
        if self.coeffs.len() == 1 {
            return Ok(Self::zero(0));
        }
        Ok(ZSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiply by `z`. No information is lost: the truncation order grows
    /// by one, making this exactly inverse to `div_z`.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ParamPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        ZSeries { coeffs }
    }

    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, c)| k % 2 == 1 || c.is_zero())
    }

    /// Re-truncate to a (lower or higher) order.
    pub fn truncated(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ParamPoly::zero());
        ZSeries { coeffs }
    }

    pub fn substitute(&self, bindings: &std::collections::BTreeMap<crate::param::Param, Rat>) -> Self {
        ZSeries {
            coeffs: self.coeffs.iter().map(|c| c.substitute(bindings)).collect(),
        }
    }

    /// `sum_k c_k x^k` for a rational `x`; exact evaluation used by tests.
    pub fn eval_rat(&self, x: &Rat) -> Option<Rat> {
        let mut acc = Rat::zero();
        let mut xp = Rat::from_integer(1.into());
        for c in &self.coeffs {
            acc += c.as_constant()? * &xp;
            xp *= x;
        }
        Some(acc)
    }
}

impl fmt::Display for ZSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = if let Some(r) = c.as_constant() {
                fmt_rat(&r)
            } else {
                format!("({c})")
            };
            match k {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{cs}*z")?,
                _ => write!(f, "{cs}*z^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn c(n: i64, order: usize) -> ZSeries {
        ZSeries::constant(ParamPoly::constant(rat(n)), order)
    }

    #[test]
    fn truncated_product_drops_top() {
        // (1 + z)(1 - z) at N=1 -> 1
        let one_plus = ZSeries::from_coeffs(
            vec![ParamPoly::one(), ParamPoly::one()],
            1,
        );
        let one_minus = ZSeries::from_coeffs(
            vec![ParamPoly::one(), ParamPoly::constant(rat(-1))],
            1,
        );
        assert_eq!(one_plus.mul(&one_minus).unwrap(), c(1, 1));
    }

    #[test]
    fn sinh_square() {
        // (z + z^3/6)^2 at N=4 -> z^2 + z^4/3, by schoolbook convolution
        let s = ZSeries::from_coeffs(
            vec![
                ParamPoly::zero(),
                ParamPoly::one(),
                ParamPoly::zero(),
                ParamPoly::constant(ratio(1, 6)),
            ],
            4,
        );
        let sq = s.mul(&s).unwrap();
        let expect = ZSeries::from_coeffs(
            vec![
                ParamPoly::zero(),
                ParamPoly::zero(),
                ParamPoly::one(),
                ParamPoly::zero(),
                ParamPoly::constant(ratio(1, 3)),
            ],
            4,
        );
        assert_eq!(sq, expect);
    }

    #[test]
    fn additive_identity_and_mismatch() {
        let s = c(7, 3);
        assert_eq!(s.add(&ZSeries::zero(3)).unwrap(), s);
        assert!(matches!(
            s.add(&ZSeries::zero(2)),
            Err(Error::TruncationMismatch { .. })
        ));
    }

    #[test]
    fn negate_z_flips_odd() {
        let s = ZSeries::from_coeffs(
            vec![
                ParamPoly::constant(rat(1)),
                ParamPoly::constant(rat(2)),
                ParamPoly::constant(rat(3)),
            ],
            2,
        );
        let t = s.negate_z();
        assert_eq!(t.coeff(0).as_constant().unwrap(), rat(1));
        assert_eq!(t.coeff(1).as_constant().unwrap(), rat(-2));
        assert_eq!(t.coeff(2).as_constant().unwrap(), rat(3));
        assert_eq!(t.negate_z(), s);
    }

    #[test]
    fn div_z_shifts_down() {
        // (z + z^3/6) / z = 1 + z^2/6, truncation drops 3 -> 2
        let s = ZSeries::from_coeffs(
            vec![
                ParamPoly::zero(),
                ParamPoly::one(),
                ParamPoly::zero(),
                ParamPoly::constant(ratio(1, 6)),
            ],
            3,
        );
        let d = s.div_z().unwrap();
        assert_eq!(d.truncation_order(), 2);
        assert_eq!(d.coeff(0), &ParamPoly::one());
        assert_eq!(d.coeff(2).as_constant().unwrap(), ratio(1, 6));
        assert!(d.is_even());
        assert!(!d.is_odd());

        assert!(matches!(c(1, 2).div_z(), Err(Error::DivByZ)));
    }

    #[test]
    fn div_z_inverts_mul_z() {
        let s = ZSeries::from_coeffs(
            vec![ParamPoly::constant(rat(4)), ParamPoly::constant(rat(-5))],
            1,
        );
        assert_eq!(s.mul_z().div_z().unwrap(), s);
    }
}
