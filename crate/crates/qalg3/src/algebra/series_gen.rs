//! Truncated Taylor expansions of standard functions of `c*z*G`.
//!
//! Powers of a single generator commute, so these elements are diagonal on
//! the monomials `G^p`.

use crate::poly::ParamPoly;
use crate::rational::inv_factorial;
use crate::series::ZSeries;

use super::element::{AlgElement, Gen, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `exp(c z G)`
    Exp,
    /// `sinh(c z G) / z` — the z^0 layer is `c G`
    SinhOverZ,
    /// `cosh(c z G)`
    Cosh,
    /// `sinh(c z G) / (c z)` — the z^0 layer is `G`, finite at `c = 0`
    SinhOverScaledZ,
}

/// The truncated expansion of the chosen function of `c * z * g`.
pub fn generator_series(g: Gen, kind: SeriesKind, c: &ParamPoly, truncation: usize) -> AlgElement {
    let mut out = AlgElement::zero(truncation);
    let mono = |p: u32| -> Monomial {
        match g {
            Gen::A => Monomial::new(p, 0, 0),
            Gen::B => Monomial::new(0, p, 0),
            Gen::C => Monomial::new(0, 0, p),
        }
    };
    match kind {
        SeriesKind::Exp => {
            for k in 0..=truncation {
                let coeff = c.pow(k as u32).scale(&inv_factorial(k));
                out.add_series(mono(k as u32), ZSeries::monomial(coeff, k, truncation));
            }
        }
        SeriesKind::SinhOverZ => {
            let mut m = 0;
            while 2 * m <= truncation {
                let coeff = c.pow((2 * m + 1) as u32).scale(&inv_factorial(2 * m + 1));
                out.add_series(
                    mono((2 * m + 1) as u32),
                    ZSeries::monomial(coeff, 2 * m, truncation),
                );
                m += 1;
            }
        }
        SeriesKind::SinhOverScaledZ => {
            let mut m = 0;
            while 2 * m <= truncation {
                let coeff = c.pow((2 * m) as u32).scale(&inv_factorial(2 * m + 1));
                out.add_series(
                    mono((2 * m + 1) as u32),
                    ZSeries::monomial(coeff, 2 * m, truncation),
                );
                m += 1;
            }
        }
        SeriesKind::Cosh => {
            let mut m = 0;
            while 2 * m <= truncation {
                let coeff = c.pow((2 * m) as u32).scale(&inv_factorial(2 * m));
                out.add_series(
                    mono((2 * m) as u32),
                    ZSeries::monomial(coeff, 2 * m, truncation),
                );
                m += 1;
            }
        }
    }
    out
}
