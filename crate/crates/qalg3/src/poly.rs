//! Sparse multivariate polynomials over the fixed parameter set.
//!
//! Terms are kept in a `BTreeMap` keyed by exponent vectors under graded
//! lexicographic order, so equality is structural and iteration order is
//! canonical. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::param::{Param, PARAM_COUNT};
use crate::rational::{fmt_rat, Rat};

/// Exponent vector over the ten parameter names, ordered graded-lex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exps(pub [u16; PARAM_COUNT]);

impl Exps {
    pub const UNIT: Exps = Exps([0; PARAM_COUNT]);

    pub fn var(p: Param) -> Self {
        let mut e = [0; PARAM_COUNT];
        e[p.index()] = 1;
        Exps(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Exps) -> Exps {
        let mut e = [0u16; PARAM_COUNT];
        for i in 0..PARAM_COUNT {
            e[i] = self.0[i] + other.0[i];
        }
        Exps(e)
    }

    /// Componentwise divisibility: does `self` divide `other`?
    fn divides(&self, other: &Exps) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Exps) -> Exps {
        let mut e = [0u16; PARAM_COUNT];
        for i in 0..PARAM_COUNT {
            e[i] = self.0[i] - other.0[i];
        }
        Exps(e)
    }
}

impl Ord for Exps {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exps {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in the fixed parameters with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Exps, Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Exps::UNIT, c);
        }
        p
    }

    pub fn var(p: Param) -> Self {
        let mut q = Self::zero();
        q.terms.insert(Exps::var(p), Rat::one());
        q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Exps::UNIT)
                .is_some_and(|c| c.is_one())
    }

    /// The constant value, if the polynomial has no symbolic part.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Exps::UNIT) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Exps::degree).max().unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exps, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute rationals for (a subset of) the parameters.
    pub fn substitute(&self, bindings: &BTreeMap<Param, Rat>) -> Self {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *e;
            for (p, v) in bindings {
                let k = e.0[p.index()];
                if k > 0 {
                    let mut vp = Rat::one();
                    for _ in 0..k {
                        vp *= v;
                    }
                    coeff *= vp;
                    rest.0[p.index()] = 0;
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Substitute a polynomial for a single parameter.
    pub fn substitute_poly(&self, p: Param, value: &ParamPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let k = e.0[p.index()];
            let mut rest = *e;
            rest.0[p.index()] = 0;
            let mut term = ParamPoly {
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            if k > 0 {
                term = term.mul(&value.pow(k as u32));
            }
            out = out.add(&term);
        }
        out
    }

    /// Leading term under graded-lex order.
    pub fn leading(&self) -> Option<(&Exps, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Canonical form: content 1, positive leading coefficient.
    ///
    /// Two polynomials cutting out the same hypersurface with proportional
    /// coefficients normalize to the identical representation.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rat::new(num_gcd, den_lcm);
        if self.leading().unwrap().1.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        self.scale(&inv)
    }

    /// Exact multivariate division by a single divisor; `Some(q)` iff
    /// `self == q * divisor`.
    pub fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (lead_e, lead_c) = divisor.leading().unwrap();
        let lead_e = *lead_e;
        let lead_c = lead_c.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        loop {
            let Some((e, c)) = rem.leading().map(|(e, c)| (*e, c.clone())) else {
                return Some(quot);
            };
            if !lead_e.divides(&e) {
                // leading term not reducible: not an exact multiple
                return None;
            }
            let qe = e.div(&lead_e);
            let qc = c / &lead_c;
            let mut mono = Self::zero();
            mono.terms.insert(qe, qc);
            quot = quot.add(&mono);
            rem = rem.sub(&mono.mul(divisor));
        }
    }

    /// If the polynomial reads `k*x + rest` with `k` a nonzero rational and
    /// `x` absent from `rest`, return `(x, -rest/k)` as a substitution.
    pub fn solve_linear(&self) -> Option<(Param, ParamPoly)> {
        for p in Param::ALL {
            let idx = p.index();
            let mut coeff: Option<Rat> = None;
            let mut ok = true;
            let mut rest = ParamPoly::zero();
            for (e, c) in &self.terms {
                let k = e.0[idx];
                if k == 0 {
                    rest.add_term(*e, c.clone());
                } else if k == 1 && e.degree() == 1 {
                    if coeff.is_some() {
                        ok = false;
                        break;
                    }
                    coeff = Some(c.clone());
                } else {
                    ok = false;
                    break;
                }
            }
            if ok {
                if let Some(k) = coeff {
                    return Some((p, rest.scale(&(-k.recip()))));
                }
            }
        }
        None
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // descending graded-lex, like one would write by hand
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mut mono = String::new();
            for p in Param::ALL {
                let k = e.0[p.index()];
                if k == 1 {
                    mono.push_str(&format!("*{}", p.name()));
                } else if k > 1 {
                    mono.push_str(&format!("*{}^{}", p.name(), k));
                }
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{}", fmt_rat(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", &mono[1..])?;
            } else {
                write!(f, "{}{}", fmt_rat(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: Self) -> ParamPoly {
        ParamPoly::add(self, rhs)
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: Self) -> ParamPoly {
        ParamPoly::sub(self, rhs)
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: Self) -> ParamPoly {
        ParamPoly::mul(self, rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn v(p: Param) -> ParamPoly {
        ParamPoly::var(p)
    }

    #[test]
    fn product_with_binomial() {
        // (a2*c1) * (1 + rho) = a2*c1 + a2*c1*rho
        let a2c1 = v(Param::A2).mul(&v(Param::C1));
        let one_plus_rho = ParamPoly::one().add(&v(Param::Rho));
        let prod = a2c1.mul(&one_plus_rho);
        let expect = a2c1.add(&a2c1.mul(&v(Param::Rho)));
        assert_eq!(prod, expect);
    }

    #[test]
    fn annihilator_and_difference_of_squares() {
        let p = v(Param::A1).add(&ParamPoly::constant(ratio(3, 2)));
        assert!(p.mul(&ParamPoly::zero()).is_zero());

        let x = v(Param::B1);
        let y = v(Param::B2);
        let lhs = x.add(&y).mul(&x.sub(&y));
        let rhs = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_trivializes_jacobi_factor() {
        // (1-rho) * [a2*c1*(1+rho) - a1*c2] vanishes at rho = 1
        let rho = v(Param::Rho);
        let one = ParamPoly::one();
        let inner = v(Param::A2)
            .mul(&v(Param::C1))
            .mul(&one.add(&rho))
            .sub(&v(Param::A1).mul(&v(Param::C2)));
        let p = one.sub(&rho).mul(&inner);
        let out = p.substitute(&BTreeMap::from([(Param::Rho, rat(1))]));
        assert!(out.is_zero());

        // empty bindings: identity
        assert_eq!(p.substitute(&BTreeMap::new()), p);

        // full binding evaluates to a constant
        let all = BTreeMap::from([
            (Param::A2, rat(1)),
            (Param::C1, rat(1)),
            (Param::Rho, rat(-3)),
            (Param::A1, rat(2)),
            (Param::C2, rat(1)),
        ]);
        assert_eq!(inner.substitute(&all).as_constant().unwrap(), rat(-4));
    }

    #[test]
    fn exact_division() {
        let rho = v(Param::Rho);
        let b2 = v(Param::B2);
        let c1 = v(Param::C1);
        let divisor = b2.sub(&b2.mul(&rho)); // b2(1-rho)
        let f = divisor.mul(&c1).negate(); // -c1*b2(1-rho)
        let q = f.try_div_exact(&divisor).unwrap();
        assert_eq!(q, c1.negate());
        assert!(c1.try_div_exact(&divisor).is_none());
    }

    #[test]
    fn normalization_merges_scalar_multiples() {
        let p = v(Param::B1).add(&v(Param::Rho).mul(&v(Param::A2)));
        let q = p.scale(&ratio(-3, 7));
        assert_eq!(p.normalized(), q.normalized());
    }

    #[test]
    fn linear_solve_detection() {
        // b1 + rho*a2 solves as b1 -> -rho*a2
        let p = v(Param::B1).add(&v(Param::Rho).mul(&v(Param::A2)));
        let (x, val) = p.solve_linear().unwrap();
        assert_eq!(x, Param::B1);
        assert_eq!(val, v(Param::Rho).mul(&v(Param::A2)).negate());

        // b2(1-rho) has no rational-coefficient linear variable
        let b2 = v(Param::B2);
        let q = b2.sub(&b2.mul(&v(Param::Rho)));
        assert!(q.solve_linear().is_none());
    }

    #[test]
    fn display_reads_naturally() {
        let p = v(Param::B1).add(&v(Param::Rho).mul(&v(Param::A2)).scale(&rat(2)));
        assert_eq!(p.to_string(), "2*a2*rho + b1");
    }
}
