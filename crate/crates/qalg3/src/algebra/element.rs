//! Generators, words, ordered monomials and algebra elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::ParamPoly;
use crate::rational::Rat;
use crate::series::ZSeries;

/// A generator of the algebra, ordered `A < B < C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::A, Gen::B, Gen::C];

    pub fn index(self) -> usize {
        match self {
            Gen::A => 0,
            Gen::B => 1,
            Gen::C => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Gen::A => 'A',
            Gen::B => 'B',
            Gen::C => 'C',
        }
    }
}

/// A word in the free monoid on {A, B, C}; the empty word is the identity.
pub type Word = Vec<Gen>;

/// Parse a word like "BAC"; whitespace ignored.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut w = Vec::new();
    for ch in s.chars() {
        match ch {
            'A' | 'a' => w.push(Gen::A),
            'B' | 'b' => w.push(Gen::B),
            'C' | 'c' => w.push(Gen::C),
            c if c.is_whitespace() => {}
            c => return Err(Error::Invalid(format!("bad generator letter `{c}`"))),
        }
    }
    Ok(w)
}

/// Ordered monomial `A^i B^j C^k`; `(0,0,0)` is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { a, b, c }
    }

    pub fn gen(g: Gen) -> Self {
        match g {
            Gen::A => Monomial::new(1, 0, 0),
            Gen::B => Monomial::new(0, 1, 0),
            Gen::C => Monomial::new(0, 0, 1),
        }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b + self.c
    }

    /// Number of B and C letters; the rewriter's termination degree.
    pub fn bc_degree(&self) -> u32 {
        self.b + self.c
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    /// The ordered word A..AB..BC..C this monomial denotes.
    pub fn word(&self) -> Word {
        let mut w = Vec::with_capacity(self.degree() as usize);
        w.extend(std::iter::repeat_n(Gen::A, self.a as usize));
        w.extend(std::iter::repeat_n(Gen::B, self.b as usize));
        w.extend(std::iter::repeat_n(Gen::C, self.c as usize));
        w
    }

    pub fn exp(&self, g: Gen) -> u32 {
        match g {
            Gen::A => self.a,
            Gen::B => self.b,
            Gen::C => self.c,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| (self.a, self.b, self.c).cmp(&(other.a, other.b, other.c)))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (g, e) in [(Gen::A, self.a), (Gen::B, self.b), (Gen::C, self.c)] {
            match e {
                0 => {}
                1 => write!(f, "{}", g.letter())?,
                _ => write!(f, "{}^{}", g.letter(), e)?,
            }
        }
        Ok(())
    }
}

/// Finite linear combination of ordered monomials with `ZSeries` coefficients.
///
/// Invariants: no identically-zero series is stored and all series share the
/// element's truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    truncation: usize,
    terms: BTreeMap<Monomial, ZSeries>,
}

impl AlgElement {
    pub fn zero(truncation: usize) -> Self {
        AlgElement {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: usize) -> Self {
        Self::monomial(Monomial::ONE, truncation)
    }

    pub fn generator(g: Gen, truncation: usize) -> Self {
        Self::monomial(Monomial::gen(g), truncation)
    }

    pub fn monomial(m: Monomial, truncation: usize) -> Self {
        let mut e = Self::zero(truncation);
        e.terms.insert(m, ZSeries::one(truncation));
        e
    }

    pub fn from_terms(terms: BTreeMap<Monomial, ZSeries>, truncation: usize) -> Self {
        let mut e = Self::zero(truncation);
        for (m, s) in terms {
            e.add_series(m, s);
        }
        e
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ZSeries)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> ZSeries {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| ZSeries::zero(self.truncation))
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn add_series(&mut self, m: Monomial, s: ZSeries) {
        debug_assert_eq!(s.truncation_order(), self.truncation);
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(s);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&s).expect("matching truncation");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch {
                lhs: self.truncation,
                rhs: other.truncation,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, s) in &other.terms {
            out.add_series(*m, s.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, s) in &other.terms {
            out.add_series(*m, s.negate());
        }
        Ok(out)
    }

    pub fn negate(&self) -> Self {
        AlgElement {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .map(|(m, s)| (*m, s.negate()))
                .collect(),
        }
    }

    pub fn scale_series(&self, s: &ZSeries) -> Self {
        let mut out = Self::zero(self.truncation);
        if s.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_series(*m, c.mul(s).expect("matching truncation"));
        }
        out
    }

    pub fn scale_poly(&self, p: &ParamPoly) -> Self {
        let mut out = Self::zero(self.truncation);
        for (m, c) in &self.terms {
            out.add_series(*m, c.scale_poly(p));
        }
        out
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.truncation);
        for (m, c) in &self.terms {
            out.add_series(*m, c.scale(r));
        }
        out
    }

    /// Lowest z-order with a nonzero coefficient anywhere, if any.
    pub fn lowest_z_order(&self) -> Option<usize> {
        self.terms.values().filter_map(ZSeries::lowest_order).min()
    }

    /// The z^k layer as a map monomial -> polynomial.
    pub fn z_layer(&self, k: usize) -> BTreeMap<Monomial, ParamPoly> {
        let mut out = BTreeMap::new();
        for (m, s) in &self.terms {
            let c = s.coeff(k);
            if !c.is_zero() {
                out.insert(*m, c.clone());
            }
        }
        out
    }

    /// True when every coefficient series is even in z.
    pub fn is_even_in_z(&self) -> bool {
        self.terms.values().all(ZSeries::is_even)
    }

    pub fn substitute(&self, bindings: &BTreeMap<crate::param::Param, Rat>) -> Self {
        let mut out = Self::zero(self.truncation);
        for (m, s) in &self.terms {
            out.add_series(*m, s.substitute(bindings));
        }
        out
    }

    pub fn truncated(&self, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (m, s) in &self.terms {
            out.add_series(*m, s.truncated(order));
        }
        out
    }

    /// Multiply the whole element by z^k (degrees above the truncation drop).
    pub fn shift_z(&self, k: usize) -> Self {
        let mut out = Self::zero(self.truncation);
        for (m, s) in &self.terms {
            let mut coeffs = vec![ParamPoly::zero(); self.truncation + 1];
            for (i, c) in s.coeffs().iter().enumerate() {
                if i + k <= self.truncation {
                    coeffs[i + k] = c.clone();
                }
            }
            out.add_series(*m, ZSeries::from_coeffs(coeffs, self.truncation));
        }
        out
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, s) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({s})*{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn monomial_order_is_graded() {
        let ab = Monomial::new(1, 1, 0);
        let c = Monomial::new(0, 0, 1);
        assert!(c < ab);
        assert!(Monomial::ONE < c);
        assert_eq!(Monomial::new(2, 1, 3).word().len(), 6);
    }

    #[test]
    fn element_addition_cancels() {
        let n = 3;
        let x = AlgElement::generator(Gen::B, n);
        let y = x.negate();
        assert!(x.add(&y).unwrap().is_zero());
        assert_eq!(x.scale(&rat(2)).sub(&x).unwrap(), x);
    }

    #[test]
    fn parse_words() {
        assert_eq!(parse_word("BA").unwrap(), vec![Gen::B, Gen::A]);
        assert!(parse_word("BD").is_err());
    }
}
