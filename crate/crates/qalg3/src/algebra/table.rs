//! The deformed commutator table and derived diagnostics.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::param::Param;
use crate::rational::Rat;

use super::element::{AlgElement, Gen, Monomial};
use super::reduce::Reducer;
use super::sym;

/// The three deformed brackets `[A,B]_z`, `[A,C]_z`, `[B,C]_z`.
///
/// Entries live on the ordered monomial basis. The rewriter requires every
/// entry monomial to have at most one letter from {B, C} and the z^0 layer to
/// be linear in the generators; both are checked at construction and hold for
/// every cataloged family.
pub struct CommutatorTable {
    ab: AlgElement,
    ac: AlgElement,
    bc: AlgElement,
    truncation: usize,
    params: BTreeMap<Param, Rat>,
    pub(super) memo: Mutex<BTreeMap<(Vec<Gen>, usize), AlgElement>>,
}

impl Clone for CommutatorTable {
    fn clone(&self) -> Self {
        CommutatorTable {
            ab: self.ab.clone(),
            ac: self.ac.clone(),
            bc: self.bc.clone(),
            truncation: self.truncation,
            params: self.params.clone(),
            memo: Mutex::new(BTreeMap::new()),
        }
    }
}

impl PartialEq for CommutatorTable {
    fn eq(&self, other: &Self) -> bool {
        self.ab == other.ab && self.ac == other.ac && self.bc == other.bc
    }
}

impl fmt::Debug for CommutatorTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CommutatorTable")
            .field("ab", &format!("{}", self.ab))
            .field("ac", &format!("{}", self.ac))
            .field("bc", &format!("{}", self.bc))
            .finish()
    }
}

impl CommutatorTable {
    /// Build and validate a table. All entries must share the truncation.
    pub fn new(ab: AlgElement, ac: AlgElement, bc: AlgElement) -> Result<Self> {
        let truncation = ab.truncation_order();
        if ac.truncation_order() != truncation || bc.truncation_order() != truncation {
            return Err(Error::TruncationMismatch {
                lhs: truncation,
                rhs: ac.truncation_order().min(bc.truncation_order()),
            });
        }
        for (name, entry) in [("[A,B]", &ab), ("[A,C]", &ac), ("[B,C]", &bc)] {
            for (m, s) in entry.terms() {
                if m.bc_degree() > 1 {
                    return Err(Error::NonTerminatingTable(format!(
                        "{name} contains {m}, which has more than one B/C letter"
                    )));
                }
                if m.degree() > 1 && !s.coeff(0).is_zero() {
                    return Err(Error::NonTerminatingTable(format!(
                        "{name} has a z^0 term on {m}; the classical layer must be linear"
                    )));
                }
            }
        }
        Ok(CommutatorTable {
            ab,
            ac,
            bc,
            truncation,
            params: BTreeMap::new(),
            memo: Mutex::new(BTreeMap::new()),
        })
    }

    /// Attach the concrete parameter bindings the table was built from.
    pub fn with_params(mut self, params: BTreeMap<Param, Rat>) -> Self {
        self.params = params;
        self
    }

    /// An all-zero (abelian) table.
    pub fn abelian(truncation: usize) -> Self {
        CommutatorTable {
            ab: AlgElement::zero(truncation),
            ac: AlgElement::zero(truncation),
            bc: AlgElement::zero(truncation),
            truncation,
            params: BTreeMap::new(),
            memo: Mutex::new(BTreeMap::new()),
        }
    }

    /// Classical table from nine structure constants (possibly symbolic):
    /// `[A,B] = c1 A + c2 B + c3 C` and cyclic companions.
    pub fn classical(k: &crate::quantize::StructureConstants, truncation: usize) -> Self {
        let lin = |coeffs: [&crate::poly::ParamPoly; 3]| {
            let mut e = AlgElement::zero(truncation);
            for (g, c) in Gen::ALL.into_iter().zip(coeffs) {
                e.add_series(
                    Monomial::gen(g),
                    crate::series::ZSeries::constant(c.clone(), truncation),
                );
            }
            e
        };
        CommutatorTable {
            ab: lin([&k.c1, &k.c2, &k.c3]),
            ac: lin([&k.b1, &k.b2, &k.b3]),
            bc: lin([&k.a1, &k.a2, &k.a3]),
            truncation,
            params: BTreeMap::new(),
            memo: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn truncation_order(&self) -> usize {
        self.truncation
    }

    pub fn params(&self) -> &BTreeMap<Param, Rat> {
        &self.params
    }

    pub fn ab(&self) -> &AlgElement {
        &self.ab
    }

    pub fn ac(&self) -> &AlgElement {
        &self.ac
    }

    pub fn bc(&self) -> &AlgElement {
        &self.bc
    }

    /// `[x, y]_z` for generators, straight from the table.
    pub fn entry(&self, x: Gen, y: Gen) -> AlgElement {
        match (x, y) {
            (Gen::A, Gen::B) => self.ab.clone(),
            (Gen::A, Gen::C) => self.ac.clone(),
            (Gen::B, Gen::C) => self.bc.clone(),
            (Gen::B, Gen::A) => self.ab.negate(),
            (Gen::C, Gen::A) => self.ac.negate(),
            (Gen::C, Gen::B) => self.bc.negate(),
            _ => AlgElement::zero(self.truncation),
        }
    }

    /// Return a table with `delta` added to the `(x, y)` entry.
    pub fn with_correction(&self, x: Gen, y: Gen, delta: &AlgElement) -> Result<Self> {
        let mut ab = self.ab.clone();
        let mut ac = self.ac.clone();
        let mut bc = self.bc.clone();
        match (x, y) {
            (Gen::A, Gen::B) => ab = ab.add(delta)?,
            (Gen::A, Gen::C) => ac = ac.add(delta)?,
            (Gen::B, Gen::C) => bc = bc.add(delta)?,
            _ => return Err(Error::Invalid("corrections index ordered pairs".into())),
        }
        Self::new(ab, ac, bc).map(|t| t.with_params(self.params.clone()))
    }

    /// Normal-order a word against this table.
    pub fn normal_order(&self, word: &[Gen]) -> AlgElement {
        Reducer::new(self).reduce(word, self.truncation)
    }

    /// Product in the quotient algebra: bilinear extension of concatenation
    /// followed by normal ordering.
    pub fn multiply(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        if x.truncation_order() != self.truncation || y.truncation_order() != self.truncation {
            return Err(Error::TruncationMismatch {
                lhs: x.truncation_order(),
                rhs: y.truncation_order(),
            });
        }
        let mut out = AlgElement::zero(self.truncation);
        let mut reducer = Reducer::new(self);
        for (mx, sx) in x.terms() {
            for (my, sy) in y.terms() {
                let coeff = sx.mul(sy)?;
                if coeff.is_zero() {
                    continue;
                }
                let mut word = mx.word();
                word.extend(my.word());
                let budget = self.truncation - coeff.lowest_order().unwrap_or(0).min(self.truncation);
                let reduced = reducer.reduce(&word, budget);
                out = out.add(&reduced.scale_series(&coeff))?;
            }
        }
        Ok(out)
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        self.multiply(x, y)?.sub(&self.multiply(y, x)?)
    }

    /// Power of an element.
    pub fn power(&self, x: &AlgElement, n: u32) -> Result<AlgElement> {
        let mut out = AlgElement::one(self.truncation);
        for _ in 0..n {
            out = self.multiply(&out, x)?;
        }
        Ok(out)
    }

    /// Per-generator Jacobi residuals in derivation form:
    /// `R_X = [X,[Y,Z]] - [[X,Y],Z] - [Y,[X,Z]]` with inner brackets taken
    /// from the table. All three vanish iff the table is consistent to the
    /// truncation order.
    pub fn jacobi_residuals(&self) -> Result<JacobiResiduals> {
        let a = AlgElement::generator(Gen::A, self.truncation);
        let b = AlgElement::generator(Gen::B, self.truncation);
        let c = AlgElement::generator(Gen::C, self.truncation);
        let res = |x: &AlgElement, yz: &AlgElement, xy: &AlgElement, z: &AlgElement, y: &AlgElement, xz: &AlgElement|
            -> Result<AlgElement> {
            self.commutator(x, yz)?
                .sub(&self.commutator(xy, z)?)?
                .sub(&self.commutator(y, xz)?)
        };
        let ra = res(&a, &self.bc, &self.ab, &c, &b, &self.ac)?;
        let rb = res(&b, &self.ac, &self.ab.negate(), &c, &a, &self.bc)?;
        let rc = res(&c, &self.ab, &self.ac.negate(), &b, &a, &self.bc.negate())?;
        Ok(JacobiResiduals { a: ra, b: rb, c: rc })
    }

    /// Every entry, read through the 1/z scaling of the deformation ansatz,
    /// must be an even series in z.
    pub fn entries_even_in_z(&self) -> bool {
        self.ab.is_even_in_z() && self.ac.is_even_in_z() && self.bc.is_even_in_z()
    }

    /// The Poisson bracket table obtained by reading each entry in the
    /// symmetrized basis and letting the generators commute.
    pub fn poisson_table(&self) -> Result<PoissonTable> {
        Ok(PoissonTable {
            ab: sym::ordered_to_sym(&self.ab, self)?,
            ac: sym::ordered_to_sym(&self.ac, self)?,
            bc: sym::ordered_to_sym(&self.bc, self)?,
        })
    }

    pub fn substitute(&self, bindings: &BTreeMap<Param, Rat>) -> Result<Self> {
        let mut params = self.params.clone();
        for (k, v) in bindings {
            params.insert(*k, v.clone());
        }
        Self::new(
            self.ab.substitute(bindings),
            self.ac.substitute(bindings),
            self.bc.substitute(bindings),
        )
        .map(|t| t.with_params(params))
    }
}

/// Per-generator Jacobi residuals (all zero for a consistent table).
#[derive(Debug, Clone)]
pub struct JacobiResiduals {
    pub a: AlgElement,
    pub b: AlgElement,
    pub c: AlgElement,
}

impl JacobiResiduals {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn first_nonzero_order(&self) -> Option<usize> {
        [&self.a, &self.b, &self.c]
            .into_iter()
            .filter_map(AlgElement::lowest_z_order)
            .min()
    }
}

/// Commutative bracket table of the associated Poisson structure.
///
/// Monomials are read as commuting variables `a^i b^j c^k`; the coefficients
/// are the symmetrized-basis coordinates of the deformed brackets.
#[derive(Debug, Clone, PartialEq)]
pub struct PoissonTable {
    pub ab: AlgElement,
    pub ac: AlgElement,
    pub bc: AlgElement,
}
