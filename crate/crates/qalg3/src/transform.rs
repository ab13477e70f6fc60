//! Coproduct-preserving transformations of the quantum algebra basis.
//!
//! New generators are affine images of the old ones with shift terms built
//! from `sinh(z w A)` series, plus a rescale `ẑ = z/α` of the deformation
//! parameter. The transformed commutators are computed in the old algebra
//! and re-expressed on the new basis by an exact triangular elimination,
//! and the transformed coproduct is verified to be formally invariant.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::{generator_series, AlgElement, CommutatorTable, Gen, Monomial, SeriesKind};
use crate::error::{Error, Result};
use crate::hopf::{coproduct_extend, HopfData, TensorElement};
use crate::poly::ParamPoly;
use crate::rational::Rat;
use crate::series::ZSeries;

/// Coefficients of an invertible generator redefinition
///
/// ```text
/// A' = alpha A
/// B' = beta B + gamma_c C + delta  * sinh(z A)/z
/// C' = mu   B + nu      C + eta_c * sinh(z w_C A)/(z w_C)
/// ẑ  = z / alpha
/// ```
///
/// (`gamma_c`, `eta_c` are named to avoid colliding with the antipode and
/// the cocommutator). Mixing terms `gamma_c`, `mu` are only admissible when
/// the coproduct weights of B and C coincide; this is caught by the formal
/// invariance check.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformSpec {
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma_c: Rat,
    pub delta: Rat,
    pub mu: Rat,
    pub nu: Rat,
    pub eta_c: Rat,
}

impl TransformSpec {
    /// Identity transformation.
    pub fn identity() -> Self {
        TransformSpec {
            alpha: Rat::from_integer(1.into()),
            beta: Rat::from_integer(1.into()),
            gamma_c: Rat::zero(),
            delta: Rat::zero(),
            mu: Rat::zero(),
            nu: Rat::from_integer(1.into()),
            eta_c: Rat::zero(),
        }
    }

    /// Diagonal family: no B/C mixing.
    pub fn diagonal(alpha: Rat, beta: Rat, delta: Rat, nu: Rat, eta_c: Rat) -> Self {
        TransformSpec {
            alpha,
            beta,
            gamma_c: Rat::zero(),
            delta,
            mu: Rat::zero(),
            nu,
            eta_c,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha.is_zero() {
            return Err(Error::NonInvertibleTransform("alpha must be nonzero".into()));
        }
        let det = &self.beta * &self.nu - &self.gamma_c * &self.mu;
        if det.is_zero() {
            return Err(Error::NonInvertibleTransform(
                "the (B,C) block is singular".into(),
            ));
        }
        Ok(())
    }
}

/// Apply a transformation: returns the table and coproduct data on the new
/// basis, with the series variable re-read as `ẑ = z/alpha`.
pub fn apply_transformation(
    table: &CommutatorTable,
    hopf: &HopfData,
    spec: &TransformSpec,
) -> Result<(CommutatorTable, HopfData)> {
    spec.validate()?;
    let n = table.truncation_order();
    if hopf.truncation_order() != n {
        return Err(Error::TruncationMismatch {
            lhs: hopf.truncation_order(),
            rhs: n,
        });
    }
    let (wb, wc) = hopf
        .weights()
        .cloned()
        .ok_or_else(|| Error::Invalid("transformations need the canonical coproduct family".into()))?;
    let wb_c = wb.as_constant().ok_or(Error::SymbolicCoefficient)?;
    let wc_c = wc.as_constant().ok_or(Error::SymbolicCoefficient)?;
    ensure_concrete(table)?;

    // images of the new generators inside the old algebra
    let shift_b = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let shift_c = generator_series(
        Gen::A,
        SeriesKind::SinhOverScaledZ,
        &ParamPoly::constant(wc_c.clone()),
        n,
    );
    let im_a = AlgElement::generator(Gen::A, n).scale(&spec.alpha);
    let im_b = AlgElement::generator(Gen::B, n)
        .scale(&spec.beta)
        .add(&AlgElement::generator(Gen::C, n).scale(&spec.gamma_c))?
        .add(&shift_b.scale(&spec.delta))?;
    let im_c = AlgElement::generator(Gen::B, n)
        .scale(&spec.mu)
        .add(&AlgElement::generator(Gen::C, n).scale(&spec.nu))?
        .add(&shift_c.scale(&spec.eta_c))?;
    let images = [im_a, im_b, im_c];

    // formal invariance of the coproduct on the images
    check_formal_invariance(&images, hopf, table, &wb_c, &wc_c)?;

    // commutators of the images, still on the old basis
    let k_ab = table.commutator(&images[0], &images[1])?;
    let k_ac = table.commutator(&images[0], &images[2])?;
    let k_bc = table.commutator(&images[1], &images[2])?;

    let mut ctx = BasisContext::new(table, &images, spec)?;
    let new_ab = ctx.express(&k_ab)?;
    let new_ac = ctx.express(&k_ac)?;
    let new_bc = ctx.express(&k_bc)?;

    let new_table =
        CommutatorTable::new(new_ab, new_ac, new_bc)?.with_params(table.params().clone());
    let new_hopf = HopfData::canonical_weights(&wb, &wc, n);
    Ok((new_table, new_hopf))
}

fn ensure_concrete(table: &CommutatorTable) -> Result<()> {
    for entry in [table.ab(), table.ac(), table.bc()] {
        for (_, s) in entry.terms() {
            for c in s.coeffs() {
                if c.as_constant().is_none() {
                    return Err(Error::SymbolicCoefficient);
                }
            }
        }
    }
    Ok(())
}

/// Expected transformed coproducts: the canonical family in the images.
/// Since `ẑ A' = z A` exactly, weight `w` in `ẑ` means rate `w` on `z`.
fn check_formal_invariance(
    images: &[AlgElement; 3],
    hopf: &HopfData,
    table: &CommutatorTable,
    wb: &Rat,
    wc: &Rat,
) -> Result<()> {
    let n = table.truncation_order();
    for (g, img, w) in [
        (Gen::A, &images[0], None),
        (Gen::B, &images[1], Some(wb)),
        (Gen::C, &images[2], Some(wc)),
    ] {
        let actual = coproduct_extend(img, hopf, table)?;
        let expected = match w {
            None => {
                // primitive: img ⊗ 1 + 1 ⊗ img
                let one = AlgElement::one(n);
                TensorElement::tensor(img, &one)?.add(&TensorElement::tensor(&one, img)?)?
            }
            Some(w) => {
                // e^{ẑ w A'} ⊗ img + img ⊗ e^{-ẑ w A'}, realized in the old
                // algebra: A' = alpha A, ẑ = z/alpha, so the rate on z is w.
                let mut out = TensorElement::zero(n);
                let mut a_pow = AlgElement::one(n);
                for k in 0..=n {
                    if k > 0 {
                        a_pow = table
                            .multiply(&a_pow, &AlgElement::generator(Gen::A, n))?;
                    }
                    let mut rate = crate::rational::inv_factorial(k);
                    for _ in 0..k {
                        rate *= w;
                    }
                    let coeff = ZSeries::monomial(ParamPoly::constant(rate.clone()), k, n);
                    let left = TensorElement::tensor(&a_pow.scale_series(&coeff), img)?;
                    out = out.add(&left)?;
                    let signed = if k % 2 == 1 { -rate } else { rate };
                    let coeff = ZSeries::monomial(ParamPoly::constant(signed), k, n);
                    let right = TensorElement::tensor(img, &a_pow.scale_series(&coeff))?;
                    out = out.add(&right)?;
                }
                out
            }
        };
        if actual.sub(&expected)?.is_zero() {
            continue;
        }
        return Err(Error::CoproductNotInvariant(g.letter()));
    }
    Ok(())
}

/// Exact re-expression of old-basis elements on the new generator basis.
struct BasisContext<'a> {
    table: &'a CommutatorTable,
    images: &'a [AlgElement; 3],
    /// `inv[l][k]`: coefficient of the k-th new generator in the expression
    /// of old generator l at the symbol (z^0, degree-1) level.
    inv: [[Rat; 3]; 3],
    alpha: Rat,
    realizations: HashMap<Monomial, AlgElement>,
    preimages: HashMap<Monomial, Vec<(Monomial, Rat)>>,
}

impl<'a> BasisContext<'a> {
    fn new(
        table: &'a CommutatorTable,
        images: &'a [AlgElement; 3],
        spec: &TransformSpec,
    ) -> Result<Self> {
        // symbol rows: z^0 degree-1 part of each image in old coordinates
        let mut rows: [[Rat; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
        for (i, img) in images.iter().enumerate() {
            for (m, s) in img.terms() {
                if m.degree() == 1 {
                    let c = s.coeff(0).as_constant().ok_or(Error::SymbolicCoefficient)?;
                    for g in Gen::ALL {
                        if m.exp(g) == 1 {
                            rows[i][g.index()] = c.clone();
                        }
                    }
                }
            }
        }
        let inv = invert3(&rows).ok_or_else(|| {
            Error::NonInvertibleTransform("symbol matrix is singular".into())
        })?;
        Ok(BasisContext {
            table,
            images,
            inv,
            alpha: spec.alpha.clone(),
            realizations: HashMap::new(),
            preimages: HashMap::new(),
        })
    }

    /// Old-algebra realization of a new-basis monomial.
    fn realize(&mut self, m: Monomial) -> Result<AlgElement> {
        if let Some(hit) = self.realizations.get(&m) {
            return Ok(hit.clone());
        }
        let n = self.table.truncation_order();
        let mut acc = AlgElement::one(n);
        for (gi, e) in [(0usize, m.a), (1, m.b), (2, m.c)] {
            for _ in 0..e {
                acc = self.table.multiply(&acc, &self.images[gi])?;
            }
        }
        self.realizations.insert(m, acc.clone());
        Ok(acc)
    }

    /// Commutative preimage polynomial: new-basis monomials whose symbol
    /// product equals the old monomial `m`.
    fn preimage(&mut self, m: Monomial) -> Vec<(Monomial, Rat)> {
        if let Some(hit) = self.preimages.get(&m) {
            return hit.clone();
        }
        // each old generator l expands as sum_k inv[l][k] * new_k
        let mut acc: BTreeMap<Monomial, Rat> = BTreeMap::new();
        acc.insert(Monomial::ONE, Rat::from_integer(1.into()));
        for (l, e) in [(0usize, m.a), (1, m.b), (2, m.c)] {
            for _ in 0..e {
                let mut next: BTreeMap<Monomial, Rat> = BTreeMap::new();
                for (mono, coeff) in &acc {
                    for k in 0..3 {
                        if self.inv[l][k].is_zero() {
                            continue;
                        }
                        let mut m2 = *mono;
                        match k {
                            0 => m2.a += 1,
                            1 => m2.b += 1,
                            _ => m2.c += 1,
                        }
                        let c = coeff * &self.inv[l][k];
                        *next.entry(m2).or_insert_with(Rat::zero) += c;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                acc = next;
            }
        }
        let out: Vec<(Monomial, Rat)> = acc.into_iter().collect();
        self.preimages.insert(m, out.clone());
        out
    }

    /// Solve `Phi(result) = x` for `result` on the new basis, coefficients
    /// as series in `ẑ = z/alpha`.
    fn express(&mut self, x: &AlgElement) -> Result<AlgElement> {
        let n = x.truncation_order();
        let mut remaining = x.clone();
        let mut result = AlgElement::zero(n);
        let mut alpha_pow = vec![Rat::from_integer(1.into())];
        for _ in 1..=n {
            alpha_pow.push(alpha_pow.last().unwrap() * &self.alpha);
        }
        for layer in 0..=n {
            let mut guard = 0usize;
            while let Some((m, poly)) = remaining.z_layer(layer).into_iter().next_back() {
                guard += 1;
                if guard > 100_000 {
                    return Err(Error::BasisChangeFailure);
                }
                let c = poly.as_constant().ok_or(Error::SymbolicCoefficient)?;
                let pre = self.preimage(m);
                for (nm, q) in &pre {
                    // coefficient on ẑ^layer: scale by alpha^layer
                    let coeff = &c * q * &alpha_pow[layer];
                    result.add_series(
                        *nm,
                        ZSeries::monomial(ParamPoly::constant(coeff), layer, n),
                    );
                    let real = self.realize(*nm)?;
                    let scaled = real.shift_z(layer).scale(&(&c * q));
                    remaining = remaining.sub(&scaled)?;
                }
            }
        }
        if !remaining.is_zero() {
            return Err(Error::BasisChangeFailure);
        }
        Ok(result)
    }
}

fn invert3(m: &[[Rat; 3]; 3]) -> Option<[[Rat; 3]; 3]> {
    let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
    if det.is_zero() {
        return None;
    }
    let cof = |r: usize, c: usize| -> Rat {
        let rs: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cs: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        let minor = &m[rs[0]][cs[0]] * &m[rs[1]][cs[1]] - &m[rs[0]][cs[1]] * &m[rs[1]][cs[0]];
        if (r + c).is_multiple_of(2) {
            minor
        } else {
            -minor
        }
    };
    let mut inv = [
        [Rat::zero(), Rat::zero(), Rat::zero()],
        [Rat::zero(), Rat::zero(), Rat::zero()],
        [Rat::zero(), Rat::zero(), Rat::zero()],
    ];
    for i in 0..3 {
        for j in 0..3 {
            inv[i][j] = cof(j, i) / det.clone();
        }
    }
    Some(inv)
}
