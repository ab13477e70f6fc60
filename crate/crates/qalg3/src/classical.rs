//! Classical-layer analysis: Jacobson typing of 3D Lie algebras, Lie
//! bialgebra cocycle checks, Schouten brackets, and coboundary solving.
//!
//! Wedge convention throughout: `X∧Y = X⊗Y - Y⊗X`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::algebra::{CommutatorTable, Gen};
use crate::error::{Error, Result};
use crate::linalg::{solve_exact, SolveOutcome};
use crate::param::Param;
use crate::rational::{fmt_rat, Rat};

/// A 3D Lie algebra by its structure constants: `bracket[i][j]` is the
/// coefficient vector of `[g_i, g_j]` on the basis (A, B, C), stored for
/// the ordered pairs (A,B), (A,C), (B,C).
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra3 {
    pub ab: [Rat; 3],
    pub ac: [Rat; 3],
    pub bc: [Rat; 3],
}

fn zero3() -> [Rat; 3] {
    std::array::from_fn(|_| Rat::zero())
}

impl LieAlgebra3 {
    pub fn new(ab: [Rat; 3], ac: [Rat; 3], bc: [Rat; 3]) -> Result<Self> {
        let g = LieAlgebra3 { ab, ac, bc };
        let residual = g.jacobi_residual();
        if residual.iter().any(|c| !c.is_zero()) {
            return Err(Error::Invalid(format!(
                "Jacobi identity fails: residual ({}, {}, {})",
                fmt_rat(&residual[0]),
                fmt_rat(&residual[1]),
                fmt_rat(&residual[2])
            )));
        }
        Ok(g)
    }

    pub fn abelian() -> Self {
        LieAlgebra3 {
            ab: zero3(),
            ac: zero3(),
            bc: zero3(),
        }
    }

    /// The z^0 layer of a commutator table, with `bindings` applied to any
    /// symbolic coefficients.
    pub fn classical_limit(
        table: &CommutatorTable,
        bindings: &BTreeMap<Param, Rat>,
    ) -> Result<Self> {
        let mut merged = table.params().clone();
        for (k, v) in bindings {
            merged.insert(*k, v.clone());
        }
        let extract = |e: &crate::algebra::AlgElement| -> Result<[Rat; 3]> {
            let mut out = zero3();
            for (m, poly) in e.z_layer(0) {
                let c = poly
                    .substitute(&merged)
                    .as_constant()
                    .ok_or(Error::SymbolicCoefficient)?;
                if c.is_zero() {
                    continue;
                }
                if m.degree() != 1 {
                    return Err(Error::Invalid(format!(
                        "classical layer is not linear: term on {m}"
                    )));
                }
                for g in Gen::ALL {
                    if m.exp(g) == 1 {
                        out[g.index()] = c.clone();
                    }
                }
            }
            Ok(out)
        };
        LieAlgebra3::new(extract(table.ab())?, extract(table.ac())?, extract(table.bc())?)
    }

    /// `[g_i, g_j]` as a coefficient vector, any index order.
    pub fn bracket(&self, i: usize, j: usize) -> [Rat; 3] {
        match (i, j) {
            (0, 1) => self.ab.clone(),
            (0, 2) => self.ac.clone(),
            (1, 2) => self.bc.clone(),
            (1, 0) => neg3(&self.ab),
            (2, 0) => neg3(&self.ac),
            (2, 1) => neg3(&self.bc),
            _ => zero3(),
        }
    }

    /// `[v, w]` for arbitrary coefficient vectors.
    pub fn bracket_vectors(&self, v: &[Rat; 3], w: &[Rat; 3]) -> [Rat; 3] {
        let mut out = zero3();
        for i in 0..3 {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..3 {
                if w[j].is_zero() {
                    continue;
                }
                let b = self.bracket(i, j);
                for k in 0..3 {
                    out[k] += &v[i] * &w[j] * &b[k];
                }
            }
        }
        out
    }

    /// Jacobiator `[A,[B,C]] + [B,[C,A]] + [C,[A,B]]` (zero iff Jacobi).
    pub fn jacobi_residual(&self) -> [Rat; 3] {
        let ea = [Rat::from_integer(1.into()), Rat::zero(), Rat::zero()];
        let eb = [Rat::zero(), Rat::from_integer(1.into()), Rat::zero()];
        let ec = [Rat::zero(), Rat::zero(), Rat::from_integer(1.into())];
        let mut out = zero3();
        let parts = [
            self.bracket_vectors(&ea, &self.bc),
            self.bracket_vectors(&eb, &neg3(&self.ac)),
            self.bracket_vectors(&ec, &self.ab),
        ];
        for p in parts {
            for k in 0..3 {
                out[k] += &p[k];
            }
        }
        out
    }

    /// Conjugate by an invertible change of basis: new generators are
    /// `rows` applied to (A, B, C).
    pub fn change_basis(&self, rows: &[[Rat; 3]; 3]) -> Result<Self> {
        let inv = invert3(rows).ok_or_else(|| {
            Error::NonInvertibleTransform("basis matrix is singular".into())
        })?;
        // [n_i, n_j] = rows_i x rows_j bracket, re-expressed via inv
        let re = |v: &[Rat; 3]| -> [Rat; 3] {
            // coordinates of v in the new basis: inv^T? new_k = sum rows[k][l] e_l
            // v = sum_l v_l e_l = sum_k w_k new_k with w = v * inv (row vector)
            let mut w = zero3();
            for k in 0..3 {
                for l in 0..3 {
                    w[k] += &v[l] * &inv[l][k];
                }
            }
            w
        };
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let mut out = [zero3(), zero3(), zero3()];
        for (slot, (i, j)) in pairs.into_iter().enumerate() {
            let br = self.bracket_vectors(&rows[i], &rows[j]);
            out[slot] = re(&br);
        }
        LieAlgebra3::new(out[0].clone(), out[1].clone(), out[2].clone())
    }

    /// Matrix of `ad_v` on the basis (columns are images of A, B, C).
    fn ad_matrix(&self, v: &[Rat; 3]) -> [[Rat; 3]; 3] {
        let mut m = [zero3(), zero3(), zero3()];
        for j in 0..3 {
            let mut e = zero3();
            e[j] = Rat::from_integer(1.into());
            let img = self.bracket_vectors(v, &e);
            for i in 0..3 {
                m[i][j] = img[i].clone();
            }
        }
        m
    }

    pub fn trace_ad(&self, v: &[Rat; 3]) -> Rat {
        let m = self.ad_matrix(v);
        &m[0][0] + &m[1][1] + &m[2][2]
    }
}

fn neg3(v: &[Rat; 3]) -> [Rat; 3] {
    std::array::from_fn(|i| -v[i].clone())
}

fn invert3(m: &[[Rat; 3]; 3]) -> Option<[[Rat; 3]; 3]> {
    let det = det3(m);
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
    let mut inv = [zero3(), zero3(), zero3()];
    for i in 0..3 {
        for j in 0..3 {
            inv[i][j] = cof(j, i) / det.clone();
        }
    }
    Some(inv)
}

fn det3(m: &[[Rat; 3]; 3]) -> Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// The eigenvalue-ratio invariant of a Type III algebra, reported up to the
/// relabeling ambiguity `alpha <-> 1/alpha` via `kappa = (tr M)^2 / det M
/// = alpha + 1/alpha + 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaInvariant {
    pub kappa: Rat,
}

impl AlphaInvariant {
    pub fn from_ratio(alpha: &Rat) -> Self {
        AlphaInvariant {
            kappa: alpha + alpha.recip() + Rat::from_integer(2.into()),
        }
    }

    /// The rational representative pair `{alpha, 1/alpha}`, when it exists.
    pub fn ratio_pair(&self) -> Option<(Rat, Rat)> {
        // alpha^2 - (kappa - 2) alpha + 1 = 0
        let two = Rat::from_integer(2.into());
        let b = &self.kappa - two;
        let four = Rat::from_integer(4.into());
        let disc = &b * &b - four;
        let sq = rational_sqrt(&disc)?;
        let half = Rat::new(BigInt::from(1), BigInt::from(2));
        let a1 = (&b + &sq) * &half;
        let a2 = (&b - &sq) * &half;
        Some((a1, a2))
    }

    /// Canonical representative: the pair member with |numerator| >=
    /// |denominator|; falls back to the raw invariant when irrational.
    pub fn canonical_ratio(&self) -> Option<Rat> {
        let (a1, a2) = self.ratio_pair()?;
        let big = |r: &Rat| r.numer().abs() >= r.denom().abs();
        Some(if big(&a1) { a1 } else { a2 })
    }
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer().sqrt();
    let den = r.denom().sqrt();
    if &(&num * &num) == r.numer() && &(&den * &den) == r.denom() {
        Some(Rat::new(num, den))
    } else {
        None
    }
}

/// Jacobson classes of 3D complex Lie algebras, by the dimension of the
/// derived algebra.
#[derive(Debug, Clone, PartialEq)]
pub enum JacobsonType {
    /// Abelian.
    I,
    /// dim L' = 1 with central derived algebra: Heisenberg-Weyl.
    IIHeisenberg,
    /// dim L' = 1, derived algebra not central: Borel plus center.
    IIBorelCentral,
    /// dim L' = 2, diagonalizable adjoint action with eigenvalue ratio
    /// alpha (the alpha = 1 member is the dilation algebra).
    IIIAlpha(AlphaInvariant),
    /// dim L' = 2, non-diagonalizable adjoint action.
    IIINilshift,
    /// dim L' = 3: the simple algebra.
    IV,
}

impl fmt::Display for JacobsonType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JacobsonType::I => write!(f, "I"),
            JacobsonType::IIHeisenberg => write!(f, "II (Heisenberg-Weyl)"),
            JacobsonType::IIBorelCentral => write!(f, "II (Borel + center)"),
            JacobsonType::IIIAlpha(a) => match a.canonical_ratio() {
                Some(r) => write!(f, "III (alpha = {})", fmt_rat(&r)),
                None => write!(f, "III (alpha + 1/alpha + 2 = {})", fmt_rat(&a.kappa)),
            },
            JacobsonType::IIINilshift => write!(f, "III (nilpotent shift)"),
            JacobsonType::IV => write!(f, "IV (simple)"),
        }
    }
}

/// Classify a 3D Lie algebra by derived-algebra dimension and, within
/// Type III, by the adjoint action on the derived algebra.
pub fn jacobson_type(g: &LieAlgebra3) -> JacobsonType {
    // derived algebra = row space of the three bracket vectors
    let rows = vec![g.ab.clone(), g.ac.clone(), g.bc.clone()];
    let basis = row_space_basis(rows);
    match basis.len() {
        0 => JacobsonType::I,
        1 => {
            let v = &basis[0];
            let central = (0..3).all(|i| {
                let mut e = zero3();
                e[i] = Rat::from_integer(1.into());
                g.bracket_vectors(&e, v).iter().all(Rat::is_zero)
            });
            if central {
                JacobsonType::IIHeisenberg
            } else {
                JacobsonType::IIBorelCentral
            }
        }
        2 => {
            // pick a complement generator x3 and restrict ad_{x3} to L'
            let mut x3 = zero3();
            for i in 0..3 {
                let mut e = zero3();
                e[i] = Rat::from_integer(1.into());
                let mut cand = basis.clone();
                cand.push(e.clone());
                if row_space_basis(cand).len() == 3 {
                    x3 = e;
                    break;
                }
            }
            // M: 2x2 matrix of ad_{x3} on the basis of L'
            let img0 = g.bracket_vectors(&x3, &basis[0]);
            let img1 = g.bracket_vectors(&x3, &basis[1]);
            let c0 = coords_in(&img0, &basis).expect("L' is an ideal");
            let c1 = coords_in(&img1, &basis).expect("L' is an ideal");
            let m = [[c0[0].clone(), c1[0].clone()], [c0[1].clone(), c1[1].clone()]];
            let tr = &m[0][0] + &m[1][1];
            let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
            debug_assert!(!det.is_zero(), "ad_x3 is invertible on a 2D derived algebra");
            let disc = &tr * &tr - Rat::from_integer(4.into()) * &det;
            if disc.is_zero() {
                // repeated eigenvalue: scalar matrix means alpha = 1,
                // otherwise the non-diagonalizable family
                let half_tr = &tr / Rat::from_integer(2.into());
                let scalar = m[0][1].is_zero()
                    && m[1][0].is_zero()
                    && m[0][0] == half_tr
                    && m[1][1] == half_tr;
                if scalar {
                    JacobsonType::IIIAlpha(AlphaInvariant::from_ratio(&Rat::from_integer(
                        1.into(),
                    )))
                } else {
                    JacobsonType::IIINilshift
                }
            } else {
                JacobsonType::IIIAlpha(AlphaInvariant {
                    kappa: &tr * &tr / det,
                })
            }
        }
        _ => JacobsonType::IV,
    }
}

fn row_space_basis(rows: Vec<[Rat; 3]>) -> Vec<[Rat; 3]> {
    let mut mat: Vec<[Rat; 3]> = rows
        .into_iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    let mut basis: Vec<[Rat; 3]> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in mat.iter_mut() {
        let mut r = row.clone();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !r[p].is_zero() {
                let f = r[p].clone();
                for k in 0..3 {
                    let sub = &b[k] * &f;
                    r[k] -= sub;
                }
            }
        }
        if let Some(p) = (0..3).find(|&k| !r[k].is_zero()) {
            let inv = r[p].clone().recip();
            for k in 0..3 {
                r[k] *= &inv;
            }
            basis.push(r);
            pivots.push(p);
        }
    }
    basis
}

fn coords_in(v: &[Rat; 3], basis: &[[Rat; 3]]) -> Option<Vec<Rat>> {
    let rows: Vec<Vec<Rat>> = (0..3)
        .map(|k| basis.iter().map(|b| b[k].clone()).collect())
        .collect();
    let rhs: Vec<Rat> = v.to_vec();
    match solve_exact(rows, rhs, basis.len()) {
        SolveOutcome::Solved(s) => Some(s.particular),
        SolveOutcome::Inconsistent { .. } => None,
    }
}

/// Bivector over the wedge basis (A∧B, A∧C, B∧C).
#[derive(Debug, Clone, PartialEq)]
pub struct Bivector {
    pub ab: Rat,
    pub ac: Rat,
    pub bc: Rat,
}

impl Bivector {
    pub fn zero() -> Self {
        Bivector {
            ab: Rat::zero(),
            ac: Rat::zero(),
            bc: Rat::zero(),
        }
    }

    pub fn new(ab: Rat, ac: Rat, bc: Rat) -> Self {
        Bivector { ab, ac, bc }
    }

    pub fn is_zero(&self) -> bool {
        self.ab.is_zero() && self.ac.is_zero() && self.bc.is_zero()
    }

    pub fn coords(&self) -> [Rat; 3] {
        [self.ab.clone(), self.ac.clone(), self.bc.clone()]
    }

    pub fn from_coords(c: [Rat; 3]) -> Self {
        Bivector {
            ab: c[0].clone(),
            ac: c[1].clone(),
            bc: c[2].clone(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Bivector {
            ab: &self.ab * r,
            ac: &self.ac * r,
            bc: &self.bc * r,
        }
    }

    /// The antisymmetric coefficient matrix `rho^{ij}` with
    /// `r = sum_{i<j} r^{ij} e_i ⊗ e_j - e_j ⊗ e_i`.
    fn matrix(&self) -> [[Rat; 3]; 3] {
        let mut m = [zero3(), zero3(), zero3()];
        let coords = [
            (0usize, 1usize, self.ab.clone()),
            (0, 2, self.ac.clone()),
            (1, 2, self.bc.clone()),
        ];
        for (i, j, c) in coords {
            m[i][j] = c.clone();
            m[j][i] = -c;
        }
        m
    }
}

impl fmt::Display for Bivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, name) in [(&self.ab, "A^B"), (&self.ac, "A^C"), (&self.bc, "B^C")] {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*{}", fmt_rat(c), name)?;
        }
        Ok(())
    }
}

/// Trivector over `A∧B∧C`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trivector {
    pub abc: Rat,
}

/// `ad_X` action on a bivector: `[X,u]∧v + u∧[X,v]`.
pub fn ad_bivector(g: &LieAlgebra3, x: &[Rat; 3], r: &Bivector) -> Bivector {
    // act on the coefficient matrix rho^{ij}
    let m = r.matrix();
    let ad = g.ad_matrix(x);
    // (ad r)^{ij} = sum_k ad[i][k] rho^{kj} + ad[j][k] rho^{ik}
    let mut out = [zero3(), zero3(), zero3()];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = Rat::zero();
            for k in 0..3 {
                acc += &ad[i][k] * &m[k][j];
                acc += &ad[j][k] * &m[i][k];
            }
            out[i][j] = acc;
        }
    }
    Bivector {
        ab: out[0][1].clone(),
        ac: out[0][2].clone(),
        bc: out[1][2].clone(),
    }
}

/// Cocommutator data at the classical layer: `images[g]` are the wedge
/// coordinates of `η(g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CocommutatorData {
    pub images: [[Rat; 3]; 3],
}

impl CocommutatorData {
    pub fn zero() -> Self {
        CocommutatorData {
            images: std::array::from_fn(|_| zero3()),
        }
    }

    /// The canonical family `η(A)=0, η(B)=A∧B, η(C)=ρ A∧C` (the overall z
    /// scale plays no role at this layer).
    pub fn canonical(rho: &Rat) -> Self {
        let mut images = std::array::from_fn(|_| zero3());
        images[1][0] = Rat::from_integer(1.into());
        images[2][1] = rho.clone();
        CocommutatorData { images }
    }

    pub fn image(&self, g: Gen) -> Bivector {
        let row = &self.images[g.index()];
        Bivector::from_coords(row.clone())
    }

    /// Linear extension to an arbitrary vector.
    pub fn apply(&self, v: &[Rat; 3]) -> Bivector {
        let mut out = zero3();
        for i in 0..3 {
            if v[i].is_zero() {
                continue;
            }
            for k in 0..3 {
                out[k] += &v[i] * &self.images[i][k];
            }
        }
        Bivector::from_coords(out)
    }
}

/// Residuals of the Lie-bialgebra conditions for `(g, eta)`.
#[derive(Debug, Clone)]
pub struct CocycleReport {
    /// 1-cocycle residuals `η([X,Y]) - ad_X η(Y) + ad_Y η(X)` for the
    /// ordered generator pairs.
    pub cocycle: [Bivector; 3],
    /// Jacobi residual of the dual bracket (co-Jacobi condition).
    pub cojacobi: [Rat; 3],
}

impl CocycleReport {
    pub fn is_zero(&self) -> bool {
        self.cocycle.iter().all(Bivector::is_zero) && self.cojacobi.iter().all(Rat::is_zero)
    }
}

/// Check the 1-cocycle and co-Jacobi conditions.
pub fn cocycle_check(g: &LieAlgebra3, eta: &CocommutatorData) -> CocycleReport {
    let units: [[Rat; 3]; 3] = std::array::from_fn(|i| {
        let mut e = zero3();
        e[i] = Rat::from_integer(1.into());
        e
    });
    let pairs = [(0usize, 1usize), (0, 2), (1, 2)];
    let mut cocycle = Vec::with_capacity(3);
    for (i, j) in pairs {
        let lhs = eta.apply(&g.bracket(i, j));
        let t1 = ad_bivector(g, &units[i], &eta.image(Gen::ALL[j]));
        let t2 = ad_bivector(g, &units[j], &eta.image(Gen::ALL[i]));
        let res = Bivector::from_coords(std::array::from_fn(|k| {
            &lhs.coords()[k] - &t1.coords()[k] + &t2.coords()[k]
        }));
        cocycle.push(res);
    }

    // dual bracket: [xi_j, xi_k]* = sum_i eta_i^{jk} xi_i
    let dual = LieAlgebra3 {
        ab: std::array::from_fn(|i| eta.images[i][0].clone()),
        ac: std::array::from_fn(|i| eta.images[i][1].clone()),
        bc: std::array::from_fn(|i| eta.images[i][2].clone()),
    };
    CocycleReport {
        cocycle: cocycle.try_into().unwrap(),
        cojacobi: dual.jacobi_residual(),
    }
}

/// Verdict of the Schouten-square analysis of a candidate r-matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchoutenClass {
    /// `[[r,r]] = 0`: the classical Yang-Baxter equation holds
    /// (non-standard / triangular).
    CybeZero,
    /// `[[r,r]] != 0` but ad-invariant: the modified classical Yang-Baxter
    /// equation holds (standard / quasitriangular).
    McybeInvariant,
    Neither,
}

impl fmt::Display for SchoutenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchoutenClass::CybeZero => write!(f, "cybe_zero"),
            SchoutenClass::McybeInvariant => write!(f, "mcybe_invariant"),
            SchoutenClass::Neither => write!(f, "neither"),
        }
    }
}

/// Compute `[[r, r]]` and classify: zero, ad-invariant, or neither.
pub fn schouten_classify(r: &Bivector, g: &LieAlgebra3) -> (SchoutenClass, Trivector) {
    let m = r.matrix();
    // [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23] in tensor coordinates
    let mut t = vec![vec![vec![Rat::zero(); 3]; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if m[i][j].is_zero() {
                continue;
            }
            for k in 0..3 {
                for l in 0..3 {
                    if m[k][l].is_zero() {
                        continue;
                    }
                    let c = &m[i][j] * &m[k][l];
                    // [e_i, e_k] ⊗ e_j ⊗ e_l
                    let br = g.bracket(i, k);
                    for s in 0..3 {
                        if !br[s].is_zero() {
                            t[s][j][l] += &c * &br[s];
                        }
                    }
                    // e_i ⊗ [e_j, e_k] ⊗ e_l
                    let br = g.bracket(j, k);
                    for s in 0..3 {
                        if !br[s].is_zero() {
                            t[i][s][l] += &c * &br[s];
                        }
                    }
                    // e_i ⊗ e_k ⊗ [e_j, e_l]
                    let br = g.bracket(j, l);
                    for s in 0..3 {
                        if !br[s].is_zero() {
                            t[i][k][s] += &c * &br[s];
                        }
                    }
                }
            }
        }
    }
    // the result of a skew r is totally antisymmetric; its A∧B∧C coefficient
    // is the (0,1,2) entry
    debug_assert!({
        let mut ok = true;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    if i == j || j == k || i == k {
                        ok &= t[i][j][k].is_zero();
                    }
                }
            }
        }
        ok &= t[0][1][2] == -t[1][0][2].clone();
        ok
    });
    let tri = Trivector {
        abc: t[0][1][2].clone(),
    };
    let class = if tri.abc.is_zero() {
        SchoutenClass::CybeZero
    } else {
        // Λ^3 is one-dimensional: ad_X acts by tr(ad_X), so ad-invariance
        // of a nonzero trivector says the algebra is unimodular.
        let units: [[Rat; 3]; 3] = std::array::from_fn(|i| {
            let mut e = zero3();
            e[i] = Rat::from_integer(1.into());
            e
        });
        if units.iter().all(|u| g.trace_ad(u).is_zero()) {
            SchoutenClass::McybeInvariant
        } else {
            SchoutenClass::Neither
        }
    };
    (class, tri)
}

/// Outcome of solving `η(X) = ad_X(r)` over the bivector space.
#[derive(Debug, Clone)]
pub enum CoboundaryOutcome {
    Solution {
        r: Bivector,
        /// Dimension of the affine solution space.
        freedom: usize,
    },
    /// No bivector reproduces the cocommutator. The certificate is a row
    /// combination of the linear system proving inconsistency.
    Infeasible { certificate: Vec<Rat> },
}

impl CoboundaryOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, CoboundaryOutcome::Solution { .. })
    }
}

/// Solve the coboundary equation `η(X) = ad_X(r)` for all generators.
pub fn coboundary_solve(g: &LieAlgebra3, eta: &CocommutatorData) -> CoboundaryOutcome {
    // unknowns: r over (A∧B, A∧C, B∧C); 9 equations
    let basis = [
        Bivector::new(Rat::from_integer(1.into()), Rat::zero(), Rat::zero()),
        Bivector::new(Rat::zero(), Rat::from_integer(1.into()), Rat::zero()),
        Bivector::new(Rat::zero(), Rat::zero(), Rat::from_integer(1.into())),
    ];
    let mut rows = Vec::with_capacity(9);
    let mut rhs = Vec::with_capacity(9);
    for gi in 0..3 {
        let mut x = zero3();
        x[gi] = Rat::from_integer(1.into());
        let cols: Vec<[Rat; 3]> = basis
            .iter()
            .map(|b| ad_bivector(g, &x, b).coords())
            .collect();
        let target = eta.images[gi].clone();
        for comp in 0..3 {
            rows.push(vec![
                cols[0][comp].clone(),
                cols[1][comp].clone(),
                cols[2][comp].clone(),
            ]);
            rhs.push(target[comp].clone());
        }
    }
    match solve_exact(rows, rhs, 3) {
        SolveOutcome::Solved(s) => CoboundaryOutcome::Solution {
            r: Bivector::new(
                s.particular[0].clone(),
                s.particular[1].clone(),
                s.particular[2].clone(),
            ),
            freedom: s.freedom,
        },
        SolveOutcome::Inconsistent { combo } => CoboundaryOutcome::Infeasible { certificate: combo },
    }
}

/// The cocommutator induced by a bivector: `η(X) = ad_X(r)` (round-trip
/// companion of [`coboundary_solve`]).
pub fn coboundary_cocommutator(g: &LieAlgebra3, r: &Bivector) -> CocommutatorData {
    let mut images = std::array::from_fn(|_| zero3());
    for gi in 0..3 {
        let mut x = zero3();
        x[gi] = Rat::from_integer(1.into());
        images[gi] = ad_bivector(g, &x, r).coords();
    }
    CocommutatorData { images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn r3(a: i64, b: i64, c: i64) -> [Rat; 3] {
        [rat(a), rat(b), rat(c)]
    }

    #[test]
    fn jacobson_examples() {
        // [A,B]=B, [A,C]=-C: 2D Euclidean-like, alpha = -1
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, -1), r3(0, 0, 0)).unwrap();
        match jacobson_type(&g) {
            JacobsonType::IIIAlpha(a) => {
                assert_eq!(a.canonical_ratio().unwrap(), rat(-1));
            }
            t => panic!("unexpected type {t}"),
        }

        assert_eq!(jacobson_type(&LieAlgebra3::abelian()), JacobsonType::I);

        // [B,C]=A: Heisenberg-Weyl
        let g = LieAlgebra3::new(r3(0, 0, 0), r3(0, 0, 0), r3(1, 0, 0)).unwrap();
        assert_eq!(jacobson_type(&g), JacobsonType::IIHeisenberg);

        // [A,B]=B, C central: Borel + center
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, 0), r3(0, 0, 0)).unwrap();
        assert_eq!(jacobson_type(&g), JacobsonType::IIBorelCentral);

        // [A,B]=B, [A,C]=-C, [B,C]=A: simple
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, -1), r3(1, 0, 0)).unwrap();
        assert_eq!(jacobson_type(&g), JacobsonType::IV);

        // non-diagonalizable family: [A,B]=0, [A,C]=A, [B,C]=A+B
        let g = LieAlgebra3::new(r3(0, 0, 0), r3(1, 0, 0), r3(1, 1, 0)).unwrap();
        assert_eq!(jacobson_type(&g), JacobsonType::IIINilshift);

        // dilations: [A,B]=B, [A,C]=C -> alpha = 1
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, 1), r3(0, 0, 0)).unwrap();
        match jacobson_type(&g) {
            JacobsonType::IIIAlpha(a) => assert_eq!(a.canonical_ratio().unwrap(), rat(1)),
            t => panic!("unexpected type {t}"),
        }
    }

    #[test]
    fn jacobi_gate() {
        // [A,B]=B, [A,C]=C, [B,C]=A violates Jacobi
        assert!(LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, 1), r3(1, 0, 0)).is_err());
    }

    #[test]
    fn cocycle_examples() {
        // Heisenberg with the canonical eta is a bialgebra for any rho
        let g = LieAlgebra3::new(r3(0, 0, 0), r3(0, 0, 0), r3(1, 0, 0)).unwrap();
        let eta = CocommutatorData::canonical(&rat(5));
        assert!(cocycle_check(&g, &eta).is_zero());

        // trivial eta
        assert!(cocycle_check(&g, &CocommutatorData::zero()).is_zero());

        // eta(B) = B∧C on Heisenberg fails the cocycle condition
        let mut bad = CocommutatorData::zero();
        bad.images[1][2] = rat(1);
        let report = cocycle_check(&g, &bad);
        assert!(!report.is_zero());
    }

    #[test]
    fn schouten_simple_cases() {
        // sl2-like: [A,B]=B, [A,C]=-C, [B,C]=A; r = B∧C is standard
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, -1), r3(1, 0, 0)).unwrap();
        let r = Bivector::new(rat(0), rat(0), rat(1));
        let (class, tri) = schouten_classify(&r, &g);
        assert_eq!(class, SchoutenClass::McybeInvariant);
        assert!(!tri.abc.is_zero());

        // r = A∧B with [A,B]=A: Schouten square vanishes
        let g = LieAlgebra3::new(r3(1, 0, 0), r3(0, 0, 0), r3(0, 0, 2)).unwrap();
        let r = Bivector::new(rat(1), rat(0), rat(0));
        let (class, tri) = schouten_classify(&r, &g);
        assert_eq!(class, SchoutenClass::CybeZero);
        assert!(tri.abc.is_zero());

        // zero r is trivially CYBE
        let (class, _) = schouten_classify(&Bivector::zero(), &g);
        assert_eq!(class, SchoutenClass::CybeZero);
    }

    #[test]
    fn schouten_quadratic_scaling() {
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, -1), r3(1, 0, 0)).unwrap();
        let r = Bivector::new(rat(0), rat(0), rat(1));
        let (_, t1) = schouten_classify(&r, &g);
        let (_, t4) = schouten_classify(&r.scale(&rat(2)), &g);
        assert_eq!(t4.abc, t1.abc.clone() * rat(4));
    }

    #[test]
    fn coboundary_roundtrip_and_infeasible() {
        // sl2-like with canonical eta at rho=1: unique r
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, -1), r3(1, 0, 0)).unwrap();
        let eta = CocommutatorData::canonical(&rat(1));
        match coboundary_solve(&g, &eta) {
            CoboundaryOutcome::Solution { r, freedom } => {
                assert_eq!(freedom, 0);
                assert_eq!(coboundary_cocommutator(&g, &r), eta);
                // solution lies on B∧C
                assert!(r.ab.is_zero() && r.ac.is_zero() && !r.bc.is_zero());
            }
            _ => panic!("expected a solution"),
        }

        // eta = 0 admits r = 0; freedom counts the ad-invariant bivectors
        match coboundary_solve(&g, &CocommutatorData::zero()) {
            CoboundaryOutcome::Solution { r, .. } => assert!(r.is_zero()),
            _ => panic!(),
        }

        // dilation-like: [A,B]=B, [A,C]=-2C with eta(B)=A∧B, eta(C)=2 A∧C
        // is non-coboundary
        let g = LieAlgebra3::new(r3(0, 1, 0), r3(0, 0, -2), r3(0, 0, 0)).unwrap();
        let eta = CocommutatorData::canonical(&rat(2));
        assert!(cocycle_check(&g, &eta).is_zero());
        match coboundary_solve(&g, &eta) {
            CoboundaryOutcome::Infeasible { certificate } => {
                assert!(certificate.iter().any(|c| !c.is_zero()));
            }
            _ => panic!("expected infeasible"),
        }
    }

    #[test]
    fn basis_change_relabels() {
        // [A,B]=-A, [A,C]=A, [B,C]=A+B+C under B+C -> B gives
        // [A,B]=0, [A,C]=A, [B,C]=A+B
        let g = LieAlgebra3::new(r3(-1, 0, 0), r3(1, 0, 0), r3(1, 1, 1)).unwrap();
        let rows = [r3(1, 0, 0), r3(0, 1, 1), r3(0, 0, 1)];
        let h = g.change_basis(&rows).unwrap();
        let expect = LieAlgebra3::new(r3(0, 0, 0), r3(1, 0, 0), r3(1, 1, 0)).unwrap();
        assert_eq!(h, expect);
    }
}
