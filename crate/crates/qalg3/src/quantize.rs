//! First-order constraints on structure constants and order-by-order
//! reconstruction of deformed commutators.
//!
//! Given a classical bracket set and the canonical cocommutator family
//! `η(A)=0, η(B)=z A∧B, η(C)=ρz A∧C`, the coproduct is fixed in closed
//! form. Requiring it to be an algebra homomorphism at z^1 against the
//! undeformed brackets yields polynomial constraints; for admissible
//! concrete constants, each even z-order of the deformed brackets is then
//! recovered as an exact linear solve over a symmetrized-monomial ansatz.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::algebra::{sym, AlgElement, CommutatorTable, Gen, Monomial};
use crate::error::{Error, Result};
use crate::hopf::{self, HopfData, TensorElement};
use crate::linalg::{solve_exact, SolveOutcome};
use crate::param::Param;
use crate::poly::ParamPoly;
use crate::rational::Rat;
use crate::series::ZSeries;

/// The nine structure constants of
/// `[A,B]=c1 A+c2 B+c3 C, [A,C]=b1 A+b2 B+b3 C, [B,C]=a1 A+a2 B+a3 C`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureConstants {
    pub a1: ParamPoly,
    pub a2: ParamPoly,
    pub a3: ParamPoly,
    pub b1: ParamPoly,
    pub b2: ParamPoly,
    pub b3: ParamPoly,
    pub c1: ParamPoly,
    pub c2: ParamPoly,
    pub c3: ParamPoly,
}

impl StructureConstants {
    /// Fully symbolic constants: each one is its own parameter.
    pub fn symbolic() -> Self {
        StructureConstants {
            a1: ParamPoly::var(Param::A1),
            a2: ParamPoly::var(Param::A2),
            a3: ParamPoly::var(Param::A3),
            b1: ParamPoly::var(Param::B1),
            b2: ParamPoly::var(Param::B2),
            b3: ParamPoly::var(Param::B3),
            c1: ParamPoly::var(Param::C1),
            c2: ParamPoly::var(Param::C2),
            c3: ParamPoly::var(Param::C3),
        }
    }

    pub fn zero() -> Self {
        StructureConstants {
            a1: ParamPoly::zero(),
            a2: ParamPoly::zero(),
            a3: ParamPoly::zero(),
            b1: ParamPoly::zero(),
            b2: ParamPoly::zero(),
            b3: ParamPoly::zero(),
            c1: ParamPoly::zero(),
            c2: ParamPoly::zero(),
            c3: ParamPoly::zero(),
        }
    }

    /// Concrete constants from a (possibly partial) binding map; unbound
    /// names default to zero.
    pub fn from_bindings(bindings: &BTreeMap<Param, Rat>) -> Self {
        let get = |p: Param| {
            bindings
                .get(&p)
                .map(|r| ParamPoly::constant(r.clone()))
                .unwrap_or_else(ParamPoly::zero)
        };
        StructureConstants {
            a1: get(Param::A1),
            a2: get(Param::A2),
            a3: get(Param::A3),
            b1: get(Param::B1),
            b2: get(Param::B2),
            b3: get(Param::B3),
            c1: get(Param::C1),
            c2: get(Param::C2),
            c3: get(Param::C3),
        }
    }

    pub fn substitute(&self, bindings: &BTreeMap<Param, Rat>) -> Self {
        StructureConstants {
            a1: self.a1.substitute(bindings),
            a2: self.a2.substitute(bindings),
            a3: self.a3.substitute(bindings),
            b1: self.b1.substitute(bindings),
            b2: self.b2.substitute(bindings),
            b3: self.b3.substitute(bindings),
            c1: self.c1.substitute(bindings),
            c2: self.c2.substitute(bindings),
            c3: self.c3.substitute(bindings),
        }
    }

    pub fn is_concrete(&self) -> bool {
        self.all().iter().all(|p| p.as_constant().is_some())
    }

    fn all(&self) -> [&ParamPoly; 9] {
        [
            &self.a1, &self.a2, &self.a3, &self.b1, &self.b2, &self.b3, &self.c1, &self.c2,
            &self.c3,
        ]
    }
}

/// Classical brackets plus the fixed one-parameter cocommutator family.
#[derive(Debug, Clone)]
pub struct BialgebraSpec {
    pub constants: StructureConstants,
    pub rho: ParamPoly,
}

impl BialgebraSpec {
    pub fn symbolic() -> Self {
        BialgebraSpec {
            constants: StructureConstants::symbolic(),
            rho: ParamPoly::var(Param::Rho),
        }
    }

    pub fn concrete(bindings: &BTreeMap<Param, Rat>) -> Self {
        let rho = bindings
            .get(&Param::Rho)
            .map(|r| ParamPoly::constant(r.clone()))
            .unwrap_or_else(ParamPoly::zero);
        BialgebraSpec {
            constants: StructureConstants::from_bindings(bindings),
            rho,
        }
    }

    pub fn with_rho(mut self, rho: ParamPoly) -> Self {
        self.rho = rho;
        self
    }

    pub fn is_concrete(&self) -> bool {
        self.constants.is_concrete() && self.rho.as_constant().is_some()
    }
}

/// Canonicalized polynomial equations required to vanish.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSet {
    pub equations: Vec<ParamPoly>,
}

impl ConstraintSet {
    pub fn is_satisfied_by(&self, bindings: &BTreeMap<Param, Rat>) -> Result<()> {
        for eq in &self.equations {
            let v = eq
                .substitute(bindings)
                .as_constant()
                .ok_or(Error::SymbolicCoefficient)?;
            if !v.is_zero() {
                return Err(Error::ConstraintViolation(eq.to_string()));
            }
        }
        Ok(())
    }

    pub fn contains(&self, p: &ParamPoly) -> bool {
        let n = p.normalized();
        self.equations.contains(&n)
    }
}

/// Impose that the canonical coproduct is an algebra homomorphism at order
/// z^1 against the *undeformed* brackets, together with classical Jacobi.
///
/// The raw conditions are reduced to a canonical set: linear relations with
/// a rational leading coefficient are substituted into the rest, exact
/// polynomial multiples of remaining constraints are dropped, and scalar
/// multiples are merged.
pub fn first_order_constraints(spec: &BialgebraSpec) -> Result<ConstraintSet> {
    // homomorphism residual at z^1 with the undeformed brackets
    let table = CommutatorTable::classical(&spec.constants, 1);
    let h = HopfData::canonical(&spec.rho, 1);
    let residuals = hopf::check_homomorphism(&h, &table)?;

    let mut raw: Vec<ParamPoly> = Vec::new();
    for r in &residuals {
        for (_, poly) in r.z_layer(1) {
            raw.push(poly);
        }
    }

    // classical Jacobi residuals (z^0 layer of the table's Jacobiator)
    let jacobi = table.jacobi_residuals()?;
    let mut jacobi_polys: Vec<ParamPoly> = Vec::new();
    for r in [&jacobi.a, &jacobi.b, &jacobi.c] {
        for (_, poly) in r.z_layer(0) {
            jacobi_polys.push(poly);
        }
    }

    Ok(reduce_constraints(raw, jacobi_polys))
}

fn reduce_constraints(raw: Vec<ParamPoly>, jacobi: Vec<ParamPoly>) -> ConstraintSet {
    let mut base: BTreeSet<ParamPoly> = raw
        .into_iter()
        .map(|p| p.normalized())
        .filter(|p| !p.is_zero())
        .collect();

    // collect substitutions x -> value from linear members
    let mut substitutions: Vec<(Param, ParamPoly)> = Vec::new();
    for eq in &base {
        if let Some((x, val)) = eq.solve_linear() {
            if !substitutions.iter().any(|(p, _)| *p == x) {
                substitutions.push((x, val));
            }
        }
    }
    // close substitutions under each other (values may mention solved vars)
    for i in 0..substitutions.len() {
        for j in 0..substitutions.len() {
            if i == j {
                continue;
            }
            let (xj, vj) = substitutions[j].clone();
            substitutions[i].1 = substitutions[i].1.substitute_poly(xj, &vj);
        }
    }

    let mut reduced_jacobi: Vec<ParamPoly> = Vec::new();
    for mut p in jacobi {
        for (x, val) in &substitutions {
            p = p.substitute_poly(*x, val);
        }
        let p = p.normalized();
        if p.is_zero() {
            continue;
        }
        // drop residuals already implied as polynomial multiples
        let implied = base
            .iter()
            .any(|c| p.try_div_exact(c).is_some());
        if !implied {
            reduced_jacobi.push(p);
        }
    }

    for p in reduced_jacobi {
        base.insert(p);
    }
    ConstraintSet {
        equations: base.into_iter().collect(),
    }
}

/// Result of an order-by-order quantization.
#[derive(Debug, Clone)]
pub struct QuantizationResult {
    pub table: CommutatorTable,
    pub hopf: HopfData,
    /// Even z-orders that were solved.
    pub solved_orders: Vec<usize>,
    /// Dimension of the unresolved (gauge) solution space per solved order.
    pub freedom: Vec<(usize, usize)>,
    /// Degree-bound escalations that were needed: (order, bound used).
    pub escalations: Vec<(usize, usize)>,
}

/// Correction ansatz: symmetrized monomials `Sym(A^p)`, `Sym(B A^p)`,
/// `Sym(C A^p)` with `p <= bound`.
fn ansatz_monomials(bound: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for p in 0..=bound {
        out.push(Monomial::new(p as u32, 0, 0));
        out.push(Monomial::new(p as u32, 1, 0));
        out.push(Monomial::new(p as u32, 0, 1));
    }
    // skip the identity monomial Sym(A^0) = 1: brackets carry no scalar part
    out.retain(|m| !m.is_one());
    out
}

/// Equation slots: one rational equation per (residual id, monomial key).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum SlotKey {
    Hom(usize, Monomial, Monomial),
    Jacobi(usize, Monomial),
}

struct ResidualData {
    hom: [TensorElement; 3],
    jac: [AlgElement; 3],
}

fn residuals(h: &HopfData, t: &CommutatorTable) -> Result<ResidualData> {
    let hom = hopf::check_homomorphism(h, t)?;
    let j = t.jacobi_residuals()?;
    Ok(ResidualData {
        hom,
        jac: [j.a, j.b, j.c],
    })
}

fn layer_equations(data: &ResidualData, order: usize) -> BTreeMap<SlotKey, Rat> {
    let mut out = BTreeMap::new();
    for (i, r) in data.hom.iter().enumerate() {
        for ((m1, m2), poly) in r.z_layer(order) {
            let c = poly.as_constant().expect("concrete constants");
            out.insert(SlotKey::Hom(i, m1, m2), c);
        }
    }
    for (i, r) in data.jac.iter().enumerate() {
        for (m, poly) in r.z_layer(order) {
            let c = poly.as_constant().expect("concrete constants");
            out.insert(SlotKey::Jacobi(i, m), c);
        }
    }
    out
}

fn first_bad_order(data: &ResidualData, upto: usize) -> Option<usize> {
    let mut lowest: Option<usize> = None;
    for r in &data.hom {
        if let Some(k) = r.lowest_z_order() {
            lowest = Some(lowest.map_or(k, |l: usize| l.min(k)));
        }
    }
    for r in &data.jac {
        if let Some(k) = r.lowest_z_order() {
            lowest = Some(lowest.map_or(k, |l: usize| l.min(k)));
        }
    }
    lowest.filter(|&k| k <= upto)
}

/// One column of the linear system: how a unit correction on `(bracket,
/// Sym(mon))` moves the residual layer at its own z-order.
///
/// The column is computed against the classical-only table with the probe
/// placed at z^2; by z-grading the structural coefficients are the same at
/// every even order, since at the extraction order the probe interacts with
/// z^0 data only.
fn probe_column(
    classical: &CommutatorTable,
    h: &HopfData,
    base_layer: &BTreeMap<SlotKey, Rat>,
    bracket: (Gen, Gen),
    mon: Monomial,
) -> Result<BTreeMap<SlotKey, Rat>> {
    let expansion = sym::sym_expansion(mon, classical);
    let correction = expansion.shift_z(2);
    let probed = classical.with_correction(bracket.0, bracket.1, &correction)?;
    let data = residuals(h, &probed)?;
    let mut layer = layer_equations(&data, 2);
    for (k, v) in base_layer {
        let cur = layer.remove(k).unwrap_or_else(Rat::zero);
        let diff = cur - v;
        if !diff.is_zero() {
            layer.insert(k.clone(), diff);
        }
    }
    Ok(layer)
}

const BRACKETS: [(Gen, Gen); 3] = [(Gen::A, Gen::B), (Gen::A, Gen::C), (Gen::B, Gen::C)];

/// Reconstruct the deformed commutators order by order.
///
/// For each even order `2m <= N` the correction to each bracket is an
/// unknown combination of `Sym(A^p), Sym(B A^p), Sym(C A^p)` with
/// `p <= 2m+1`; the homomorphism and Jacobi residuals at that order give an
/// exact linear system. Free variables are set to zero and their count is
/// reported. An inconsistent system escalates the degree bound by two, up
/// to `N+1`, recording the escalation.
pub fn quantize(spec: &BialgebraSpec, truncation: usize) -> Result<QuantizationResult> {
    if !spec.is_concrete() {
        return Err(Error::SymbolicCoefficient);
    }
    if truncation < 2 {
        return Err(Error::Invalid("truncation order must be at least 2".into()));
    }
    let constraints = first_order_constraints(spec)?;
    if let Some(eq) = constraints
        .equations
        .iter()
        .find(|eq| !eq.as_constant().is_some_and(|c| c.is_zero()))
    {
        return Err(Error::ConstraintViolation(eq.to_string()));
    }

    let h = HopfData::canonical(&spec.rho, truncation);
    let classical = CommutatorTable::classical(&spec.constants, truncation);

    // the classical pair must be a Lie bialgebra (cocycle and co-Jacobi)
    {
        let g = crate::classical::LieAlgebra3::classical_limit(&classical, &BTreeMap::new())?;
        let rho = spec.rho.as_constant().expect("concrete constants");
        let eta = crate::classical::CocommutatorData::canonical(&rho);
        let report = crate::classical::cocycle_check(&g, &eta);
        if !report.is_zero() {
            return Err(Error::ConstraintViolation(
                "classical pair is not a Lie bialgebra".into(),
            ));
        }
    }

    let mut table = classical.clone();

    // Structural columns, shared by all orders: by z-grading a unit
    // correction placed at any even order meets only z^0 data at its own
    // order, so the columns are probed once at truncation 2.
    let max_bound = truncation + 1;
    let mut columns: BTreeMap<(usize, Monomial), BTreeMap<SlotKey, Rat>> = BTreeMap::new();
    {
        let classical2 = CommutatorTable::classical(&spec.constants, 2);
        let h2 = HopfData::canonical(&spec.rho, 2);
        let base = residuals(&h2, &classical2)?;
        let base_layer = layer_equations(&base, 2);
        for (bi, bracket) in BRACKETS.into_iter().enumerate() {
            for mon in ansatz_monomials(max_bound) {
                let col = probe_column(&classical2, &h2, &base_layer, bracket, mon)?;
                columns.insert((bi, mon), col);
            }
        }
    }

    let mut solved_orders = Vec::new();
    let mut freedom = Vec::new();
    let mut escalations = Vec::new();

    let mut order = 2;
    while order <= truncation {
        let data = residuals(&h, &table)?;
        if let Some(bad) = first_bad_order(&data, order - 1) {
            // residuals below the order being solved cannot be repaired by
            // an even-order ansatz; this would be a genuinely new constraint
            return Err(Error::InconsistentSystem {
                order: bad,
                bound: 0,
            });
        }
        let rhs_layer = layer_equations(&data, order);

        let mut bound = order + 1;
        let solution = loop {
            let unknowns: Vec<(usize, Monomial)> = (0..3)
                .flat_map(|bi| {
                    ansatz_monomials(bound)
                        .into_iter()
                        .map(move |m| (bi, m))
                })
                .collect();
            // assemble rows over the union of touched slots
            let mut slots: BTreeSet<SlotKey> = rhs_layer.keys().cloned().collect();
            for u in &unknowns {
                slots.extend(columns[u].keys().cloned());
            }
            let slots: Vec<SlotKey> = slots.into_iter().collect();
            let mut rows = Vec::with_capacity(slots.len());
            let mut rhs = Vec::with_capacity(slots.len());
            for s in &slots {
                let row: Vec<Rat> = unknowns
                    .iter()
                    .map(|u| columns[u].get(s).cloned().unwrap_or_else(Rat::zero))
                    .collect();
                rows.push(row);
                rhs.push(-rhs_layer.get(s).cloned().unwrap_or_else(Rat::zero));
            }
            match solve_exact(rows, rhs, unknowns.len()) {
                SolveOutcome::Solved(s) => break (unknowns, s),
                SolveOutcome::Inconsistent { .. } => {
                    if bound + 2 > max_bound {
                        return Err(Error::InconsistentSystem { order, bound });
                    }
                    bound += 2;
                    escalations.push((order, bound));
                }
            }
        };

        let (unknowns, sol) = solution;
        // install the correction: coefficients live on symmetrized monomials
        for bi in 0..3 {
            let mut sym_coeffs = AlgElement::zero(truncation);
            for ((b, m), c) in unknowns.iter().zip(&sol.particular) {
                if *b == bi && !c.is_zero() {
                    sym_coeffs.add_series(*m, ZSeries::monomial(ParamPoly::constant(c.clone()), order, truncation));
                }
            }
            if sym_coeffs.is_zero() {
                continue;
            }
            let correction = sym::sym_to_ordered(&sym_coeffs, &table)?;
            let (x, y) = BRACKETS[bi];
            table = table.with_correction(x, y, &correction)?;
        }
        solved_orders.push(order);
        freedom.push((order, sol.freedom));
        order += 2;
    }

    // final verification: residuals vanish identically at the full order
    let data = residuals(&h, &table)?;
    if let Some(bad) = first_bad_order(&data, truncation) {
        return Err(Error::InconsistentSystem {
            order: bad,
            bound: 0,
        });
    }

    let mut params = BTreeMap::new();
    if let Some(r) = spec.rho.as_constant() {
        params.insert(Param::Rho, r);
    }
    let table = table.with_params(params);

    Ok(QuantizationResult {
        table,
        hopf: h,
        solved_orders,
        freedom,
        escalations,
    })
}

/// Entrywise difference of two tables after reduction.
pub fn compare_tables(
    t1: &CommutatorTable,
    t2: &CommutatorTable,
) -> Result<[AlgElement; 3]> {
    Ok([
        t1.ab().sub(t2.ab())?,
        t1.ac().sub(t2.ac())?,
        t1.bc().sub(t2.bc())?,
    ])
}
