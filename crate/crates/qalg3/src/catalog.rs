//! The catalog of three-dimensional quantum algebras compatible with the
//! canonical coproduct family, plus the three multiparameter families they
//! are classified from.
//!
//! Numbered cases `1.1.1 .. 3.2.5` are the normalized representatives; the
//! `family-1/2/3` presets carry free structure constants subject to the
//! first-order constraint sets.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{generator_series, sym, AlgElement, CommutatorTable, Gen, Monomial, SeriesKind};
use crate::classical::Bivector;
use crate::error::{Error, Result};
use crate::hopf::{self, HopfData};
use crate::param::Param;
use crate::poly::ParamPoly;
use crate::rational::{inv_factorial, rat, Rat};
use crate::series::ZSeries;

/// IDs of the sixteen normalized cases.
pub const CASE_IDS: [&str; 16] = [
    "1.1.1", "1.2.1", "1.2.2", "2.1.1", "2.1.2", "2.2.1", "2.2.2.1", "2.2.2.2", "2.2.2.3",
    "2.2.2.4", "3.1", "3.2.1", "3.2.2", "3.2.3", "3.2.4", "3.2.5",
];

/// IDs of the pre-classification families.
pub const FAMILY_IDS: [&str; 3] = ["family-1", "family-2", "family-3"];

/// Coboundary status of a case's underlying Lie bialgebra, as cataloged.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoboundaryLabel {
    /// No classical r-matrix exists.
    NonCoboundary,
    /// r-matrix with ad-invariant Schouten square (modified CYBE).
    Standard,
    /// r-matrix with vanishing Schouten square (CYBE).
    NonStandard,
}

impl std::fmt::Display for CoboundaryLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoboundaryLabel::NonCoboundary => write!(f, "non-coboundary"),
            CoboundaryLabel::Standard => write!(f, "standard"),
            CoboundaryLabel::NonStandard => write!(f, "non-standard"),
        }
    }
}

/// Inert classification metadata attached to a case.
#[derive(Debug, Clone)]
pub struct CaseNotes {
    pub coboundary: CoboundaryLabel,
    pub jacobson: &'static str,
    /// Label of the corresponding dual pair in the reference classification
    /// of real 3D Lie bialgebras; stored as an opaque string.
    pub dual_label: &'static str,
    pub description: &'static str,
}

/// A fully instantiated catalog entry.
#[derive(Debug, Clone)]
pub struct CatalogCase {
    pub id: String,
    /// Concrete parameter bindings used to build the case (may be empty for
    /// generic symbolic rho).
    pub params: BTreeMap<Param, Rat>,
    /// The coproduct weight of C (rho), possibly symbolic.
    pub rho: ParamPoly,
    pub table: CommutatorTable,
    pub hopf: HopfData,
    /// Candidate classical r-matrix named by the classification (unit ẑ
    /// scale), when one exists.
    pub r_matrix: Option<Bivector>,
    pub notes: CaseNotes,
}

/// Outcome of the full Hopf verification of a case.
#[derive(Debug, Clone)]
pub struct HopfReport {
    pub coassociativity: [Option<usize>; 3],
    pub homomorphism: [Option<usize>; 3],
    pub counit: [Option<usize>; 3],
    pub sigma_tilde: [bool; 3],
    pub antipode_ok: bool,
    pub jacobi_order: Option<usize>,
    pub entries_even: bool,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.coassociativity.iter().all(Option::is_none)
            && self.homomorphism.iter().all(Option::is_none)
            && self.counit.iter().all(Option::is_none)
            && self.sigma_tilde.iter().all(|&b| b)
            && self.antipode_ok
            && self.jacobi_order.is_none()
            && self.entries_even
    }
}

impl CatalogCase {
    /// Run every Hopf-layer check; `Ok` entries hold the first failing
    /// z-order per generator (or pair), `None` meaning the residual is zero.
    pub fn verify(&self) -> Result<HopfReport> {
        verify_pair(&self.hopf, &self.table)
    }
}

/// Hopf verification of an arbitrary (coproduct, table) pair.
pub fn verify_pair(h: &HopfData, t: &CommutatorTable) -> Result<HopfReport> {
    let coassoc = hopf::check_coassociativity(h, t)?;
    let hom = hopf::check_homomorphism(h, t)?;
    let counit = hopf::check_counit(h)?;
    let sigma = hopf::check_sigma_tilde(h)?;
    let antipode_ok = hopf::solve_antipode(h, t).is_ok();
    let jacobi = t.jacobi_residuals()?;
    Ok(HopfReport {
        coassociativity: [
            coassoc[0].lowest_z_order(),
            coassoc[1].lowest_z_order(),
            coassoc[2].lowest_z_order(),
        ],
        homomorphism: [
            hom[0].lowest_z_order(),
            hom[1].lowest_z_order(),
            hom[2].lowest_z_order(),
        ],
        counit: [
            counit[0].0.lowest_z_order().or(counit[0].1.lowest_z_order()),
            counit[1].0.lowest_z_order().or(counit[1].1.lowest_z_order()),
            counit[2].0.lowest_z_order().or(counit[2].1.lowest_z_order()),
        ],
        sigma_tilde: [sigma[0].0, sigma[1].0, sigma[2].0],
        antipode_ok,
        jacobi_order: jacobi.first_nonzero_order(),
        entries_even: t.entries_even_in_z(),
    })
}

fn linear(n: usize, coeffs: [(Gen, ParamPoly); 3]) -> AlgElement {
    let mut e = AlgElement::zero(n);
    for (g, c) in coeffs {
        e.add_series(Monomial::gen(g), ZSeries::constant(c, n));
    }
    e
}

fn gen_scaled(g: Gen, c: &ParamPoly, n: usize) -> AlgElement {
    AlgElement::generator(g, n).scale_poly(c)
}

/// `Sym{ G cosh(rate * z A) }` expanded on the ordered basis against a
/// table whose `[A,B]` and `[A,C]` entries are already in place.
fn sym_cosh(g: Gen, rate: &ParamPoly, partial: &CommutatorTable) -> AlgElement {
    let n = partial.truncation_order();
    let mut sym_coeffs = AlgElement::zero(n);
    let mut k = 0;
    while 2 * k <= n {
        let m = match g {
            Gen::A => Monomial::new(2 * k as u32 + 1, 0, 0),
            Gen::B => Monomial::new(2 * k as u32, 1, 0),
            Gen::C => Monomial::new(2 * k as u32, 0, 1),
        };
        let c = rate.pow(2 * k as u32).scale(&inv_factorial(2 * k));
        sym_coeffs.add_series(m, ZSeries::monomial(c, 2 * k, n));
        k += 1;
    }
    sym::sym_to_ordered(&sym_coeffs, partial).expect("matching truncation")
}

fn with_ab_ac(n: usize, ab: AlgElement, ac: AlgElement) -> CommutatorTable {
    CommutatorTable::new(ab, ac, AlgElement::zero(n)).expect("valid partial table")
}

struct CaseBuild {
    rho: ParamPoly,
    table: CommutatorTable,
    r_matrix: Option<Bivector>,
    notes: CaseNotes,
}

fn rho_param(params: &BTreeMap<Param, Rat>) -> ParamPoly {
    params
        .get(&Param::Rho)
        .map(|r| ParamPoly::constant(r.clone()))
        .unwrap_or_else(|| ParamPoly::var(Param::Rho))
}

fn check_rho_generic(rho: &ParamPoly) -> Result<()> {
    if let Some(r) = rho.as_constant() {
        if r == rat(1) || r == rat(-1) {
            return Err(Error::ParameterConstraint(
                "this family requires rho != 1 and rho != -1".into(),
            ));
        }
    }
    Ok(())
}

fn get_or(params: &BTreeMap<Param, Rat>, p: Param, default: Rat) -> Rat {
    params.get(&p).cloned().unwrap_or(default)
}

fn r_ab() -> Option<Bivector> {
    Some(Bivector::new(rat(1), rat(0), rat(0)))
}

fn r_ac() -> Option<Bivector> {
    Some(Bivector::new(rat(0), rat(1), rat(0)))
}

fn r_bc() -> Option<Bivector> {
    Some(Bivector::new(rat(0), rat(0), rat(1)))
}

/// Instantiate a catalog case at truncation order `n`.
///
/// `params` may bind `rho` (mandatory sign constraints are enforced per
/// family) and, for the `family-*` presets, the free structure constants.
/// The constructed table is checked for evenness and Jacobi consistency.
pub fn catalog_table(
    case_id: &str,
    params: &BTreeMap<Param, Rat>,
    n: usize,
) -> Result<CatalogCase> {
    if n < 2 {
        return Err(Error::Invalid("truncation order must be at least 2".into()));
    }
    let build = match case_id {
        "1.1.1" => case_1_1_1(params, n)?,
        "1.2.1" => case_1_2_1(params, n)?,
        "1.2.2" => case_1_2_2(params, n)?,
        "2.1.1" => case_2_1_1(n),
        "2.1.2" => case_2_1_2(n),
        "2.2.1" => case_2_2_1(n),
        "2.2.2.1" => case_2_2_2_1(n),
        "2.2.2.2" => case_2_2_2_2(n),
        "2.2.2.3" => case_2_2_2_3(n),
        "2.2.2.4" => case_2_2_2_4(n),
        "3.1" => case_3_1(n),
        "3.2.1" => case_3_2_1(n),
        "3.2.2" => case_3_2_2(n),
        "3.2.3" => case_3_2_3(n),
        "3.2.4" => case_3_2_4(n),
        "3.2.5" => case_3_2_5(n),
        "family-1" => family_1(params, n)?,
        "family-2" => family_2(params, n),
        "family-3" => family_3(params, n)?,
        other => return Err(Error::UnknownCase(other.to_string())),
    };

    let hopf = HopfData::canonical(&build.rho, n);
    let mut bound = params.clone();
    if let Some(r) = build.rho.as_constant() {
        bound.insert(Param::Rho, r);
    }
    let table = build.table.with_params(bound.clone());

    // cheap construction-time sanity: entries even in z, Jacobi consistent
    if !table.entries_even_in_z() {
        return Err(Error::Invalid(format!(
            "case {case_id}: table entries are not even in z"
        )));
    }
    if let Some(order) = table.jacobi_residuals()?.first_nonzero_order() {
        return Err(Error::Invalid(format!(
            "case {case_id}: Jacobi residual at z^{order}"
        )));
    }

    Ok(CatalogCase {
        id: case_id.to_string(),
        params: bound,
        rho: build.rho,
        table,
        hopf,
        r_matrix: build.r_matrix,
        notes: build.notes,
    })
}

fn case_1_1_1(params: &BTreeMap<Param, Rat>, n: usize) -> Result<CaseBuild> {
    let rho = rho_param(params);
    check_rho_generic(&rho)?;
    let table = CommutatorTable::new(
        AlgElement::generator(Gen::B, n),
        gen_scaled(Gen::C, &rho.negate(), n),
        AlgElement::zero(n),
    )?;
    Ok(CaseBuild {
        rho,
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "III",
            dual_label: "7",
            description: "solvable family [A,B]=B, [A,C]=-rho C with undeformed brackets",
        },
    })
}

fn case_1_2_1(params: &BTreeMap<Param, Rat>, n: usize) -> Result<CaseBuild> {
    let rho = rho_param(params);
    check_rho_generic(&rho)?;
    let ab = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let partial = with_ab_ac(n, ab.clone(), AlgElement::zero(n));
    let bc = sym_cosh(Gen::C, &ParamPoly::one(), &partial).scale_poly(&rho);
    let table = CommutatorTable::new(ab, AlgElement::zero(n), bc)?;
    Ok(CaseBuild {
        rho,
        table,
        r_matrix: r_ab(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonStandard,
            jacobson: "III",
            dual_label: "6",
            description: "sinh-deformed solvable family with triangular r-matrix",
        },
    })
}

fn case_1_2_2(params: &BTreeMap<Param, Rat>, n: usize) -> Result<CaseBuild> {
    let rho = rho_param(params);
    check_rho_generic(&rho)?;
    let rate = ParamPoly::one().add(&rho);
    let bc = generator_series(Gen::A, SeriesKind::SinhOverScaledZ, &rate, n);
    let table = CommutatorTable::new(AlgElement::zero(n), AlgElement::zero(n), bc)?;
    Ok(CaseBuild {
        rho,
        table,
        r_matrix: r_bc(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::Standard,
            jacobson: "II (Heisenberg-Weyl)",
            dual_label: "5",
            description: "Heisenberg-Weyl deformation with sinh central bracket",
        },
    })
}

fn case_2_1_1(n: usize) -> CaseBuild {
    let bc = generator_series(
        Gen::A,
        SeriesKind::SinhOverScaledZ,
        &ParamPoly::constant(rat(2)),
        n,
    );
    let table = CommutatorTable::new(
        AlgElement::generator(Gen::B, n),
        AlgElement::generator(Gen::C, n).negate(),
        bc,
    )
    .expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: r_bc(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::Standard,
            jacobson: "IV (simple)",
            dual_label: "(1); (2),(4)",
            description: "standard one-parameter deformation of the simple algebra",
        },
    }
}

fn case_2_1_2(n: usize) -> CaseBuild {
    let table = CommutatorTable::new(
        AlgElement::generator(Gen::B, n),
        AlgElement::generator(Gen::C, n).negate(),
        AlgElement::zero(n),
    )
    .expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "III (alpha = -1)",
            dual_label: "9",
            description: "deformation of the complexified 2D Euclidean algebra",
        },
    }
}

fn case_2_2_1(n: usize) -> CaseBuild {
    let ab = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n).negate();
    let ac = AlgElement::generator(Gen::B, n);
    let partial = with_ab_ac(n, ab.clone(), ac.clone());
    let bc = sym_cosh(Gen::C, &ParamPoly::one(), &partial).negate();
    let table = CommutatorTable::new(ab, ac, bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: r_ab(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonStandard,
            jacobson: "IV (simple)",
            dual_label: "(3)",
            description: "symmetrized Jordanian deformation",
        },
    }
}

fn case_2_2_2_1(n: usize) -> CaseBuild {
    let ab = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let partial = with_ab_ac(n, ab.clone(), AlgElement::zero(n));
    let bc = sym_cosh(Gen::C, &ParamPoly::one(), &partial);
    let table = CommutatorTable::new(ab, AlgElement::zero(n), bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: r_ab(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonStandard,
            jacobson: "III (alpha = -1)",
            dual_label: "6 at rho=1",
            description: "non-standard deformation of the 2D Euclidean algebra",
        },
    }
}

fn case_2_2_2_2(n: usize) -> CaseBuild {
    let bc = generator_series(
        Gen::A,
        SeriesKind::SinhOverScaledZ,
        &ParamPoly::constant(rat(2)),
        n,
    );
    let table = CommutatorTable::new(
        AlgElement::zero(n),
        AlgElement::generator(Gen::B, n).negate(),
        bc,
    )
    .expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: r_bc(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::Standard,
            jacobson: "III (alpha = -1)",
            dual_label: "11, 11'",
            description: "standard deformation of the 2D Euclidean algebra",
        },
    }
}

fn case_2_2_2_3(n: usize) -> CaseBuild {
    let bc = generator_series(
        Gen::A,
        SeriesKind::SinhOverScaledZ,
        &ParamPoly::constant(rat(2)),
        n,
    );
    let table = CommutatorTable::new(AlgElement::zero(n), AlgElement::zero(n), bc)
        .expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        // the catalog names r on C∧B: opposite orientation of the B∧C basis
        r_matrix: Some(Bivector::new(rat(0), rat(0), rat(-1))),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::Standard,
            jacobson: "II (Heisenberg-Weyl)",
            dual_label: "5 at rho=1",
            description: "standard deformation of the Heisenberg-Weyl algebra",
        },
    }
}

fn case_2_2_2_4(n: usize) -> CaseBuild {
    let table = CommutatorTable::new(
        AlgElement::zero(n),
        AlgElement::generator(Gen::B, n),
        AlgElement::zero(n),
    )
    .expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "II (Heisenberg-Weyl)",
            dual_label: "10",
            description: "non-coboundary deformation of the Heisenberg-Weyl algebra",
        },
    }
}

fn case_3_1(n: usize) -> CaseBuild {
    let table = CommutatorTable::new(
        AlgElement::generator(Gen::B, n),
        AlgElement::generator(Gen::C, n),
        AlgElement::zero(n),
    )
    .expect("valid table");
    CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "III (alpha = 1)",
            dual_label: "7 at rho=-1",
            description: "deformation of the dilation algebra",
        },
    }
}

fn case_3_2_1(n: usize) -> CaseBuild {
    let s = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let ab = s.negate();
    let ac = s;
    let partial = with_ab_ac(n, ab.clone(), ac.clone());
    let bc = AlgElement::generator(Gen::A, n)
        .add(&sym_cosh(Gen::B, &ParamPoly::one(), &partial))
        .and_then(|e| e.add(&sym_cosh(Gen::C, &ParamPoly::one(), &partial)))
        .expect("matching truncation");
    let table = CommutatorTable::new(ab, ac, bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "III (nilpotent shift)",
            dual_label: "8",
            description: "deformation of the non-diagonalizable solvable algebra",
        },
    }
}

fn case_3_2_2(n: usize) -> CaseBuild {
    let ac = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let partial = with_ab_ac(n, AlgElement::zero(n), ac.clone());
    let bc = AlgElement::generator(Gen::A, n)
        .add(&sym_cosh(Gen::B, &ParamPoly::one(), &partial))
        .expect("matching truncation");
    let table = CommutatorTable::new(AlgElement::zero(n), ac, bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: r_ac(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonStandard,
            jacobson: "III (nilpotent shift)",
            dual_label: "(14)",
            description: "non-standard deformation of the non-diagonalizable solvable algebra",
        },
    }
}

fn case_3_2_3(n: usize) -> CaseBuild {
    let s = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let ab = s.negate();
    let ac = s;
    let partial = with_ab_ac(n, ab.clone(), ac.clone());
    let bc = sym_cosh(Gen::B, &ParamPoly::one(), &partial)
        .add(&sym_cosh(Gen::C, &ParamPoly::one(), &partial))
        .expect("matching truncation");
    let table = CommutatorTable::new(ab, ac, bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "III (alpha = 1)",
            dual_label: "(11)",
            description: "deformation of the 2D dilation algebra",
        },
    }
}

fn case_3_2_4(n: usize) -> CaseBuild {
    let table = CommutatorTable::new(
        AlgElement::zero(n),
        AlgElement::zero(n),
        AlgElement::generator(Gen::A, n),
    )
    .expect("valid table");
    CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: r_bc(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::Standard,
            jacobson: "II (Heisenberg-Weyl)",
            dual_label: "5'",
            description: "coboundary-labeled deformation of the Heisenberg-Weyl algebra",
        },
    }
}

fn case_3_2_5(n: usize) -> CaseBuild {
    let ab = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n).negate();
    let partial = with_ab_ac(n, ab.clone(), AlgElement::zero(n));
    let bc = sym_cosh(Gen::C, &ParamPoly::one(), &partial);
    let table = CommutatorTable::new(ab, AlgElement::zero(n), bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: r_ab(),
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonStandard,
            jacobson: "III (alpha = 1)",
            dual_label: "6 at rho=-1",
            description: "non-standard deformation of the 2D dilation algebra",
        },
    }
}

fn family_1(params: &BTreeMap<Param, Rat>, n: usize) -> Result<CaseBuild> {
    let rho_rat = get_or(params, Param::Rho, rat(2));
    if rho_rat == rat(1) || rho_rat == rat(-1) {
        return Err(Error::ParameterConstraint(
            "family-1 requires rho != 1 and rho != -1".into(),
        ));
    }
    let rho = ParamPoly::constant(rho_rat.clone());
    let c1 = get_or(params, Param::C1, rat(1));
    let c2 = get_or(params, Param::C2, rat(1));
    let a2 = get_or(params, Param::A2, if c2.is_zero() { rat(0) } else { rat(1) });
    let one_plus_rho = Rat::one() + &rho_rat;

    if !c2.is_zero() {
        // a1 is pinned by the Jacobi constraint a2 c1 (1+rho) = a1 c2
        let a1 = &a2 * &c1 * &one_plus_rho / &c2;
        if let Some(given) = params.get(&Param::A1) {
            if *given != a1 {
                return Err(Error::ParameterConstraint(format!(
                    "a1 must equal a2*c1*(1+rho)/c2 = {}",
                    crate::rational::fmt_rat(&a1)
                )));
            }
        }
        let sinh_1 = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
        let sinh_rho = generator_series(Gen::A, SeriesKind::SinhOverZ, &rho, n);
        let sinh_sum = generator_series(
            Gen::A,
            SeriesKind::SinhOverZ,
            &ParamPoly::constant(one_plus_rho.clone()),
            n,
        );
        let ab = sinh_1
            .scale(&c1)
            .add(&gen_scaled(Gen::B, &ParamPoly::constant(c2.clone()), n))?;
        let ac = sinh_rho
            .scale(&(-a2.clone()))
            .add(&gen_scaled(
                Gen::C,
                &ParamPoly::constant(-(&rho_rat * &c2)),
                n,
            ))?;
        let partial = with_ab_ac(n, ab.clone(), ac.clone());
        let bc = sinh_sum
            .scale(&(&a2 * &c1 / &c2))
            .add(&sym_cosh(Gen::B, &rho, &partial).scale(&a2))?
            .add(&sym_cosh(Gen::C, &ParamPoly::one(), &partial).scale(&(&rho_rat * &c1)))?;
        let table = CommutatorTable::new(ab, ac, bc)?;
        Ok(CaseBuild {
            rho,
            table,
            r_matrix: None,
            notes: CaseNotes {
                coboundary: CoboundaryLabel::NonCoboundary,
                jacobson: "varies with parameters",
                dual_label: "-",
                description: "generic-rho family with c2 != 0",
            },
        })
    } else {
        if !a2.is_zero() {
            return Err(Error::ParameterConstraint(
                "family-1 with c2 = 0 requires a2 = 0".into(),
            ));
        }
        let a1 = get_or(params, Param::A1, rat(1));
        let sinh_1 = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
        let sinh_scaled = generator_series(
            Gen::A,
            SeriesKind::SinhOverScaledZ,
            &ParamPoly::constant(one_plus_rho),
            n,
        );
        let ab = sinh_1.scale(&c1);
        let partial = with_ab_ac(n, ab.clone(), AlgElement::zero(n));
        let bc = sinh_scaled
            .scale(&a1)
            .add(&sym_cosh(Gen::C, &ParamPoly::one(), &partial).scale(&(&rho_rat * &c1)))?;
        let table = CommutatorTable::new(ab, AlgElement::zero(n), bc)?;
        Ok(CaseBuild {
            rho,
            table,
            r_matrix: None,
            notes: CaseNotes {
                coboundary: CoboundaryLabel::NonCoboundary,
                jacobson: "varies with parameters",
                dual_label: "-",
                description: "generic-rho family with c2 = a2 = 0",
            },
        })
    }
}

fn family_2(params: &BTreeMap<Param, Rat>, n: usize) -> CaseBuild {
    let a1 = get_or(params, Param::A1, rat(1));
    let a2 = get_or(params, Param::A2, rat(0));
    let b2 = get_or(params, Param::B2, rat(0));
    let c1 = get_or(params, Param::C1, rat(0));
    let c2 = get_or(params, Param::C2, rat(1));
    let c3 = get_or(params, Param::C3, rat(0));

    let sinh_1 = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let sinh_2 = generator_series(
        Gen::A,
        SeriesKind::SinhOverScaledZ,
        &ParamPoly::constant(rat(2)),
        n,
    );
    let ab = sinh_1
        .scale(&c1)
        .add(&linear(
            n,
            [
                (Gen::A, ParamPoly::zero()),
                (Gen::B, ParamPoly::constant(c2.clone())),
                (Gen::C, ParamPoly::constant(c3.clone())),
            ],
        ))
        .expect("matching truncation");
    let ac = sinh_1
        .scale(&(-a2.clone()))
        .add(&linear(
            n,
            [
                (Gen::A, ParamPoly::zero()),
                (Gen::B, ParamPoly::constant(b2.clone())),
                (Gen::C, ParamPoly::constant(-c2.clone())),
            ],
        ))
        .expect("matching truncation");
    let partial = with_ab_ac(n, ab.clone(), ac.clone());
    let bc = sinh_2
        .scale(&a1)
        .add(&sym_cosh(Gen::B, &ParamPoly::one(), &partial).scale(&a2))
        .and_then(|e| e.add(&sym_cosh(Gen::C, &ParamPoly::one(), &partial).scale(&c1)))
        .expect("matching truncation");
    let table = CommutatorTable::new(ab, ac, bc).expect("valid table");
    CaseBuild {
        rho: ParamPoly::one(),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "varies with parameters",
            dual_label: "-",
            description: "rho = 1 family (six free structure constants)",
        },
    }
}

fn family_3(params: &BTreeMap<Param, Rat>, n: usize) -> Result<CaseBuild> {
    let c1 = get_or(params, Param::C1, rat(1));
    let c2 = get_or(params, Param::C2, rat(1));
    let b1 = get_or(params, Param::B1, rat(1));
    let a1 = get_or(params, Param::A1, rat(0));
    if !c2.is_zero() && !a1.is_zero() {
        return Err(Error::ParameterConstraint(
            "family-3 requires a1 c2 = 0".into(),
        ));
    }

    let sinh_1 = generator_series(Gen::A, SeriesKind::SinhOverZ, &ParamPoly::one(), n);
    let ab = sinh_1
        .scale(&c1)
        .add(&gen_scaled(Gen::B, &ParamPoly::constant(c2.clone()), n))?;
    let ac = sinh_1
        .scale(&b1)
        .add(&gen_scaled(Gen::C, &ParamPoly::constant(c2.clone()), n))?;
    let partial = with_ab_ac(n, ab.clone(), ac.clone());
    let bc = AlgElement::generator(Gen::A, n)
        .scale(&a1)
        .add(&sym_cosh(Gen::B, &ParamPoly::one(), &partial).scale(&b1))?
        .add(&sym_cosh(Gen::C, &ParamPoly::one(), &partial).scale(&(-c1.clone())))?;
    let table = CommutatorTable::new(ab, ac, bc)?;
    Ok(CaseBuild {
        rho: ParamPoly::constant(rat(-1)),
        table,
        r_matrix: None,
        notes: CaseNotes {
            coboundary: CoboundaryLabel::NonCoboundary,
            jacobson: "varies with parameters",
            dual_label: "-",
            description: "rho = -1 family",
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_case_is_rejected() {
        let err = catalog_table("9.9", &BTreeMap::new(), 4).unwrap_err();
        assert!(matches!(err, Error::UnknownCase(_)));
    }

    #[test]
    fn rho_constraints_enforced() {
        let mut params = BTreeMap::new();
        params.insert(Param::Rho, rat(1));
        assert!(matches!(
            catalog_table("1.1.1", &params, 4),
            Err(Error::ParameterConstraint(_))
        ));
    }

    #[test]
    fn case_3_2_4_table_shape() {
        let case = catalog_table("3.2.4", &BTreeMap::new(), 4).unwrap();
        assert!(case.table.ab().is_zero());
        assert!(case.table.ac().is_zero());
        assert_eq!(
            case.table.bc(),
            &AlgElement::generator(Gen::A, 4)
        );
    }
}
