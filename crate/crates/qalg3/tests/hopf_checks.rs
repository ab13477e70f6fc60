//! Hopf-layer verification: coproduct extension, coassociativity, the
//! homomorphism property, counit, generalized cocommutativity, cocommutator
//! extraction and the antipode, including deliberately broken inputs.

use std::collections::BTreeMap;

use qalg3::algebra::{generator_series, SeriesKind};
use qalg3::catalog::catalog_table;
use qalg3::hopf::{
    antipode_axiom_residual, check_coassociativity, check_counit, check_homomorphism,
    check_sigma_tilde, coproduct_extend, extract_cocommutator, solve_antipode, HopfData,
    TensorElement,
};
use qalg3::rational::{rat, ratio};
use qalg3::{AlgElement, CommutatorTable, Gen, Monomial, Param, ParamPoly, ZSeries};

fn abelian(n: usize) -> CommutatorTable {
    CommutatorTable::abelian(n)
}

#[test]
fn coproduct_of_identity_and_powers() {
    let n = 3;
    let t = abelian(n);
    let h = HopfData::primitive(n);

    // Δ(1) = 1 ⊗ 1
    let one = coproduct_extend(&AlgElement::one(n), &h, &t).unwrap();
    assert_eq!(one, TensorElement::one(n));

    // Δ(A^2) = A^2⊗1 + 2A⊗A + 1⊗A^2 for primitive A
    let a2 = coproduct_extend(&AlgElement::monomial(Monomial::new(2, 0, 0), n), &h, &t).unwrap();
    let mut expect = TensorElement::zero(n);
    let a = Monomial::gen(Gen::A);
    let aa = Monomial::new(2, 0, 0);
    expect.add_series((aa, Monomial::ONE), ZSeries::one(n));
    expect.add_series((a, a), ZSeries::one(n).scale(&rat(2)));
    expect.add_series((Monomial::ONE, aa), ZSeries::one(n));
    assert_eq!(a2, expect);
}

#[test]
fn canonical_coproduct_truncates_exponentials() {
    // Δ(B) at N=2: (1 + zA + z^2A^2/2)⊗B + B⊗(1 - zA + z^2A^2/2)
    let h = HopfData::canonical(&ParamPoly::var(Param::Rho), 2);
    let d = h.delta(Gen::B);
    let b = Monomial::gen(Gen::B);
    let mut expect = TensorElement::zero(2);
    expect.add_series((Monomial::ONE, b), ZSeries::one(2));
    expect.add_series(
        (Monomial::new(1, 0, 0), b),
        ZSeries::monomial(ParamPoly::one(), 1, 2),
    );
    expect.add_series(
        (Monomial::new(2, 0, 0), b),
        ZSeries::monomial(ParamPoly::constant(ratio(1, 2)), 2, 2),
    );
    expect.add_series((b, Monomial::ONE), ZSeries::one(2));
    expect.add_series(
        (b, Monomial::new(1, 0, 0)),
        ZSeries::monomial(ParamPoly::constant(rat(-1)), 1, 2),
    );
    expect.add_series(
        (b, Monomial::new(2, 0, 0)),
        ZSeries::monomial(ParamPoly::constant(ratio(1, 2)), 2, 2),
    );
    assert!(d.sub(&expect).unwrap().is_zero());
}

#[test]
fn coassociativity_of_canonical_family() {
    // symbolic rho, deformed table: zero residuals at N=4
    let case = catalog_table("1.2.1", &BTreeMap::new(), 4).unwrap();
    let res = check_coassociativity(&case.hopf, &case.table).unwrap();
    for r in &res {
        assert!(r.is_zero());
    }

    // primitive coproduct over the abelian table
    let h = HopfData::primitive(3);
    let res = check_coassociativity(&h, &abelian(3)).unwrap();
    for r in &res {
        assert!(r.is_zero());
    }
}

#[test]
fn coassociativity_detects_missing_completion() {
    // Keeping only the first-order skew term without its exponential
    // completion, Δ(B) = 1⊗B + B⊗1 + z(A⊗B - B⊗A), satisfies the z^1
    // co-Leibniz identity but fails coassociativity at z^2.
    let n = 3;
    let mut bad_b = TensorElement::zero(n);
    let b = Monomial::gen(Gen::B);
    let a = Monomial::gen(Gen::A);
    bad_b.add_series((Monomial::ONE, b), ZSeries::one(n));
    bad_b.add_series((b, Monomial::ONE), ZSeries::one(n));
    bad_b.add_series((a, b), ZSeries::monomial(ParamPoly::one(), 1, n));
    bad_b.add_series((b, a), ZSeries::monomial(ParamPoly::constant(rat(-1)), 1, n));
    let h = HopfData::from_parts(
        HopfData::primitive(n).delta(Gen::A).clone(),
        bad_b,
        HopfData::primitive(n).delta(Gen::C).clone(),
        [rat(0), rat(0), rat(0)],
    )
    .unwrap();
    let res = check_coassociativity(&h, &abelian(n)).unwrap();
    assert_eq!(res[Gen::B.index()].lowest_z_order(), Some(2));
}

#[test]
fn sign_sabotaged_exponential_is_caught_by_sigma_tilde_not_coassociativity() {
    // Δ(B) = e^{zA}⊗B + B⊗e^{+zA}: both iterated coproducts equal
    // e⊗e⊗B + e⊗B⊗e + B⊗e⊗e, so coassociativity holds identically;
    // the defect is the loss of generalized cocommutativity.
    let n = 4;
    let mut bad_b = TensorElement::zero(n);
    let b = Monomial::gen(Gen::B);
    for k in 0..=n {
        let c = ParamPoly::constant(qalg3::rational::inv_factorial(k));
        let ak = Monomial::new(k as u32, 0, 0);
        bad_b.add_series((ak, b), ZSeries::monomial(c.clone(), k, n));
        bad_b.add_series((b, ak), ZSeries::monomial(c, k, n));
    }
    let h = HopfData::from_parts(
        HopfData::primitive(n).delta(Gen::A).clone(),
        bad_b,
        HopfData::primitive(n).delta(Gen::C).clone(),
        [rat(0), rat(0), rat(0)],
    )
    .unwrap();
    let res = check_coassociativity(&h, &abelian(n)).unwrap();
    assert!(res[Gen::B.index()].is_zero());
    let sigma = check_sigma_tilde(&h).unwrap();
    assert!(!sigma[Gen::B.index()].0);
    assert_eq!(sigma[Gen::B.index()].1.lowest_z_order(), Some(1));
}

#[test]
fn homomorphism_zero_for_catalog_and_nonzero_for_wrong_rho() {
    // deformed simple algebra at N=6
    let case = catalog_table("2.1.1", &BTreeMap::new(), 6).unwrap();
    let res = check_homomorphism(&case.hopf, &case.table).unwrap();
    for r in &res {
        assert!(r.is_zero());
    }

    // abelian + primitive
    let res = check_homomorphism(&HopfData::primitive(3), &abelian(3)).unwrap();
    for r in &res {
        assert!(r.is_zero());
    }

    // case 1.1.1 table with the wrong weight in Δ(C): since [A,C] is an
    // ad_A eigenvector the (A,C) pair stays blind, but the (B,C) pair shows
    // the weight mismatch at z^1 — the first-order constraint reappearing
    let rho = rat(2);
    let mut params = BTreeMap::new();
    params.insert(Param::Rho, rho);
    let case = catalog_table("1.1.1", &params, 4).unwrap();
    let wrong = HopfData::canonical_weights(
        &ParamPoly::one(),
        &ParamPoly::constant(rat(5)), // should be rho = 2
        4,
    );
    let res = check_homomorphism(&wrong, &case.table).unwrap();
    assert!(res[1].is_zero());
    assert_eq!(res[2].lowest_z_order(), Some(1));
}

#[test]
fn sigma_tilde_invariance() {
    let case = catalog_table("1.2.2", &BTreeMap::new(), 5).unwrap();
    for (ok, _) in check_sigma_tilde(&case.hopf).unwrap() {
        assert!(ok);
    }

    // primitive coproducts are z-free and cocommutative
    for (ok, _) in check_sigma_tilde(&HopfData::primitive(3)).unwrap() {
        assert!(ok);
    }

    // Δ(B)=e^{zA}⊗B + B⊗e^{zA} breaks the invariance at order 1
    let n = 3;
    let mut bad_b = TensorElement::zero(n);
    let b = Monomial::gen(Gen::B);
    for k in 0..=n {
        let c = ParamPoly::constant(qalg3::rational::inv_factorial(k));
        let ak = Monomial::new(k as u32, 0, 0);
        bad_b.add_series((ak, b), ZSeries::monomial(c.clone(), k, n));
        bad_b.add_series((b, ak), ZSeries::monomial(c, k, n));
    }
    let h = HopfData::from_parts(
        HopfData::primitive(n).delta(Gen::A).clone(),
        bad_b,
        HopfData::primitive(n).delta(Gen::C).clone(),
        [rat(0), rat(0), rat(0)],
    )
    .unwrap();
    let res = check_sigma_tilde(&h).unwrap();
    assert!(!res[1].0);
    assert_eq!(res[1].1.lowest_z_order(), Some(1));
}

#[test]
fn cocommutator_extraction() {
    // η(A)=0, η(B)=z A∧B, η(C)=rho z A∧C
    let h = HopfData::canonical(&ParamPoly::var(Param::Rho), 4);
    let eta = extract_cocommutator(&h);
    assert!(eta.image(Gen::A).iter().all(ParamPoly::is_zero));
    assert_eq!(eta.image(Gen::B)[0], ParamPoly::one());
    assert!(eta.image(Gen::B)[1].is_zero() && eta.image(Gen::B)[2].is_zero());
    assert_eq!(eta.image(Gen::C)[1], ParamPoly::var(Param::Rho));

    // primitive: all zero
    assert!(extract_cocommutator(&HopfData::primitive(4)).is_zero());

    // doubling the z scale doubles the cocommutator
    let h2 = HopfData::canonical_weights(&ParamPoly::constant(rat(2)), &ParamPoly::zero(), 4);
    let eta2 = extract_cocommutator(&h2);
    assert_eq!(eta2.image(Gen::B)[0], ParamPoly::constant(rat(2)));
}

#[test]
fn counit_axiom_and_sabotage() {
    let case = catalog_table("2.2.1", &BTreeMap::new(), 4).unwrap();
    for (left, right) in check_counit(&case.hopf).unwrap() {
        assert!(left.is_zero() && right.is_zero());
    }

    for (left, right) in check_counit(&HopfData::primitive(3)).unwrap() {
        assert!(left.is_zero() && right.is_zero());
    }

    // redefining ε(A) = 1 breaks the axiom
    let h = HopfData::primitive(3).with_counit([rat(1), rat(0), rat(0)]);
    let res = check_counit(&h).unwrap();
    assert!(!res[0].0.is_zero());
}

#[test]
fn antipode_solves_and_matches_adjoint_oracle() {
    // abelian with canonical coproducts: conjugation is trivial, γ(B) = -B
    let mut params = BTreeMap::new();
    params.insert(Param::Rho, rat(2));
    let h = HopfData::canonical(&ParamPoly::constant(rat(2)), 4);
    let t = abelian(4);
    let gamma = solve_antipode(&h, &t).unwrap();
    assert_eq!(gamma[1], AlgElement::generator(Gen::B, 4).negate());

    // case 1.1.1: γ(B) must equal -e^{-zA} B e^{zA} (adjoint series oracle)
    let case = catalog_table("1.1.1", &params, 4).unwrap();
    let gamma = solve_antipode(&case.hopf, &case.table).unwrap();
    assert_eq!(gamma[0], AlgElement::generator(Gen::A, 4).negate());
    let exp_minus = generator_series(Gen::A, SeriesKind::Exp, &ParamPoly::constant(rat(-1)), 4);
    let exp_plus = generator_series(Gen::A, SeriesKind::Exp, &ParamPoly::one(), 4);
    let b = AlgElement::generator(Gen::B, 4);
    let oracle = case
        .table
        .multiply(&case.table.multiply(&exp_minus, &b).unwrap(), &exp_plus)
        .unwrap()
        .negate();
    assert_eq!(gamma[1], oracle);

    // explicit truncation at N=2: γ(B) = -B + zB - z^2 B/2
    let case2 = catalog_table("1.1.1", &params, 2).unwrap();
    let gamma2 = solve_antipode(&case2.hopf, &case2.table).unwrap();
    let mut expect = AlgElement::zero(2);
    expect.add_series(
        Monomial::gen(Gen::B),
        ZSeries::from_coeffs(
            vec![
                ParamPoly::constant(rat(-1)),
                ParamPoly::one(),
                ParamPoly::constant(ratio(-1, 2)),
            ],
            2,
        ),
    );
    assert_eq!(gamma2[1], expect);
}

#[test]
fn antipode_axiom_holds_on_products() {
    let case = catalog_table("2.1.1", &BTreeMap::new(), 4).unwrap();
    let gamma = solve_antipode(&case.hopf, &case.table).unwrap();
    for m in [
        Monomial::new(1, 1, 0),
        Monomial::new(0, 1, 1),
        Monomial::new(2, 0, 1),
        Monomial::new(1, 1, 1),
    ] {
        let x = AlgElement::monomial(m, 4);
        let res = antipode_axiom_residual(&gamma, &x, &case.hopf, &case.table).unwrap();
        assert!(res.is_zero(), "axiom fails on {m}");
    }
}

#[test]
fn homomorphism_property_on_random_products() {
    // Δ(xy) = Δ(x)Δ(y) for the homomorphic extension
    let case = catalog_table("2.2.1", &BTreeMap::new(), 4).unwrap();
    let t = &case.table;
    let h = &case.hopf;
    let elems = [
        AlgElement::monomial(Monomial::new(1, 1, 0), 4),
        AlgElement::monomial(Monomial::new(0, 0, 2), 4).scale(&ratio(1, 3)),
        AlgElement::generator(Gen::C, 4),
    ];
    for x in &elems {
        for y in &elems {
            let xy = t.multiply(x, y).unwrap();
            let lhs = coproduct_extend(&xy, h, t).unwrap();
            let rhs = coproduct_extend(x, h, t)
                .unwrap()
                .mul(&coproduct_extend(y, h, t).unwrap(), t)
                .unwrap();
            assert!(lhs.sub(&rhs).unwrap().is_zero());
        }
    }
}

#[test]
fn full_verification_of_one_symbolic_case() {
    // case 1.2.2 with symbolic rho: every check passes at N=4
    let case = catalog_table("1.2.2", &BTreeMap::new(), 4).unwrap();
    let report = case.verify().unwrap();
    assert!(report.all_pass(), "{report:?}");
}

#[test]
fn antipode_reports_failing_order_for_broken_coproduct() {
    // Δ(B) = 1⊗B + B⊗1 + z A⊗B: the left axiom solves order by order but
    // the mirror axiom fails at z^2, which is reported
    let n = 4;
    let mut bad_b = TensorElement::zero(n);
    let b = Monomial::gen(Gen::B);
    bad_b.add_series((Monomial::ONE, b), ZSeries::one(n));
    bad_b.add_series((b, Monomial::ONE), ZSeries::one(n));
    bad_b.add_series(
        (Monomial::gen(Gen::A), b),
        ZSeries::monomial(ParamPoly::one(), 1, n),
    );
    let h = HopfData::from_parts(
        HopfData::primitive(n).delta(Gen::A).clone(),
        bad_b,
        HopfData::primitive(n).delta(Gen::C).clone(),
        [rat(0), rat(0), rat(0)],
    )
    .unwrap();
    match solve_antipode(&h, &abelian(n)) {
        Err(qalg3::Error::AntipodeUnsolvable { order }) => assert_eq!(order, 2),
        other => panic!("expected antipode failure, got {other:?}"),
    }
}

#[test]
fn hom_residual_reproduces_first_order_constraint_shape() {
    // symbolic table + canonical coproduct: the z^1 layer of the (A,C)
    // residual carries b2(1-rho) on A⊗B - B⊗A
    let spec = qalg3::quantize::BialgebraSpec::symbolic();
    let table = CommutatorTable::classical(&spec.constants, 1);
    let h = HopfData::canonical(&spec.rho, 1);
    let res = check_homomorphism(&h, &table).unwrap();
    let layer = res[1].z_layer(1);
    let key = (Monomial::gen(Gen::A), Monomial::gen(Gen::B));
    let got = layer.get(&key).unwrap().normalized();
    let b2 = ParamPoly::var(Param::B2);
    let expect = b2.sub(&b2.mul(&ParamPoly::var(Param::Rho))).normalized();
    assert_eq!(got, expect);
}

#[test]
fn cocommutator_layers_are_pure_bivectors() {
    // the z^1 skew layer of each catalog coproduct is exactly the wedge
    // reconstruction of the extracted cocommutator: skew, linear in the
    // generators, nothing else
    for id in ["1.1.1", "2.2.1", "3.2.1", "1.2.2"] {
        let case = catalog_table(id, &BTreeMap::new(), 4).unwrap();
        let eta = extract_cocommutator(&case.hopf);
        for g in qalg3::Gen::ALL {
            let layer = case.hopf.delta(g).z_layer(1);
            // skew part of the layer
            let mut skew: BTreeMap<(Monomial, Monomial), ParamPoly> = BTreeMap::new();
            for ((m1, m2), c) in &layer {
                let half = c.scale(&ratio(1, 2));
                let e = skew.entry((*m1, *m2)).or_insert_with(ParamPoly::zero);
                *e = e.add(&half);
                let e = skew.entry((*m2, *m1)).or_insert_with(ParamPoly::zero);
                *e = e.sub(&half);
            }
            skew.retain(|_, c| !c.is_zero());
            // wedge reconstruction from the extracted coefficients
            let wedges = [
                (Monomial::gen(Gen::A), Monomial::gen(Gen::B)),
                (Monomial::gen(Gen::A), Monomial::gen(Gen::C)),
                (Monomial::gen(Gen::B), Monomial::gen(Gen::C)),
            ];
            let mut expect: BTreeMap<(Monomial, Monomial), ParamPoly> = BTreeMap::new();
            for (p, (x, y)) in wedges.iter().enumerate() {
                let c = &eta.image(g)[p];
                if c.is_zero() {
                    continue;
                }
                let e = expect.entry((*x, *y)).or_insert_with(ParamPoly::zero);
                *e = e.add(c);
                let e = expect.entry((*y, *x)).or_insert_with(ParamPoly::zero);
                *e = e.sub(c);
            }
            expect.retain(|_, c| !c.is_zero());
            assert_eq!(skew, expect, "{id} generator {g:?}");
        }
    }
}
