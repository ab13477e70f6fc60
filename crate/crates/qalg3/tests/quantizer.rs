//! Order-by-order quantization: the first-order constraint sets and the
//! reconstruction of the closed-form deformed commutators.

use std::collections::BTreeMap;

use qalg3::catalog::catalog_table;
use qalg3::quantize::{compare_tables, first_order_constraints, quantize, BialgebraSpec};
use qalg3::rational::{rat, ratio, Rat};
use qalg3::{Param, ParamPoly};

fn expected_generic_set() -> Vec<ParamPoly> {
    let v = ParamPoly::var;
    let one = ParamPoly::one();
    let rho = v(Param::Rho);
    let eqs = [
        // b2 (1 - rho)
        v(Param::B2).mul(&one.sub(&rho)),
        // c3 (1 - rho)
        v(Param::C3).mul(&one.sub(&rho)),
        // b1 + rho a2
        v(Param::B1).add(&rho.mul(&v(Param::A2))),
        // a3 - rho c1
        v(Param::A3).sub(&rho.mul(&v(Param::C1))),
        // b3 + rho c2
        v(Param::B3).add(&rho.mul(&v(Param::C2))),
        // (1 - rho) [a2 c1 (1 + rho) - a1 c2]
        one.sub(&rho).mul(
            &v(Param::A2)
                .mul(&v(Param::C1))
                .mul(&one.add(&rho))
                .sub(&v(Param::A1).mul(&v(Param::C2))),
        ),
    ];
    let mut out: Vec<ParamPoly> = eqs.iter().map(ParamPoly::normalized).collect();
    out.sort();
    out
}

#[test]
fn generic_rho_constraint_set_is_exact() {
    let spec = BialgebraSpec::symbolic();
    let set = first_order_constraints(&spec).unwrap();
    assert_eq!(set.equations, expected_generic_set());
}

#[test]
fn rho_plus_one_specialization() {
    let spec = BialgebraSpec::symbolic().with_rho(ParamPoly::one());
    let set = first_order_constraints(&spec).unwrap();
    let v = ParamPoly::var;
    let mut expect: Vec<ParamPoly> = [v(Param::B1).add(&v(Param::A2)),
        v(Param::A3).sub(&v(Param::C1)),
        v(Param::B3).add(&v(Param::C2))]
    .iter()
    .map(ParamPoly::normalized)
    .collect();
    expect.sort();
    assert_eq!(set.equations, expect);
}

#[test]
fn rho_minus_one_specialization() {
    let spec = BialgebraSpec::symbolic().with_rho(ParamPoly::constant(rat(-1)));
    let set = first_order_constraints(&spec).unwrap();
    let v = ParamPoly::var;
    let mut expect: Vec<ParamPoly> = [v(Param::B2),
        v(Param::C3),
        v(Param::B1).sub(&v(Param::A2)),
        v(Param::A3).add(&v(Param::C1)),
        v(Param::B3).sub(&v(Param::C2)),
        v(Param::A1).mul(&v(Param::C2))]
    .iter()
    .map(ParamPoly::normalized)
    .collect();
    expect.sort();
    assert_eq!(set.equations, expect);
}

/// Bindings satisfying the generic-rho branch: b2 = c3 = 0, b1 = -rho a2,
/// a3 = rho c1, b3 = -rho c2, a1 = a2 c1 (1+rho)/c2 (for c2 != 0).
fn family_1_point(rho: i64, c1: (i64, i64), c2: (i64, i64), a2: (i64, i64)) -> BTreeMap<Param, Rat> {
    let rho_r = rat(rho);
    let c1 = ratio(c1.0, c1.1);
    let c2 = ratio(c2.0, c2.1);
    let a2 = ratio(a2.0, a2.1);
    let mut m = BTreeMap::new();
    m.insert(Param::Rho, rho_r.clone());
    m.insert(Param::C1, c1.clone());
    m.insert(Param::C2, c2.clone());
    m.insert(Param::A2, a2.clone());
    m.insert(Param::B1, -(&rho_r * &a2));
    m.insert(Param::A3, &rho_r * &c1);
    m.insert(Param::B3, -(&rho_r * &c2));
    let one_plus = Rat::from_integer(1.into()) + &rho_r;
    m.insert(Param::A1, &a2 * &c1 * one_plus / &c2);
    m
}

#[test]
fn quantize_reproduces_the_simple_algebra_deformation() {
    // rho = 1, c2 = 1, a1 = 1, everything else zero: the quantized brackets
    // must match the sinh(2zA)/(2z) closed form at N=4
    let mut bindings = BTreeMap::new();
    bindings.insert(Param::Rho, rat(1));
    bindings.insert(Param::C2, rat(1));
    bindings.insert(Param::A1, rat(1));
    bindings.insert(Param::B3, rat(-1));
    let spec = BialgebraSpec::concrete(&bindings);
    let result = quantize(&spec, 4).unwrap();

    let mut params = BTreeMap::new();
    params.insert(Param::A1, rat(1));
    params.insert(Param::C2, rat(1));
    let case = catalog_table("family-2", &params, 4).unwrap();
    let diff = compare_tables(&result.table, &case.table).unwrap();
    for d in &diff {
        assert!(d.is_zero(), "difference: {d}");
    }
    assert_eq!(result.solved_orders, vec![2, 4]);
    assert!(result.escalations.is_empty());
    // the case is the normalized simple-algebra deformation
    let norm = catalog_table("2.1.1", &BTreeMap::new(), 4).unwrap();
    let diff = compare_tables(&result.table, &norm.table).unwrap();
    for d in &diff {
        assert!(d.is_zero());
    }
}

#[test]
fn quantize_of_zero_spec_is_abelian_with_primitive_freedom() {
    let spec = BialgebraSpec::concrete(&BTreeMap::new());
    let result = quantize(&spec, 4).unwrap();
    assert!(result.table.ab().is_zero());
    assert!(result.table.ac().is_zero());
    assert!(result.table.bc().is_zero());
    // gauge freedom: the primitive directions stay free at each order
    for (_, dim) in &result.freedom {
        assert!(*dim > 0);
    }
}

#[test]
fn quantize_matches_family_1_closed_form() {
    // rho = 2, c2 = 1, c1 = 1, a2 = 1 and the derived constants
    let bindings = family_1_point(2, (1, 1), (1, 1), (1, 1));
    let spec = BialgebraSpec::concrete(&bindings);
    let result = quantize(&spec, 6).unwrap();

    let case = catalog_table("family-1", &bindings, 6).unwrap();
    let diff = compare_tables(&result.table, &case.table).unwrap();
    for d in &diff {
        assert!(d.is_zero(), "difference: {d}");
    }
    assert_eq!(result.solved_orders, vec![2, 4, 6]);
}

#[test]
fn quantize_rejects_constraint_violations() {
    // c3 != 0 with generic rho violates c3(1-rho) = 0
    let mut bindings = BTreeMap::new();
    bindings.insert(Param::Rho, rat(3));
    bindings.insert(Param::C3, rat(1));
    let spec = BialgebraSpec::concrete(&bindings);
    assert!(matches!(
        quantize(&spec, 4),
        Err(qalg3::Error::ConstraintViolation(_))
    ));
}

#[test]
fn quantize_requires_concrete_constants() {
    let spec = BialgebraSpec::symbolic();
    assert!(matches!(
        quantize(&spec, 4),
        Err(qalg3::Error::SymbolicCoefficient)
    ));
}

#[test]
fn compare_tables_basics() {
    let a = catalog_table("2.2.2.3", &BTreeMap::new(), 4).unwrap();
    let b = catalog_table("3.2.4", &BTreeMap::new(), 4).unwrap();
    // self-comparison is zero
    let diff = compare_tables(&a.table, &a.table).unwrap();
    assert!(diff.iter().all(|d| d.is_zero()));
    // sinh(2zA)/(2z) vs A differ at z^2
    let diff = compare_tables(&a.table, &b.table).unwrap();
    assert_eq!(diff[2].lowest_z_order(), Some(2));
}

#[test]
fn quantize_output_passes_all_hopf_checks_and_recovers_classical_layer() {
    let bindings = family_1_point(3, (1, 1), (2, 1), (1, 2));
    let spec = BialgebraSpec::concrete(&bindings);
    let result = quantize(&spec, 4).unwrap();

    // full Hopf verification of the reconstructed pair
    let report = qalg3::catalog::verify_pair(&result.hopf, &result.table).unwrap();
    assert!(report.all_pass(), "{report:?}");

    // the z^0 layer equals the input classical brackets
    let classical = qalg3::CommutatorTable::classical(&spec.constants, 4);
    for (got, want) in [
        (result.table.ab(), classical.ab()),
        (result.table.ac(), classical.ac()),
        (result.table.bc(), classical.bc()),
    ] {
        assert_eq!(got.z_layer(0), want.z_layer(0));
    }
}

#[test]
fn quantize_at_odd_truncation() {
    // odd N: even orders are solved, the top odd order is verified clean
    let mut bindings = BTreeMap::new();
    bindings.insert(Param::Rho, rat(1));
    bindings.insert(Param::C2, rat(1));
    bindings.insert(Param::A1, rat(1));
    bindings.insert(Param::B3, rat(-1));
    let spec = BialgebraSpec::concrete(&bindings);
    let result = quantize(&spec, 5).unwrap();
    assert_eq!(result.solved_orders, vec![2, 4]);
    let report = qalg3::catalog::verify_pair(&result.hopf, &result.table).unwrap();
    assert!(report.all_pass());
}
