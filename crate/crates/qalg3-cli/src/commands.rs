//! Command implementations. Each returns a report document; the process
//! exit code is 0 when every requested check came out as expected, 1 on a
//! check failure and 2 on input errors.

use std::collections::BTreeMap;

use qalg3::catalog::{catalog_table, verify_pair, CatalogCase, CoboundaryLabel, CASE_IDS, FAMILY_IDS};
use qalg3::classical::{
    coboundary_solve, cocycle_check, jacobson_type, schouten_classify, Bivector,
    CoboundaryOutcome, CocommutatorData, LieAlgebra3, SchoutenClass,
};
use qalg3::hopf::{extract_cocommutator, HopfData};
use qalg3::quantize::{compare_tables, first_order_constraints, quantize, BialgebraSpec};
use qalg3::rational::{fmt_rat, Rat};
use qalg3::transform::{apply_transformation, TransformSpec};
use qalg3::{CommutatorTable, Param, ParamPoly};

use crate::definition::CaseDefinition;
use crate::report::ReportDocument;

pub struct CommandError {
    pub message: String,
    /// true: bad input (exit 2); false: computation failure (exit 1)
    pub input: bool,
}

impl CommandError {
    fn input(msg: impl Into<String>) -> Self {
        CommandError {
            message: msg.into(),
            input: true,
        }
    }

    fn run(msg: impl Into<String>) -> Self {
        CommandError {
            message: msg.into(),
            input: false,
        }
    }
}

fn engine_err(e: qalg3::Error) -> CommandError {
    match e {
        qalg3::Error::UnknownCase(_)
        | qalg3::Error::UnknownParameter(_)
        | qalg3::Error::ParameterConstraint(_)
        | qalg3::Error::Invalid(_)
        | qalg3::Error::SymbolicCoefficient => CommandError::input(e.to_string()),
        other => CommandError::run(other.to_string()),
    }
}

/// Resolve the definition to a verified-ready (table, hopf) pair.
///
/// Presets come from the catalog; custom definitions are quantized from
/// their classical constants.
pub fn resolve_case(
    def: &CaseDefinition,
) -> Result<(CommutatorTable, HopfData, Option<CatalogCase>, ReportDocument), CommandError> {
    let mut doc = ReportDocument::new("resolve", &def.name, def.truncation);
    if let Some(preset) = &def.preset {
        let case =
            catalog_table(preset, &def.bindings, def.truncation).map_err(engine_err)?;
        let hopf = override_weights(&case.hopf, def, &case.rho)?;
        doc.push("source", "catalog");
        Ok((case.table.clone(), hopf, Some(case), doc))
    } else {
        let spec = BialgebraSpec::concrete(&def.bindings);
        let result = quantize(&spec, def.truncation).map_err(engine_err)?;
        doc.push("source", "quantized");
        doc.push(
            "quantize.orders",
            result
                .solved_orders
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(","),
        );
        let hopf = override_weights(&result.hopf, def, &spec.rho)?;
        Ok((result.table, hopf, None, doc))
    }
}

fn override_weights(
    base: &HopfData,
    def: &CaseDefinition,
    rho: &ParamPoly,
) -> Result<HopfData, CommandError> {
    match &def.weights {
        None => Ok(base.clone()),
        Some((wb, wc)) => {
            let wb = wb
                .clone()
                .map(ParamPoly::constant)
                .unwrap_or_else(ParamPoly::one);
            let wc = wc
                .clone()
                .map(ParamPoly::constant)
                .unwrap_or_else(|| rho.clone());
            Ok(HopfData::canonical_weights(&wb, &wc, base.truncation_order()))
        }
    }
}

fn hopf_report(doc: &mut ReportDocument, h: &HopfData, t: &CommutatorTable) -> Result<(), CommandError> {
    let report = verify_pair(h, t).map_err(engine_err)?;
    let gens = ["A", "B", "C"];
    let pairs = ["AB", "AC", "BC"];
    for (i, g) in gens.iter().enumerate() {
        doc.push_check(
            &format!("check.coassociativity.{g}"),
            report.coassociativity[i].is_none(),
            report.coassociativity[i],
        );
    }
    for (i, p) in pairs.iter().enumerate() {
        doc.push_check(
            &format!("check.homomorphism.{p}"),
            report.homomorphism[i].is_none(),
            report.homomorphism[i],
        );
    }
    for (i, g) in gens.iter().enumerate() {
        doc.push_check(
            &format!("check.counit.{g}"),
            report.counit[i].is_none(),
            report.counit[i],
        );
    }
    for (i, g) in gens.iter().enumerate() {
        doc.push_check(&format!("check.sigma_tilde.{g}"), report.sigma_tilde[i], None);
    }
    doc.push_check("check.antipode", report.antipode_ok, None);
    doc.push_check("check.jacobi", report.jacobi_order.is_none(), report.jacobi_order);
    doc.push_check("check.evenness", report.entries_even, None);
    Ok(())
}

pub fn cmd_verify(def: &CaseDefinition) -> Result<ReportDocument, CommandError> {
    let (table, hopf, _case, resolve) = resolve_case(def)?;
    let mut doc = ReportDocument::new("verify", &def.name, def.truncation);
    doc.merge_section("resolve", &resolve);
    hopf_report(&mut doc, &hopf, &table)?;
    Ok(doc)
}

pub fn cmd_quantize(def: &CaseDefinition) -> Result<ReportDocument, CommandError> {
    let mut doc = ReportDocument::new("quantize", &def.name, def.truncation);

    // When a preset is named, the classical data comes from the z^0 layer
    // of the catalog table (the preset's free parameters pin the dependent
    // constants). A preset left at symbolic rho only derives constraints.
    let bindings = match &def.preset {
        Some(preset) => {
            let case =
                catalog_table(preset, &def.bindings, def.truncation).map_err(engine_err)?;
            if case.params.contains_key(&Param::Rho) {
                let g = LieAlgebra3::classical_limit(&case.table, &def.bindings)
                    .map_err(engine_err)?;
                let mut b = classical_bindings(&g);
                b.insert(Param::Rho, case.params[&Param::Rho].clone());
                b
            } else {
                BTreeMap::new()
            }
        }
        None => def.bindings.clone(),
    };

    // the symbolic constraint set at this rho, reported for reference
    let concrete_rho = bindings.contains_key(&Param::Rho);
    let symbolic = match bindings.get(&Param::Rho) {
        Some(r) => BialgebraSpec::symbolic().with_rho(ParamPoly::constant(r.clone())),
        None => BialgebraSpec::symbolic(),
    };
    let constraints = first_order_constraints(&symbolic).map_err(engine_err)?;
    doc.push("constraints.count", constraints.equations.len().to_string());
    for (i, eq) in constraints.equations.iter().enumerate() {
        doc.push(&format!("constraints.{i}"), eq.to_string());
    }

    if !concrete_rho {
        doc.note("rho is symbolic: constraint derivation only, no integration");
        return Ok(doc);
    }

    let spec = BialgebraSpec::concrete(&bindings);
    let result = quantize(&spec, def.truncation).map_err(engine_err)?;
    doc.push(
        "quantize.orders",
        result
            .solved_orders
            .iter()
            .map(|o| o.to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    for (order, dim) in &result.freedom {
        doc.push(&format!("quantize.freedom.z{order}"), dim.to_string());
    }
    doc.push(
        "quantize.escalations",
        if result.escalations.is_empty() {
            "-".to_string()
        } else {
            result
                .escalations
                .iter()
                .map(|(o, b)| format!("z{o}:deg{b}"))
                .collect::<Vec<_>>()
                .join(",")
        },
    );
    for (label, entry) in [
        ("AB", result.table.ab()),
        ("AC", result.table.ac()),
        ("BC", result.table.bc()),
    ] {
        doc.push(&format!("table.{label}"), entry.to_string());
    }

    // compare against the catalog closed form when a preset is named
    if let Some(preset) = &def.preset {
        let case = catalog_table(preset, &def.bindings, def.truncation).map_err(engine_err)?;
        let diff = compare_tables(&result.table, &case.table).map_err(engine_err)?;
        let zero = diff.iter().all(|d| d.is_zero());
        doc.push_check(
            "check.matches_catalog",
            zero,
            diff.iter().filter_map(|d| d.lowest_z_order()).min(),
        );
    }
    Ok(doc)
}

/// Structure-constant bindings of a classical bracket set.
fn classical_bindings(g: &LieAlgebra3) -> BTreeMap<Param, Rat> {
    let mut b = BTreeMap::new();
    for (params, vec) in [
        ([Param::C1, Param::C2, Param::C3], &g.ab),
        ([Param::B1, Param::B2, Param::B3], &g.ac),
        ([Param::A1, Param::A2, Param::A3], &g.bc),
    ] {
        for (p, v) in params.iter().zip(vec.iter()) {
            b.insert(*p, v.clone());
        }
    }
    b
}

fn classical_data(
    def: &CaseDefinition,
) -> Result<(LieAlgebra3, CocommutatorData, Option<CatalogCase>), CommandError> {
    if let Some(preset) = &def.preset {
        let case = catalog_table(preset, &def.bindings, def.truncation).map_err(engine_err)?;
        let g = LieAlgebra3::classical_limit(&case.table, &def.bindings).map_err(|e| {
            CommandError::input(format!(
                "{e}; bind rho with --params rho=p/q for classification"
            ))
        })?;
        let eta = extract_cocommutator(&case.hopf);
        let mut merged = case.params.clone();
        for (k, v) in &def.bindings {
            merged.insert(*k, v.clone());
        }
        let eta = CocommutatorData {
            images: eta.bind(&merged).map_err(|e| {
                CommandError::input(format!(
                    "{e}; bind rho with --params rho=p/q for classification"
                ))
            })?,
        };
        Ok((g, eta, Some(case)))
    } else {
        let rho = def
            .rho
            .clone()
            .ok_or_else(|| CommandError::input("classification needs a concrete rho"))?;
        let spec = BialgebraSpec::concrete(&def.bindings);
        let table = CommutatorTable::classical(&spec.constants, 0);
        let g = LieAlgebra3::classical_limit(&table, &BTreeMap::new()).map_err(engine_err)?;
        Ok((g, CocommutatorData::canonical(&rho), None))
    }
}

pub fn cmd_classify(def: &CaseDefinition) -> Result<ReportDocument, CommandError> {
    let (g, eta, case) = classical_data(def)?;
    let mut doc = ReportDocument::new("classify", &def.name, def.truncation);

    doc.push("jacobson", jacobson_type(&g).to_string());
    let cocycle = cocycle_check(&g, &eta);
    doc.push_check("check.cocycle", cocycle.is_zero(), None);

    match coboundary_solve(&g, &eta) {
        CoboundaryOutcome::Solution { r, freedom } => {
            doc.push("coboundary", "feasible");
            doc.push("coboundary.r", r.to_string());
            doc.push("coboundary.freedom", freedom.to_string());
        }
        CoboundaryOutcome::Infeasible { .. } => {
            doc.push("coboundary", "infeasible");
        }
    }
    if let Some(case) = case {
        doc.push("catalog.label", case.notes.coboundary.to_string());
        doc.push("catalog.jacobson", case.notes.jacobson);
        doc.push("catalog.dual_label", case.notes.dual_label);
    }
    Ok(doc)
}

pub fn cmd_rmatrix(def: &CaseDefinition) -> Result<ReportDocument, CommandError> {
    let (g, eta, case) = classical_data(def)?;
    let mut doc = ReportDocument::new("rmatrix", &def.name, def.truncation);

    let candidate: Option<Bivector> = def
        .r_matrix
        .clone()
        .or_else(|| case.as_ref().and_then(|c| c.r_matrix.clone()));

    let expected = case.as_ref().map(|c| c.notes.coboundary);
    match candidate {
        Some(r) => {
            let (class, tri) = schouten_classify(&r, &g);
            doc.push("r", r.to_string());
            doc.push("schouten.class", class.to_string());
            doc.push("schouten.trivector", fmt_rat(&tri.abc));
            if let Some(expect) = expected {
                let ok = matches!(
                    (expect, &class),
                    (CoboundaryLabel::Standard, SchoutenClass::McybeInvariant)
                        | (CoboundaryLabel::NonStandard, SchoutenClass::CybeZero)
                );
                doc.push_check("check.matches_catalog_label", ok, None);
            }
        }
        None => {
            doc.push("r", "-");
            // the catalog says non-coboundary: expected-infeasible is a pass
            let feasible = coboundary_solve(&g, &eta).is_feasible();
            doc.push(
                "coboundary",
                if feasible { "feasible" } else { "infeasible" },
            );
            if let Some(CoboundaryLabel::NonCoboundary) = expected {
                doc.push_check("check.expected_infeasible", !feasible, None);
            }
        }
    }
    Ok(doc)
}

pub fn cmd_transform(
    def: &CaseDefinition,
    spec_params: &BTreeMap<String, String>,
) -> Result<ReportDocument, CommandError> {
    let (table, hopf, _case, resolve) = resolve_case(def)?;
    let mut doc = ReportDocument::new("transform", &def.name, def.truncation);
    doc.merge_section("resolve", &resolve);

    let get = |key: &str, default: Rat| -> Result<Rat, CommandError> {
        match spec_params.get(key) {
            None => Ok(default),
            Some(s) => qalg3::rational::parse_rat(s)
                .ok_or_else(|| CommandError::input(format!("bad rational for `{key}`: {s}"))),
        }
    };
    let one = Rat::from_integer(1.into());
    let zero = Rat::from_integer(0.into());
    let spec = TransformSpec {
        alpha: get("alpha", one.clone())?,
        beta: get("beta", one.clone())?,
        gamma_c: get("gamma", zero.clone())?,
        delta: get("delta", zero.clone())?,
        mu: get("mu", zero.clone())?,
        nu: get("nu", one)?,
        eta_c: get("eta", zero)?,
    };
    for (k, v) in [
        ("alpha", &spec.alpha),
        ("beta", &spec.beta),
        ("gamma", &spec.gamma_c),
        ("delta", &spec.delta),
        ("mu", &spec.mu),
        ("nu", &spec.nu),
        ("eta", &spec.eta_c),
    ] {
        doc.push(&format!("spec.{k}"), fmt_rat(v));
    }

    let (new_table, _new_hopf) = apply_transformation(&table, &hopf, &spec).map_err(engine_err)?;
    doc.push_check("check.coproduct_invariance", true, None);
    for (label, entry) in [
        ("AB", new_table.ab()),
        ("AC", new_table.ac()),
        ("BC", new_table.bc()),
    ] {
        doc.push(&format!("table.{label}"), entry.to_string());
    }

    if let Some(expect_id) = spec_params.get("expect") {
        let target = catalog_table(expect_id, &def.bindings, def.truncation).map_err(engine_err)?;
        let diff = compare_tables(&new_table, &target.table).map_err(engine_err)?;
        let zero = diff.iter().all(|d| d.is_zero());
        doc.push_check(
            "check.matches_expected_case",
            zero,
            diff.iter().filter_map(|d| d.lowest_z_order()).min(),
        );
    }
    Ok(doc)
}

pub fn cmd_catalog(preset: Option<&str>, order: usize) -> Result<ReportDocument, CommandError> {
    let mut doc = ReportDocument::new("catalog", preset.unwrap_or("all"), order);
    match preset {
        None => {
            for id in CASE_IDS.iter().chain(FAMILY_IDS.iter()) {
                doc.push("preset", *id);
            }
        }
        Some(id) => {
            let mut params = BTreeMap::new();
            if id.starts_with("1.") {
                params.insert(Param::Rho, qalg3::rational::rat(2));
                doc.note("generic-rho case shown at the sample point rho=2");
            }
            let case = catalog_table(id, &params, order).map_err(engine_err)?;
            doc.push("description", case.notes.description);
            doc.push("coboundary", case.notes.coboundary.to_string());
            doc.push("jacobson", case.notes.jacobson);
            doc.push("dual_label", case.notes.dual_label);
            match &case.r_matrix {
                Some(r) => doc.push("r_matrix", r.to_string()),
                None => doc.push("r_matrix", "-"),
            }
            for (label, entry) in [
                ("AB", case.table.ab()),
                ("AC", case.table.ac()),
                ("BC", case.table.bc()),
            ] {
                doc.push(&format!("table.{label}"), entry.to_string());
            }
        }
    }
    Ok(doc)
}

/// Verify a batch of presets, optionally across threads; reports are merged
/// in preset-name order so output is deterministic regardless of `jobs`.
pub fn cmd_verify_all(defs: Vec<CaseDefinition>, jobs: usize) -> Result<ReportDocument, CommandError> {
    let order = defs.first().map(|d| d.truncation).unwrap_or(6);
    let mut doc = ReportDocument::new("verify-batch", "all", order);
    let jobs = jobs.max(1);

    let mut results: Vec<(String, Result<ReportDocument, String>)> = Vec::new();
    if jobs == 1 {
        for def in &defs {
            let r = cmd_verify(def).map_err(|e| e.message);
            results.push((def.name.clone(), r));
        }
    } else {
        let chunks: Vec<Vec<CaseDefinition>> = defs
            .chunks(defs.len().div_ceil(jobs))
            .map(|c| c.to_vec())
            .collect();
        let mut handles = Vec::new();
        for chunk in chunks {
            handles.push(std::thread::spawn(move || {
                chunk
                    .iter()
                    .map(|def| (def.name.clone(), cmd_verify(def).map_err(|e| e.message)))
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            results.extend(h.join().expect("verify worker panicked"));
        }
    }
    results.sort_by(|a, b| a.0.cmp(&b.0));

    for (name, r) in results {
        match r {
            Ok(sub) => {
                let verdict = sub.verdict();
                doc.push_check(
                    &format!("preset.{name}"),
                    verdict == crate::report::Verdict::Pass,
                    None,
                );
            }
            Err(msg) => {
                doc.push(&format!("preset.{name}"), format!("error: {msg}"));
                doc.fail();
            }
        }
    }
    Ok(doc)
}
