//! Definition files: JSON descriptions of a case to analyze.
//!
//! Rationals travel as strings (`"2/3"`), never as floats, so exactness
//! survives the wire. Unknown fields are rejected.

use std::collections::BTreeMap;

use serde::Deserialize;

use qalg3::rational::{parse_rat, Rat};
use qalg3::Param;

#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct RawDefinition {
    pub name: Option<String>,
    /// Catalog case id to instantiate (e.g. "2.1.1", "family-2").
    pub preset: Option<String>,
    /// Structure constants as exact rational strings.
    #[serde(default)]
    pub constants: BTreeMap<String, String>,
    /// "p/q" or "symbolic".
    pub rho: Option<String>,
    pub truncation: Option<usize>,
    /// Optional override of the coproduct exponential weights.
    pub coproduct: Option<CoproductOverride>,
    /// Optional candidate classical r-matrix.
    pub r_matrix: Option<RMatrixDef>,
    /// Expected classification metadata (used as a fixture by `rmatrix`).
    pub classification: Option<ClassificationDef>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoproductOverride {
    pub weight_b: Option<String>,
    pub weight_c: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDef {
    #[serde(default)]
    pub ab: Option<String>,
    #[serde(default)]
    pub ac: Option<String>,
    #[serde(default)]
    pub bc: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationDef {
    /// "standard", "non-standard" or "non-coboundary".
    pub coboundary: Option<String>,
    pub jacobson: Option<String>,
    pub dual_label: Option<String>,
}

/// A parse-validated definition.
#[derive(Debug, Clone)]
pub struct CaseDefinition {
    pub name: String,
    pub preset: Option<String>,
    pub bindings: BTreeMap<Param, Rat>,
    /// None means: keep rho symbolic.
    pub rho: Option<Rat>,
    pub truncation: usize,
    pub weights: Option<(Option<Rat>, Option<Rat>)>,
    pub r_matrix: Option<qalg3::classical::Bivector>,
    pub classification: Option<ClassificationDef>,
}

#[derive(Debug)]
pub struct DefinitionError(pub String);

impl std::fmt::Display for DefinitionError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DefinitionError {}

fn parse_field_rat(field: &str, s: &str) -> Result<Rat, DefinitionError> {
    parse_rat(s).ok_or_else(|| {
        DefinitionError(format!(
            "field `{field}`: malformed rational `{s}` (expected p or p/q)"
        ))
    })
}

/// Parse a JSON definition; errors carry line/column information from the
/// JSON layer and field names from validation.
pub fn parse_definition(text: &str) -> Result<CaseDefinition, DefinitionError> {
    let raw: RawDefinition = serde_json::from_str(text)
        .map_err(|e| DefinitionError(format!("parse error at line {}, column {}: {e}", e.line(), e.column())))?;
    validate(raw)
}

pub fn validate(raw: RawDefinition) -> Result<CaseDefinition, DefinitionError> {
    let truncation = raw.truncation.unwrap_or(6);
    if truncation < 2 {
        return Err(DefinitionError(format!(
            "field `truncation`: N = {truncation} is below the minimum of 2"
        )));
    }

    let mut bindings = BTreeMap::new();
    for (k, v) in &raw.constants {
        let param: Param = k
            .parse()
            .map_err(|_| DefinitionError(format!("unknown structure constant `{k}`")))?;
        if param == Param::Rho {
            return Err(DefinitionError(
                "field `constants`: set rho via the top-level `rho` field".into(),
            ));
        }
        bindings.insert(param, parse_field_rat(k, v)?);
    }

    let rho = match raw.rho.as_deref() {
        None => None,
        Some("symbolic") => None,
        Some(s) => {
            let r = parse_field_rat("rho", s)?;
            bindings.insert(Param::Rho, r.clone());
            Some(r)
        }
    };

    let weights = match &raw.coproduct {
        None => None,
        Some(c) => {
            let wb = c
                .weight_b
                .as_deref()
                .map(|s| parse_field_rat("coproduct.weight_b", s))
                .transpose()?;
            let wc = c
                .weight_c
                .as_deref()
                .map(|s| parse_field_rat("coproduct.weight_c", s))
                .transpose()?;
            Some((wb, wc))
        }
    };

    let r_matrix = match &raw.r_matrix {
        None => None,
        Some(r) => {
            let g = |field: &str, v: &Option<String>| -> Result<Rat, DefinitionError> {
                v.as_deref()
                    .map(|s| parse_field_rat(field, s))
                    .transpose()
                    .map(|o| o.unwrap_or_else(|| Rat::from_integer(0.into())))
            };
            Some(qalg3::classical::Bivector::new(
                g("r_matrix.ab", &r.ab)?,
                g("r_matrix.ac", &r.ac)?,
                g("r_matrix.bc", &r.bc)?,
            ))
        }
    };

    let name = raw
        .name
        .clone()
        .or_else(|| raw.preset.clone())
        .unwrap_or_else(|| "custom".into());

    Ok(CaseDefinition {
        name,
        preset: raw.preset,
        bindings,
        rho,
        truncation,
        weights,
        r_matrix,
        classification: raw.classification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_preset_reference() {
        let d = parse_definition(r#"{"preset": "2.1.1", "truncation": 6}"#).unwrap();
        assert_eq!(d.preset.as_deref(), Some("2.1.1"));
        assert_eq!(d.truncation, 6);
        assert_eq!(d.name, "2.1.1");
    }

    #[test]
    fn all_zero_constants_at_minimum_truncation() {
        let d = parse_definition(r#"{"name": "abelian", "truncation": 2}"#).unwrap();
        assert!(d.bindings.is_empty());
        assert_eq!(d.truncation, 2);
        assert!(d.rho.is_none());
    }

    #[test]
    fn parses_exact_rationals() {
        let d = parse_definition(
            r#"{"constants": {"c2": "1/3", "a1": "-2"}, "rho": "2", "truncation": 4}"#,
        )
        .unwrap();
        assert_eq!(
            d.bindings.get(&Param::C2).unwrap(),
            &qalg3::rational::ratio(1, 3)
        );
        assert_eq!(d.rho, Some(qalg3::rational::rat(2)));
    }

    #[test]
    fn rejects_bad_input() {
        // malformed rational
        assert!(parse_definition(r#"{"constants": {"c2": "0.5"}}"#)
            .unwrap_err()
            .0
            .contains("c2"));
        // unknown field
        assert!(parse_definition(r#"{"presett": "x"}"#).is_err());
        // unknown constant name
        assert!(parse_definition(r#"{"constants": {"d1": "1"}}"#)
            .unwrap_err()
            .0
            .contains("d1"));
        // truncation too small
        assert!(parse_definition(r#"{"truncation": 1}"#)
            .unwrap_err()
            .0
            .contains("truncation"));
        // malformed JSON reports position
        assert!(parse_definition("{").unwrap_err().0.contains("line"));
    }
}
