//! Catalog presets shipped as data files under `presets/` and embedded at
//! build time. Each file is also a test fixture for the acceptance suite.

use crate::definition::RawDefinition;

macro_rules! preset_files {
    ($(($name:literal, $file:literal)),* $(,)?) => {
        /// (preset name, JSON text) pairs in catalog order.
        pub const PRESETS: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../presets/", $file)))),*
        ];
    };
}

preset_files![
    ("1.1.1", "case-1_1_1.json"),
    ("1.2.1", "case-1_2_1.json"),
    ("1.2.2", "case-1_2_2.json"),
    ("2.1.1", "case-2_1_1.json"),
    ("2.1.2", "case-2_1_2.json"),
    ("2.2.1", "case-2_2_1.json"),
    ("2.2.2.1", "case-2_2_2_1.json"),
    ("2.2.2.2", "case-2_2_2_2.json"),
    ("2.2.2.3", "case-2_2_2_3.json"),
    ("2.2.2.4", "case-2_2_2_4.json"),
    ("3.1", "case-3_1.json"),
    ("3.2.1", "case-3_2_1.json"),
    ("3.2.2", "case-3_2_2.json"),
    ("3.2.3", "case-3_2_3.json"),
    ("3.2.4", "case-3_2_4.json"),
    ("3.2.5", "case-3_2_5.json"),
    ("family-1", "family-1.json"),
    ("family-2", "family-2.json"),
    ("family-3", "family-3.json"),
    ("abelian", "abelian.json"),
];

pub fn names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}

pub fn load(name: &str) -> Option<RawDefinition> {
    let (_, text) = PRESETS.iter().find(|(n, _)| *n == name)?;
    Some(serde_json::from_str(text).expect("preset fixtures are valid JSON"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_parse_and_validate() {
        for (name, _) in PRESETS {
            let raw = load(name).unwrap();
            let def = crate::definition::validate(raw).unwrap();
            assert_eq!(&def.name, name);
        }
    }
}
