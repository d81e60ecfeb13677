//! Built-in instance catalog.
//!
//! The instances ship as JSON data files under `catalog/` and are embedded
//! verbatim at build time. `HOPF_FORGE_CATALOG_DIR` overrides the lookup
//! directory at run time; explicit paths always win over catalog names.

use crate::instance::InstanceSpec;
use crate::EngineError;
use std::path::Path;

pub const CATALOG: &[(&str, &str)] = &[
    ("c2_f2", include_str!("../../../catalog/c2_f2.json")),
    ("c3_f3", include_str!("../../../catalog/c3_f3.json")),
    ("s3_q", include_str!("../../../catalog/s3_q.json")),
    ("sweedler_f5", include_str!("../../../catalog/sweedler_f5.json")),
    ("sweedler_q", include_str!("../../../catalog/sweedler_q.json")),
    ("monoid_1z_f2", include_str!("../../../catalog/monoid_1z_f2.json")),
    ("exterior_f3", include_str!("../../../catalog/exterior_f3.json")),
    ("z4_set", include_str!("../../../catalog/z4_set.json")),
    ("monoid_1z_set", include_str!("../../../catalog/monoid_1z_set.json")),
];

pub const CATALOG_DIR_ENV: &str = "HOPF_FORGE_CATALOG_DIR";

pub fn names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

/// Raw text of a built-in catalog entry.
pub fn raw(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Loads an instance: an existing file path, then `$HOPF_FORGE_CATALOG_DIR/
/// <name>.json`, then the embedded catalog. Returns the display name and
/// the parsed spec.
pub fn load(name_or_path: &str) -> Result<(String, InstanceSpec), EngineError> {
    let p = Path::new(name_or_path);
    if p.is_file() {
        let text = std::fs::read_to_string(p)
            .map_err(|e| EngineError::Parse(format!("cannot read {name_or_path}: {e}")))?;
        let name = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| {
            name_or_path.to_string()
        });
        return Ok((name, InstanceSpec::parse(&text)?));
    }
    if let Ok(dir) = std::env::var(CATALOG_DIR_ENV) {
        let candidate = Path::new(&dir).join(format!("{name_or_path}.json"));
        if candidate.is_file() {
            let text = std::fs::read_to_string(&candidate).map_err(|e| {
                EngineError::Parse(format!("cannot read {}: {e}", candidate.display()))
            })?;
            return Ok((name_or_path.to_string(), InstanceSpec::parse(&text)?));
        }
    }
    if let Some(text) = raw(name_or_path) {
        return Ok((name_or_path.to_string(), InstanceSpec::parse(text)?));
    }
    Err(EngineError::Parse(format!(
        "no such file, and {name_or_path:?} is not a catalog entry (known: {})",
        names().join(", ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_entries_parse_and_are_canonical() {
        for (name, text) in CATALOG {
            let spec = InstanceSpec::parse(text)
                .unwrap_or_else(|e| panic!("catalog entry {name}: {e}"));
            assert_eq!(&spec.emit(), text, "catalog entry {name} is not in canonical form");
        }
    }

    #[test]
    fn load_resolves_names_and_paths() {
        let (name, spec) = load("c2_f2").unwrap();
        assert_eq!(name, "c2_f2");
        assert_eq!(spec.backend().base(), 2);
        assert!(load("no_such_instance").is_err());

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("custom.json");
        std::fs::write(&path, raw("z4_set").unwrap()).unwrap();
        let (name, spec) = load(path.to_str().unwrap()).unwrap();
        assert_eq!(name, "custom");
        assert_eq!(spec.backend().base(), 4);
    }
}
