//! JSON forms of explicit conditions and activations.
//!
//! Condition: `{"colors": k, "sizes": {"3": [[c0, ..., c(k-1)], ...]}}`
//! lists the allowed count vectors for each multiset size.
//! Activation: `["1", "3/2", ...]`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::activation::parse_rational;
use super::{Activation, ColorMultiset, ColoringCondition};
use crate::error::{Error, Result};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConditionFile {
    colors: usize,
    #[serde(default)]
    sizes: BTreeMap<String, Vec<Vec<u32>>>,
}

pub fn parse_condition_json(text: &str) -> Result<ColoringCondition> {
    let file: ConditionFile = serde_json::from_str(text)?;
    let mut entries = Vec::new();
    for (size_key, vectors) in file.sizes {
        let size: usize = size_key
            .trim()
            .parse()
            .map_err(|_| Error::Condition(format!("size key {size_key:?} is not an integer")))?;
        for counts in vectors {
            if counts.len() != file.colors {
                return Err(Error::Condition(format!(
                    "count vector {counts:?} has {} entries, expected {}",
                    counts.len(),
                    file.colors
                )));
            }
            let m = ColorMultiset::new(counts);
            if m.size() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    actual: m.size(),
                });
            }
            entries.push(m);
        }
    }
    ColoringCondition::explicit(file.colors, entries)
}

pub fn load_condition(path: &Path) -> Result<ColoringCondition> {
    parse_condition_json(&std::fs::read_to_string(path)?)
}

pub fn load_activation(path: &Path) -> Result<Activation> {
    let items: Vec<String> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    Activation::new(items.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::legal_function_count;
    use num_bigint::BigUint;
    use std::io::Write;

    #[test]
    fn explicit_dominating_matches_builtin() {
        // size-3 multisets over {0,1} with at least one 1
        let json = r#"{"colors": 2, "sizes": {"3": [[2,1],[1,2],[0,3]]}}"#;
        let cond = parse_condition_json(json).unwrap();
        assert_eq!(legal_function_count(3, &cond), BigUint::from(7u32));
        assert_eq!(legal_function_count(2, &cond), BigUint::from(0u32));
    }

    #[test]
    fn rejects_inconsistent_files() {
        assert!(parse_condition_json(r#"{"colors": 2, "sizes": {"3": [[1,1]]}}"#).is_err());
        assert!(parse_condition_json(r#"{"colors": 2, "sizes": {"2": [[1,1,0]]}}"#).is_err());
        assert!(parse_condition_json(r#"{"colors": 2, "sizes": {"x": [[1,1]]}}"#).is_err());
        assert!(parse_condition_json(r#"{"colours": 2}"#).is_err());
        let empty = parse_condition_json(r#"{"colors": 3}"#).unwrap();
        assert_eq!(legal_function_count(0, &empty), BigUint::from(0u32));
    }

    #[test]
    fn loads_files() {
        let dir = tempfile::tempdir().unwrap();
        let cpath = dir.path().join("cond.json");
        std::fs::File::create(&cpath)
            .unwrap()
            .write_all(br#"{"colors": 2, "sizes": {"1": [[0,1]]}}"#)
            .unwrap();
        let cond = ColoringCondition::parse_spec(&format!("file:{}", cpath.display()), 0).unwrap();
        assert_eq!(cond.k(), 2);

        let apath = dir.path().join("lambda.json");
        std::fs::write(&apath, r#"["1", "5/2"]"#).unwrap();
        assert_eq!(load_activation(&apath).unwrap().to_string(), "1,5/2");
        std::fs::write(&apath, r#"["1", "-1"]"#).unwrap();
        assert!(load_activation(&apath).is_err());
    }
}
