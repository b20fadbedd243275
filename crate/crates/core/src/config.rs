//! Layered configuration: defaults, then a JSON file, then `key=value`
//! overrides. Keys are checked against the defaults' shape so typos fail
//! with the closest known key as a suggestion.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Closest candidate by normalized Damerau-Levenshtein similarity, if any
/// is reasonably close.
pub fn suggest<'a>(key: &str, candidates: impl IntoIterator<Item = &'a str>) -> Option<&'a str> {
    candidates
        .into_iter()
        .map(|c| (strsim::normalized_damerau_levenshtein(key, c), c))
        .filter(|(s, _)| *s >= 0.5)
        .max_by(|a, b| a.0.total_cmp(&b.0))
        .map(|(_, c)| c)
}

fn unknown_key(path: &str, key: &str, known: &Map<String, Value>) -> Error {
    let full = if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match suggest(key, known.keys().map(String::as_str)) {
        Some(s) => Error::Config(format!("unknown key `{full}` (did you mean `{s}`?)")),
        None => Error::Config(format!("unknown key `{full}`")),
    }
}

/// Rejects keys of `value` that `template` does not have, recursing into
/// objects present on both sides.
pub fn check_keys(value: &Value, template: &Value) -> Result<()> {
    fn walk(v: &Value, t: &Value, path: &str) -> Result<()> {
        if let (Value::Object(vo), Value::Object(to)) = (v, t) {
            for (k, sub) in vo {
                let tsub = to.get(k).ok_or_else(|| unknown_key(path, k, to))?;
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(sub, tsub, &p)?;
            }
        }
        Ok(())
    }
    walk(value, template, "")
}

/// Deep merge: objects merge key by key, anything else replaces.
pub fn merge(base: &mut Value, overlay: Value) {
    match (base, overlay) {
        (Value::Object(b), Value::Object(o)) => {
            for (k, v) in o {
                match b.get_mut(&k) {
                    Some(slot) => merge(slot, v),
                    None => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (slot, v) => *slot = v,
    }
}

/// Parses `a.b.c=value` into a nested object. The value is read as JSON
/// when it parses, otherwise as a plain string.
pub fn parse_override(spec: &str) -> Result<Value> {
    let (path, raw) =
        spec.split_once('=').ok_or_else(|| Error::Config(format!("override `{spec}` is not of the form key=value")))?;
    if path.is_empty() || path.split('.').any(str::is_empty) {
        return Err(Error::Config(format!("override `{spec}` has an empty key")));
    }
    let mut v = serde_json::from_str(raw).unwrap_or_else(|_| Value::String(raw.to_string()));
    for key in path.rsplit('.') {
        let mut m = Map::new();
        m.insert(key.to_string(), v);
        v = Value::Object(m);
    }
    Ok(v)
}

/// Defaults, then `file` (JSON), then each layer of `overrides` in order.
pub fn layered<C: Serialize + DeserializeOwned + Default>(file: Option<&Path>, overrides: &[Value]) -> Result<C> {
    let template = serde_json::to_value(C::default()).map_err(|e| Error::Config(e.to_string()))?;
    let mut value = template.clone();
    if let Some(path) = file {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        check_keys(&v, &template)?;
        merge(&mut value, v);
    }
    for o in overrides {
        check_keys(o, &template)?;
        merge(&mut value, o.clone());
    }
    serde_json::from_value(value).map_err(|e| Error::Config(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde::Deserialize;

    #[derive(Debug, Default, PartialEq, Serialize, Deserialize)]
    #[serde(deny_unknown_fields, default)]
    struct Inner {
        learning_rate: f64,
        epochs: usize,
    }

    #[derive(Debug, Default, PartialEq, Serialize, Deserialize)]
    #[serde(deny_unknown_fields, default)]
    struct Outer {
        mode: String,
        optimizer: Inner,
    }

    #[test]
    fn layers_apply_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let f = dir.path().join("c.json");
        std::fs::write(&f, r#"{"mode": "a", "optimizer": {"epochs": 3}}"#).unwrap();
        let o = parse_override("optimizer.learning_rate=0.5").unwrap();
        let m = parse_override("mode=b").unwrap();
        let c: Outer = layered(Some(&f), &[o, m]).unwrap();
        assert_eq!(c, Outer { mode: "b".into(), optimizer: Inner { learning_rate: 0.5, epochs: 3 } });
    }

    #[test]
    fn typo_gets_suggestion() {
        let o = parse_override("optimiser.epochs=2").unwrap();
        let err = layered::<Outer>(None, &[o]).unwrap_err().to_string();
        assert!(err.contains("did you mean `optimizer`"), "{err}");
        let o = parse_override("optimizer.learnig_rate=2").unwrap();
        let err = layered::<Outer>(None, &[o]).unwrap_err().to_string();
        assert!(err.contains("`optimizer.learnig_rate`") && err.contains("`learning_rate`"), "{err}");
    }

    #[test]
    fn malformed_overrides() {
        assert!(parse_override("novalue").is_err());
        assert!(parse_override("a..b=1").is_err());
        assert_eq!(parse_override("a=x y").unwrap()["a"], Value::String("x y".into()));
    }
}
