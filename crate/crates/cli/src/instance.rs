//! Instance files: `{"variables": [...], "generators": [...]}` or
//! `{"variables": [...], "f": "..."}`.

use std::path::Path;
use std::sync::Arc;

use ci_lefschetz::{parse_polynomial, OrderKind, Polynomial, Side, VariableAlphabet};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// A validated, parsed instance.
#[derive(Debug, Clone)]
pub enum Instance {
    CompleteIntersection(Vec<Polynomial>),
    Hypersurface(Polynomial),
}

#[derive(Debug, Clone)]
pub struct LoadedInstance {
    pub file: InstanceFile,
    pub alphabet: Arc<VariableAlphabet>,
    pub instance: Instance,
    pub order: Option<OrderKind>,
}

pub fn load(path: &Path) -> Result<LoadedInstance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: InstanceFile = serde_json::from_str(&text).map_err(CliError::Json)?;
    validate(file)
}

pub fn validate(file: InstanceFile) -> Result<LoadedInstance, CliError> {
    if file.variables.len() < 2 {
        return Err(CliError::Input(format!(
            "TooFewVariables: need at least 2 variables, got {}",
            file.variables.len()
        )));
    }
    let alphabet = Arc::new(
        VariableAlphabet::new(file.variables.iter().cloned(), Side::S)
            .map_err(|e| CliError::Input(e.to_string()))?,
    );
    let order = file
        .order
        .as_deref()
        .map(str::parse::<OrderKind>)
        .transpose()
        .map_err(CliError::Input)?;
    let instance = match (&file.generators, &file.f) {
        (Some(gens), None) => {
            let polys = gens
                .iter()
                .enumerate()
                .map(|(i, text)| {
                    parse_polynomial(text, &alphabet)
                        .map_err(|e| CliError::Input(format!("generator {}: {e}", i + 1)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Instance::CompleteIntersection(polys)
        }
        (None, Some(text)) => Instance::Hypersurface(
            parse_polynomial(text, &alphabet).map_err(|e| CliError::Input(format!("f: {e}")))?,
        ),
        _ => {
            return Err(CliError::Input(
                "instance file needs exactly one of `generators` and `f`".into(),
            ))
        }
    };
    Ok(LoadedInstance {
        file,
        alphabet,
        instance,
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file(json: &str) -> Result<LoadedInstance, CliError> {
        validate(serde_json::from_str(json).unwrap())
    }

    #[test]
    fn accepts_both_modes() {
        let ci =
            file(r#"{"variables":["x1","x2","x3"],"generators":["x1^2","x2^2","x3^2"]}"#).unwrap();
        assert!(matches!(ci.instance, Instance::CompleteIntersection(ref g) if g.len() == 3));
        let h = file(r#"{"variables":["a","b","c"],"f":"a^3+b^3+c^3","order":"lex"}"#).unwrap();
        assert!(matches!(h.instance, Instance::Hypersurface(_)));
        assert_eq!(h.order, Some(OrderKind::Lex));
    }

    #[test]
    fn rejects_bad_files() {
        let both = file(r#"{"variables":["x1","x2"],"generators":["x1^2","x2^2"],"f":"x1^3"}"#);
        assert!(both.unwrap_err().to_string().contains("exactly one"));
        let neither = file(r#"{"variables":["x1","x2"]}"#);
        assert!(neither.is_err());
        let few = file(r#"{"variables":["x1"],"generators":["x1^2"]}"#);
        assert!(few.unwrap_err().to_string().contains("TooFewVariables"));
        let bad = file(r#"{"variables":["x1","x2"],"generators":["x1^2","x3^2"]}"#);
        assert!(bad.unwrap_err().to_string().starts_with("generator 2"));
        assert!(serde_json::from_str::<InstanceFile>(r#"{"variables":[],"extra":1}"#).is_err());
    }
}
