use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::Value;

use dual_complex::snc::RawConfiguration;
use dual_complex::{DeltaComplex, RawComplex, SncConfiguration};

use crate::report::CliError;

pub fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn parse<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::parse(path, e))
}

pub fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    text
}

pub fn config(path: &Path) -> Result<SncConfiguration, CliError> {
    let raw: RawConfiguration = parse(path)?;
    SncConfiguration::from_raw(&raw).map_err(|e| CliError::validation(Some(path), e))
}

/// A complex file, or the dual complex of a configuration file.
pub fn complex(path: &Path) -> Result<DeltaComplex, CliError> {
    let value: Value = parse(path)?;
    if value.get("component_meta").is_some() {
        return config(path).map(|c| c.dual().clone());
    }
    let raw: RawComplex = serde_json::from_value(value).map_err(|e| CliError::parse(path, e))?;
    DeltaComplex::from_raw(&raw).map_err(|e| CliError::validation(Some(path), e))
}

/// Splits a comma-separated id list; an empty string is the empty list.
pub fn id_list(text: &str) -> Vec<String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_owned)
        .collect()
}
