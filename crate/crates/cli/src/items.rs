//! Items files: a boolean item × predicate matrix as CSV or JSON.
//!
//! CSV has a header `id,<pred1>,<pred2>,...` and one row per item; cells are
//! `0`, `1`, `true` or `false` (any case). JSON is an array of objects, each
//! with an `"id"` and one boolean (or 0/1) field per predicate; predicate
//! order follows the first object.

use std::fs;
use std::path::Path;

use diairesis_core::PredicateTable;
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ItemsError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed items file: {0}")]
    Malformed(String),
}

fn malformed(msg: impl Into<String>) -> ItemsError {
    ItemsError::Malformed(msg.into())
}

fn parse_cell(cell: &str) -> Option<bool> {
    match cell.trim().to_ascii_lowercase().as_str() {
        "1" | "true" => Some(true),
        "0" | "false" => Some(false),
        _ => None,
    }
}

fn build(
    ids: Vec<String>,
    predicates: Vec<String>,
    rows: Vec<Vec<bool>>,
) -> Result<PredicateTable, ItemsError> {
    if predicates.is_empty() {
        return Err(malformed("at least one predicate column is required"));
    }
    PredicateTable::new(ids, predicates, rows).map_err(|e| malformed(e.to_string()))
}

pub fn parse_csv(text: &str) -> Result<PredicateTable, ItemsError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| malformed(e.to_string()))?
        .clone();
    match header.get(0) {
        Some("id") => {}
        other => {
            return Err(malformed(format!(
                "first header column must be \"id\", found {other:?}"
            )))
        }
    }
    let predicates: Vec<String> = header.iter().skip(1).map(str::to_string).collect();

    let mut ids = Vec::new();
    let mut rows = Vec::new();
    for (n, record) in reader.records().enumerate() {
        let record = record.map_err(|e| malformed(e.to_string()))?;
        let line = n + 2;
        let id = record.get(0).unwrap_or_default().to_string();
        let row = record
            .iter()
            .skip(1)
            .map(|cell| {
                parse_cell(cell).ok_or_else(|| {
                    malformed(format!("line {line}: cell {cell:?} is not 0/1/true/false"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        ids.push(id);
        rows.push(row);
    }
    build(ids, predicates, rows)
}

pub fn parse_json(text: &str) -> Result<PredicateTable, ItemsError> {
    let value: Value = serde_json::from_str(text).map_err(|e| malformed(e.to_string()))?;
    let Value::Array(objects) = value else {
        return Err(malformed("expected a JSON array of objects"));
    };

    let mut predicates: Option<Vec<String>> = None;
    let mut ids = Vec::with_capacity(objects.len());
    let mut rows = Vec::with_capacity(objects.len());
    for (n, obj) in objects.iter().enumerate() {
        let Value::Object(fields) = obj else {
            return Err(malformed(format!("entry {n} is not an object")));
        };
        let id = match fields.get("id") {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Number(num)) => num.to_string(),
            _ => {
                return Err(malformed(format!(
                    "entry {n} has no string or number \"id\""
                )))
            }
        };
        let names = predicates
            .get_or_insert_with(|| fields.keys().filter(|k| *k != "id").cloned().collect());
        if fields.len() != names.len() + 1 {
            return Err(malformed(format!(
                "entry {n} ({id}) has a different set of fields"
            )));
        }
        let row = names
            .iter()
            .map(|p| match fields.get(p) {
                Some(Value::Bool(b)) => Ok(*b),
                Some(Value::Number(num)) if num.as_u64() == Some(0) => Ok(false),
                Some(Value::Number(num)) if num.as_u64() == Some(1) => Ok(true),
                Some(Value::String(s)) => {
                    parse_cell(s).ok_or_else(|| malformed(format!("entry {n} ({id}): {p} = {s:?}")))
                }
                Some(other) => Err(malformed(format!("entry {n} ({id}): {p} = {other}"))),
                None => Err(malformed(format!("entry {n} ({id}) lacks predicate {p:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        ids.push(id);
        rows.push(row);
    }
    build(ids, predicates.unwrap_or_default(), rows)
}

/// Reads `path` as JSON when `json` is set or the extension is `.json`,
/// otherwise as CSV.
pub fn load(path: &Path, json: bool) -> Result<PredicateTable, ItemsError> {
    let text = fs::read_to_string(path).map_err(|source| ItemsError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let is_json = json
        || path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    if is_json {
        parse_json(&text)
    } else {
        parse_csv(&text)
    }
}
