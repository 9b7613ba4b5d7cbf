//! Instance files: a UTF-8 JSON array of
//! `{"name": ..., "p": "<expr>", "q": "<expr>", "bound": N?, "mode": "filtered"|"exhaustive"?}`.

use std::collections::HashSet;

use serde::Deserialize;
use thiserror::Error;

use super::parser::{parse_poly, ParseError};
use crate::polyring::Poly;
use crate::solver::SearchMode;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("instance file is not a JSON array: {0}")]
    NotArray(String),
    #[error("record index {index}: {message}")]
    Record { index: usize, message: String },
    #[error("record index {index}: field `{field}`: {source}")]
    Expression {
        index: usize,
        field: &'static str,
        source: ParseError,
    },
    #[error("record index {index}: duplicate instance name {name:?}")]
    DuplicateName { index: usize, name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ModeField {
    Filtered,
    Exhaustive,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    name: String,
    p: String,
    q: String,
    bound: Option<u64>,
    mode: Option<ModeField>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub p_source: String,
    pub q_source: String,
    pub p: Poly,
    pub q: Poly,
    pub bound: Option<u64>,
    pub mode: Option<SearchMode>,
}

pub fn parse_instance_file(text: &str) -> Result<Vec<Instance>, InstanceError> {
    let values: Vec<serde_json::Value> =
        serde_json::from_str(text).map_err(|e| InstanceError::NotArray(e.to_string()))?;
    let mut seen = HashSet::new();
    let mut instances = Vec::with_capacity(values.len());
    for (index, value) in values.into_iter().enumerate() {
        let record: Record = serde_json::from_value(value).map_err(|e| InstanceError::Record {
            index,
            message: e.to_string(),
        })?;
        if !seen.insert(record.name.clone()) {
            return Err(InstanceError::DuplicateName { index, name: record.name });
        }
        let p = parse_poly(&record.p).map_err(|source| InstanceError::Expression { index, field: "p", source })?;
        let q = parse_poly(&record.q).map_err(|source| InstanceError::Expression { index, field: "q", source })?;
        instances.push(Instance {
            name: record.name,
            p_source: record.p,
            q_source: record.q,
            p,
            q,
            bound: record.bound,
            mode: record.mode.map(|m| match m {
                ModeField::Filtered => SearchMode::Filtered,
                ModeField::Exhaustive => SearchMode::Exhaustive,
            }),
        });
    }
    Ok(instances)
}
