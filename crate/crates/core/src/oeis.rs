//! Sequence identification against OEIS, online or from a bundled snapshot.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

/// The snapshot shipped with the repository.
pub const BUNDLED_SNAPSHOT: &str = include_str!("../../../data/oeis_snapshot.txt");

pub const DEFAULT_ENDPOINT: &str = "https://oeis.org/search";

/// Fewest terms accepted for a lookup.
pub const MIN_TERMS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeqMatch {
    pub identifier: String,
    pub name: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LookupMode {
    Online,
    Offline,
}

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("need at least {MIN_TERMS} terms, got {0}")]
    TooFewTerms(usize),
    #[error("network: {0}")]
    Network(String),
    #[error("unexpected response: {0}")]
    BadResponse(String),
    #[error("snapshot line {line}: {reason}")]
    BadSnapshot { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnapshotEntry {
    pub identifier: String,
    pub name: String,
    pub terms: Vec<i128>,
}

/// Parse `<identifier>\t<name>\t<t0>,<t1>,...` lines; `#` lines and blank
/// lines are skipped.
pub fn parse_snapshot(text: &str) -> Result<Vec<SnapshotEntry>, OeisError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |reason: &str| OeisError::BadSnapshot { line: i + 1, reason: reason.into() };
        let mut fields = line.split('\t');
        let (Some(id), Some(name), Some(terms), None) =
            (fields.next(), fields.next(), fields.next(), fields.next())
        else {
            return Err(bad("expected three tab-separated fields"));
        };
        let terms = terms
            .split(',')
            .map(|t| t.trim().parse::<i128>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad("bad term"))?;
        out.push(SnapshotEntry { identifier: id.into(), name: name.into(), terms });
    }
    Ok(out)
}

/// Entries whose stored terms start with the query (compared over the
/// shorter of the two lengths), in file order.
pub fn lookup_offline(terms: &[i128], snapshot: &[SnapshotEntry]) -> Vec<SeqMatch> {
    snapshot
        .iter()
        .filter(|e| {
            let k = terms.len().min(e.terms.len());
            k > 0 && terms[..k] == e.terms[..k]
        })
        .map(|e| SeqMatch { identifier: e.identifier.clone(), name: e.name.clone() })
        .collect()
}

/// Extract `(identifier, name)` pairs from an OEIS JSON search response.
/// Accepts both a bare result array and an object with a `results` field
/// (`null` when nothing matched).
pub fn parse_search_response(body: &str) -> Result<Vec<SeqMatch>, OeisError> {
    let v: Value = serde_json::from_str(body).map_err(|e| OeisError::BadResponse(e.to_string()))?;
    let results = match &v {
        Value::Array(items) => items.as_slice(),
        Value::Object(map) => match map.get("results") {
            Some(Value::Array(items)) => items.as_slice(),
            Some(Value::Null) | None => &[],
            Some(_) => return Err(OeisError::BadResponse("results is not an array".into())),
        },
        Value::Null => &[],
        _ => return Err(OeisError::BadResponse("unexpected top-level value".into())),
    };
    results
        .iter()
        .map(|r| {
            let number = r
                .get("number")
                .and_then(Value::as_u64)
                .ok_or_else(|| OeisError::BadResponse("result without a number".into()))?;
            let name = r.get("name").and_then(Value::as_str).unwrap_or_default();
            Ok(SeqMatch { identifier: format!("A{number:06}"), name: name.to_string() })
        })
        .collect()
}

pub fn lookup_online(terms: &[i128], endpoint: &str) -> Result<Vec<SeqMatch>, OeisError> {
    let q = join_terms(terms);
    let resp = ureq::get(endpoint)
        .query("q", &q)
        .query("fmt", "json")
        .timeout(Duration::from_secs(20))
        .call()
        .map_err(|e| OeisError::Network(e.to_string()))?;
    let body = resp.into_string().map_err(|e| OeisError::Network(e.to_string()))?;
    parse_search_response(&body)
}

pub fn join_terms(terms: &[i128]) -> String {
    terms.iter().map(i128::to_string).collect::<Vec<_>>().join(",")
}

/// Look up a sequence. Offline mode uses the bundled snapshot.
pub fn seq_id_lookup(terms: &[i128], mode: LookupMode) -> Result<Vec<SeqMatch>, OeisError> {
    if terms.len() < MIN_TERMS {
        return Err(OeisError::TooFewTerms(terms.len()));
    }
    match mode {
        LookupMode::Online => lookup_online(terms, DEFAULT_ENDPOINT),
        LookupMode::Offline => Ok(lookup_offline(terms, &parse_snapshot(BUNDLED_SNAPSHOT)?)),
    }
}
