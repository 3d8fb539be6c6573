//! Minimal client for number-field records from the LMFDB.

use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::Duration;

use num_bigint::BigInt;
use regex::Regex;
use serde::Serialize;
use serde_json::Value;

use crate::error::{CliError, CliResult};

pub const CACHE_ENV: &str = "DISC_CENSUS_CACHE";
const API: &str = "https://www.lmfdb.org/api/nf_fields/";

const FIXTURES: &[(&str, &str)] = &[(
    "8.0.16777216.2",
    include_str!("../fixtures/lmfdb/8.0.16777216.2.json"),
)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    Network,
    Cache,
    Fixture,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldRecord {
    pub label: String,
    pub degree: u32,
    pub disc_abs: BigInt,
    pub disc_sign: i8,
    pub source: Source,
}

/// Checks `n.r.D.i`: degree, real places, |disc|, index, with
/// `r <= n` and `n - r` even.
pub fn validate_label(label: &str) -> CliResult<()> {
    static RE: OnceLock<Regex> = OnceLock::new();
    let re = RE.get_or_init(|| Regex::new(r"^([1-9][0-9]*)\.([0-9]+)\.([1-9][0-9]*)\.([1-9][0-9]*)$").unwrap());
    let bad = || CliError::Usage(format!("malformed number field label {label:?}"));
    let caps = re.captures(label).ok_or_else(bad)?;
    let n: u64 = caps[1].parse().map_err(|_| bad())?;
    let r: u64 = caps[2].parse().map_err(|_| bad())?;
    if r > n || (n - r) % 2 == 1 {
        return Err(bad());
    }
    Ok(())
}

fn as_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().ok(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Parses an API response body (`{"data": [{...}]}`).
pub fn parse_record(label: &str, body: &str, source: Source) -> CliResult<FieldRecord> {
    let v: Value = serde_json::from_str(body)?;
    let rec = v
        .get("data")
        .and_then(Value::as_array)
        .and_then(|a| a.first())
        .ok_or_else(|| CliError::NotFound(format!("no number field with label {label}")))?;
    let malformed = |field: &str| CliError::NotFound(format!("record for {label} lacks {field}"));
    let degree = rec.get("degree").and_then(Value::as_u64).ok_or_else(|| malformed("degree"))? as u32;
    let disc_abs = rec.get("disc_abs").and_then(as_bigint).ok_or_else(|| malformed("disc_abs"))?;
    let disc_sign = rec.get("disc_sign").and_then(Value::as_i64).ok_or_else(|| malformed("disc_sign"))? as i8;
    Ok(FieldRecord {
        label: label.to_string(),
        degree,
        disc_abs,
        disc_sign,
        source,
    })
}

fn cache_path(dir: &Path, label: &str) -> PathBuf {
    dir.join("lmfdb").join(format!("{label}.json"))
}

fn fetch(label: &str) -> CliResult<String> {
    let client = reqwest::blocking::Client::builder()
        .timeout(Duration::from_secs(20))
        .user_agent(concat!("disc-census/", env!("CARGO_PKG_VERSION")))
        .build()
        .map_err(|e| CliError::Network(e.to_string()))?;
    let resp = client
        .get(API)
        .query(&[("label", label), ("_format", "json")])
        .send()
        .map_err(|e| CliError::Network(e.to_string()))?;
    if !resp.status().is_success() {
        return Err(CliError::Network(format!("LMFDB answered {}", resp.status())));
    }
    resp.text().map_err(|e| CliError::Network(e.to_string()))
}

/// Looks up `label`. Offline mode reads the cache directory, then the bundled
/// fixtures. Online responses are written to the cache when one is configured.
pub fn lookup(label: &str, offline: bool, cache_dir: Option<&Path>) -> CliResult<FieldRecord> {
    validate_label(label)?;
    if offline {
        if let Some(dir) = cache_dir {
            if let Ok(body) = std::fs::read_to_string(cache_path(dir, label)) {
                return parse_record(label, &body, Source::Cache);
            }
        }
        let (_, body) = FIXTURES
            .iter()
            .find(|(l, _)| *l == label)
            .ok_or_else(|| CliError::FixtureMissing(format!("no cached record or fixture for {label}")))?;
        return parse_record(label, body, Source::Fixture);
    }
    let body = fetch(label)?;
    let record = parse_record(label, &body, Source::Network)?;
    if let Some(dir) = cache_dir {
        let path = cache_path(dir, label);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(path, &body)?;
    }
    Ok(record)
}

pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from)
}
