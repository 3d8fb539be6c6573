use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::args::Cli;

pub const TOOL: &str = "disc-census";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything that determines a run's output. The worker count and the
/// output path are deliberately absent: they must not change the bytes.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub params: Value,
    pub seed: u64,
    pub budget: u64,
    pub offline: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let tagged = serde_json::to_value(&cli.command).expect("arguments serialize");
        let params = match tagged {
            Value::Object(map) => map.into_iter().next().map(|(_, v)| v).unwrap_or(Value::Null),
            other => other,
        };
        let offline = params.get("offline").and_then(Value::as_bool).unwrap_or(false);
        Self {
            command: cli.command.name().to_string(),
            params,
            seed: cli.common.seed,
            budget: cli.common.budget,
            offline,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "seed": self.seed,
            "budget": self.budget,
            "offline": self.offline,
        })
    }

    /// SHA-256 of the canonical JSON form together with the tool version.
    pub fn hash(&self) -> String {
        let canonical = json!({ "tool": TOOL, "version": VERSION, "config": self.to_json() });
        let digest = Sha256::digest(canonical.to_string().as_bytes());
        format!("{digest:x}")
    }
}
