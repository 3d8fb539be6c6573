use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::config::{RunConfig, TOOL, VERSION};
use crate::error::CliResult;

/// Big integers travel as decimal strings.
pub fn big(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

fn sink(out: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match out {
        Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    })
}

/// The single-object JSON report written for every non-tabular command.
pub fn report(config: &RunConfig, result: Value) -> Value {
    json!({
        "tool": TOOL,
        "version": VERSION,
        "command": config.command,
        "config_hash": config.hash(),
        "config": config.to_json(),
        "result": result,
    })
}

pub fn write_json(out: Option<&Path>, config: &RunConfig, result: Value) -> CliResult<()> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, &report(config, result))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// CSV with a leading comment line carrying the config hash.
pub fn write_csv(out: Option<&Path>, config: &RunConfig, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let mut w = sink(out)?;
    writeln!(
        w,
        "# {TOOL} {VERSION} command={} config_hash={}",
        config.command,
        config.hash()
    )?;
    {
        let mut csv = csv::Writer::from_writer(&mut w);
        csv.write_record(header)?;
        for row in rows {
            csv.write_record(row)?;
        }
        csv.flush()?;
    }
    w.flush()?;
    Ok(())
}
