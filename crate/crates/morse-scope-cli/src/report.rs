//! Report plumbing: deterministic headers plus CSV or JSON bodies.
//!
//! Every report opens with comment lines carrying the toolkit version, the
//! exact command configuration, the seed, and a timestamp. Identical
//! configuration and seed reproduce the report byte for byte except for the
//! timestamp line.

use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

pub struct Report {
    pub command: String,
    pub config: Vec<(String, String)>,
    pub seed: Option<u64>,
    /// False when any capped search was cut short; drives exit code 2.
    pub exhaustive: bool,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            config: Vec::new(),
            seed: None,
            exhaustive: true,
        }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.config.push((key.to_string(), value.to_string()));
        self
    }

    pub fn header_lines(&self) -> Vec<String> {
        let mut lines = vec![
            format!("# morse-scope {}", env!("CARGO_PKG_VERSION")),
            format!("# command: {}", self.command),
        ];
        for (k, v) in &self.config {
            lines.push(format!("# {k}: {v}"));
        }
        if let Some(seed) = self.seed {
            lines.push(format!("# seed: {seed}"));
        }
        lines.push(format!("# exhaustive: {}", self.exhaustive));
        let stamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        lines.push(format!("# generated_at: {stamp}"));
        lines
    }

    /// Writes header comments followed by a CSV body (header row + records).
    pub fn write_csv<W: Write>(
        &self,
        mut out: W,
        columns: &[&str],
        rows: &[Vec<String>],
    ) -> std::io::Result<()> {
        for line in self.header_lines() {
            writeln!(out, "{line}")?;
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(columns)?;
        for row in rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    /// Writes the structured-text object `{config, results, flags}`.
    pub fn write_json<W: Write>(
        &self,
        mut out: W,
        results: serde_json::Value,
    ) -> std::io::Result<()> {
        let stamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let mut config = serde_json::Map::new();
        config.insert(
            "version".to_string(),
            serde_json::Value::String(env!("CARGO_PKG_VERSION").to_string()),
        );
        config.insert(
            "command".to_string(),
            serde_json::Value::String(self.command.clone()),
        );
        for (k, v) in &self.config {
            config.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        if let Some(seed) = self.seed {
            config.insert("seed".to_string(), serde_json::json!(seed));
        }
        config.insert("generated_at".to_string(), serde_json::json!(stamp));
        let object = serde_json::json!({
            "config": serde_json::Value::Object(config),
            "results": results,
            "flags": { "exhaustive": self.exhaustive },
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&object)?)?;
        Ok(())
    }
}
