use serde_json::{json, Value};

use tosswait::{BigUint, Count};

use crate::args::Format;
use crate::error::CliError;

/// A command's results in every supported rendering.
#[derive(Debug, Default)]
pub struct Output {
    pub text: String,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
    pub results: Value,
    /// Set when a verification did not hold; the process exits with 2.
    pub failed: bool,
}

impl Output {
    pub fn render(&self, format: Format, command: &str, inputs: Value) -> Result<String, CliError> {
        match format {
            Format::Text => {
                let mut text = self.text.clone();
                if !text.ends_with('\n') {
                    text.push('\n');
                }
                Ok(text)
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer.write_record(&self.csv_header)?;
                for row in &self.csv_rows {
                    writer.write_record(row)?;
                }
                let bytes = writer.into_inner().map_err(|e| e.into_error())?;
                Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
            }
            Format::Json => {
                let doc = json!({
                    "command": command,
                    "inputs": inputs,
                    "results": self.results,
                });
                Ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&doc).expect("valid JSON")
                ))
            }
        }
    }
}

/// Integers above 2^53 become decimal strings so JSON consumers that parse
/// numbers as doubles do not lose digits.
pub fn json_count<C: Count>(value: &C) -> Value {
    json_big(&value.to_big())
}

pub fn json_big(value: &BigUint) -> Value {
    const SAFE: u64 = 1 << 53;
    match u64::try_from(value) {
        Ok(v) if v <= SAFE => json!(v),
        _ => json!(value.to_string()),
    }
}

pub fn json_signed(value: &num_bigint::BigInt) -> Value {
    const SAFE: i64 = 1 << 53;
    match i64::try_from(value) {
        Ok(v) if (-SAFE..=SAFE).contains(&v) => json!(v),
        _ => json!(value.to_string()),
    }
}
