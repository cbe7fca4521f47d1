use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

/// The JSON shape of every command's output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Value,
    pub version: String,
}

/// Everything a command produced, ready for any output format.
pub struct Report {
    pub command: &'static str,
    pub inputs: Vec<(&'static str, String)>,
    pub result: Value,
    pub text: String,
    /// CSV rows, header first.
    pub table: Vec<Vec<String>>,
    pub dot: Option<String>,
    /// Set when the command ran but a check it performs failed.
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Vec::new(),
            result: Value::Null,
            text: String::new(),
            table: Vec::new(),
            dot: None,
            failure: None,
        }
    }

    pub fn input(mut self, key: &'static str, value: impl ToString) -> Self {
        self.inputs.push((key, value.to_string()));
        self
    }

    pub fn record(&self) -> Record {
        Record {
            command: self.command.to_string(),
            inputs: self.inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            result: self.result.clone(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Text => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.record()).expect("record serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.table {
                    w.write_record(row).map_err(|e| CliError::Io(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
                Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
            }
            Format::Dot => self
                .dot
                .clone()
                .ok_or_else(|| CliError::Usage(format!("--format dot is not available for `{}`", self.command))),
        }
    }
}

pub fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

pub fn string_array<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

/// Space-separated rows, one per line.
pub fn matrix_text<R, T>(rows: impl IntoIterator<Item = R>) -> String
where
    R: IntoIterator<Item = T>,
    T: ToString,
{
    let mut out = String::new();
    for row in rows {
        let cells = strings(row);
        writeln!(out, "{}", cells.join(" ")).expect("write to string");
    }
    out
}
