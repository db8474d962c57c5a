//! Output records and the three emitters. Every number is written as a
//! decimal string.

use std::io::Write;

use domb_core::qseries::IdentityReport;
use domb_core::verifier::{CongruenceReport, CongruenceTask, TaskFailure};
use domb_core::{DombSpec, Sequence, SequenceValue};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Sequence,
    Congruence,
    Qcheck,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputRecord {
    pub schema_version: &'static str,
    pub kind: Kind,
    pub payload: Map<String, Value>,
}

fn text(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn opt(x: Option<impl ToString>) -> Value {
    x.map(text).unwrap_or(Value::Null)
}

fn spec_fields(payload: &mut Map<String, Value>, spec: Option<DombSpec>) {
    payload.insert("A".into(), opt(spec.map(|s| s.a())));
    payload.insert("B".into(), opt(spec.map(|s| s.b())));
    payload.insert("C".into(), opt(spec.map(|s| s.c())));
}

impl OutputRecord {
    fn new(kind: Kind, payload: Map<String, Value>) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            kind,
            payload,
        }
    }

    pub fn sequence(sequence: Sequence, value: &SequenceValue) -> Self {
        let mut payload = Map::new();
        payload.insert("sequence".into(), text(sequence.name()));
        let spec = match sequence {
            Sequence::Apery => None,
            Sequence::Domb => Some(DombSpec::DOMB),
            Sequence::Generalized(spec) => Some(spec),
        };
        spec_fields(&mut payload, spec);
        payload.insert("index".into(), text(value.index));
        payload.insert("value".into(), text(&value.value));
        Self::new(Kind::Sequence, payload)
    }

    fn task_fields(task: &CongruenceTask) -> Map<String, Value> {
        let mut payload = Map::new();
        payload.insert("claim".into(), text(task.claim));
        payload.insert("p".into(), text(task.p));
        payload.insert("m".into(), opt(task.m));
        payload.insert("n".into(), opt(task.n));
        payload.insert("r".into(), opt(task.r));
        payload.insert("s".into(), opt(task.s));
        payload.insert("j".into(), opt(task.j));
        spec_fields(&mut payload, task.spec);
        payload
    }

    pub fn congruence(outcome: &Result<CongruenceReport, TaskFailure>) -> Self {
        let payload = match outcome {
            Ok(report) => {
                let mut payload = Self::task_fields(&report.task);
                payload.insert("holds".into(), Value::Bool(report.holds));
                payload.insert(
                    "difference_valuation".into(),
                    text(report.difference_valuation),
                );
                payload.insert("required_valuation".into(), text(report.required_valuation));
                payload.insert(
                    "elapsed_milliseconds".into(),
                    text(format!("{:.3}", report.elapsed_milliseconds)),
                );
                payload.insert("detail".into(), opt(report.detail.as_ref()));
                payload.insert("error".into(), Value::Null);
                payload
            }
            Err(failure) => {
                let mut payload = Self::task_fields(&failure.task);
                payload.insert("holds".into(), Value::Bool(false));
                for key in [
                    "difference_valuation",
                    "required_valuation",
                    "elapsed_milliseconds",
                    "detail",
                ] {
                    payload.insert(key.into(), Value::Null);
                }
                payload.insert("error".into(), text(&failure.error));
                payload
            }
        };
        Self::new(Kind::Congruence, payload)
    }

    pub fn identity(report: &IdentityReport, emit_coefficients: bool) -> Self {
        let mut payload = Map::new();
        payload.insert("identity".into(), text(report.identity));
        payload.insert("order".into(), text(report.order));
        payload.insert("agrees".into(), Value::Bool(report.agrees()));
        let mismatch = report.mismatch.as_ref();
        payload.insert(
            "mismatch_exponent".into(),
            opt(mismatch.map(|m| m.exponent)),
        );
        payload.insert("form_coefficient".into(), opt(mismatch.map(|m| &m.form)));
        payload.insert(
            "expansion_coefficient".into(),
            opt(mismatch.map(|m| &m.expansion)),
        );
        let list = |xs: &[domb_core::ExactInteger]| {
            if emit_coefficients {
                Value::Array(xs.iter().map(text).collect())
            } else {
                Value::Null
            }
        };
        payload.insert("form_coefficients".into(), list(&report.form));
        payload.insert("expansion_coefficients".into(), list(&report.expansion));
        Self::new(Kind::Qcheck, payload)
    }

    fn plain(&self) -> String {
        let field = |key: &str| match self.payload.get(key) {
            Some(Value::String(s)) => s.clone(),
            Some(Value::Bool(b)) => b.to_string(),
            _ => String::new(),
        };
        match self.kind {
            Kind::Sequence => field("value"),
            Kind::Congruence => {
                let mut params = Vec::new();
                for key in ["p", "m", "n", "r", "s", "j", "A", "B", "C"] {
                    if let Some(Value::String(v)) = self.payload.get(key) {
                        params.push(format!("{key}={v}"));
                    }
                }
                let head = format!("{} {}", field("claim"), params.join(" "));
                if !field("error").is_empty() {
                    return format!("{head} ERROR {}", field("error"));
                }
                let verdict = if field("holds") == "true" {
                    "holds"
                } else {
                    "FAILS"
                };
                let mut line = format!(
                    "{head} {verdict} v={} required={}",
                    field("difference_valuation"),
                    field("required_valuation")
                );
                if !field("detail").is_empty() {
                    line.push_str(&format!(" [{}]", field("detail")));
                }
                line
            }
            Kind::Qcheck => {
                let mut line = format!("{} order={}", field("identity"), field("order"));
                if field("agrees") == "true" {
                    line.push_str(" agree");
                } else {
                    line.push_str(&format!(
                        " MISMATCH at q^{}: form {} vs expansion {}",
                        field("mismatch_exponent"),
                        field("form_coefficient"),
                        field("expansion_coefficient")
                    ));
                }
                for key in ["form_coefficients", "expansion_coefficients"] {
                    if let Some(Value::Array(xs)) = self.payload.get(key) {
                        let xs: Vec<_> = xs.iter().filter_map(Value::as_str).collect();
                        line.push_str(&format!("\n{key}: {}", xs.join(" ")));
                    }
                }
                line
            }
        }
    }

    fn csv_cell(value: &Value) -> String {
        match value {
            Value::Null => String::new(),
            Value::String(s) => s.clone(),
            Value::Array(xs) => xs
                .iter()
                .filter_map(Value::as_str)
                .collect::<Vec<_>>()
                .join(";"),
            other => other.to_string(),
        }
    }
}

/// Writes records in one format to a single sink.
pub struct Emitter<W: Write> {
    format: Format,
    sink: W,
    header_written: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, sink: W) -> Self {
        Emitter {
            format,
            sink,
            header_written: false,
        }
    }

    pub fn emit(&mut self, record: &OutputRecord) -> anyhow::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.sink, record)?;
                writeln!(self.sink)?;
            }
            Format::Plain => writeln!(self.sink, "{}", record.plain())?,
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(&mut self.sink);
                if !self.header_written {
                    let mut header = vec!["schema_version", "kind"];
                    header.extend(record.payload.keys().map(String::as_str));
                    writer.write_record(&header)?;
                    self.header_written = true;
                }
                let kind = serde_json::to_value(record.kind)?;
                let mut row = vec![
                    record.schema_version.to_string(),
                    OutputRecord::csv_cell(&kind),
                ];
                row.extend(record.payload.values().map(OutputRecord::csv_cell));
                writer.write_record(&row)?;
                writer.flush()?;
            }
        }
        Ok(())
    }

    pub fn finish(mut self) -> anyhow::Result<W> {
        self.sink.flush()?;
        Ok(self.sink)
    }
}
