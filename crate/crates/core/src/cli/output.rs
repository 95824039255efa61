//! Rendering of command results as plain text, JSON or LaTeX.

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::exactalg::{GaussianRational, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Latex,
}

/// A command's values in a fixed order, with the formula that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub command: String,
    pub entries: Vec<(String, Value)>,
    pub provenance: String,
    pub notes: Vec<String>,
    pub latex: Option<String>,
}

impl CommandResult {
    pub fn new(command: String) -> Self {
        CommandResult { command, entries: vec![], provenance: String::new(), notes: vec![], latex: None }
    }

    pub fn push(&mut self, key: &str, v: Value) {
        self.entries.push((key.to_string(), v));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut result = Map::new();
        for (k, v) in &self.entries {
            result.insert(k.clone(), v.clone());
        }
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        top.insert("result".into(), Value::Object(result));
        top.insert("provenance".into(), Value::String(self.provenance.clone()));
        if !self.notes.is_empty() {
            top.insert("notes".into(), Value::from(self.notes.clone()));
        }
        Value::Object(top)
    }
}

/// Plain rendering of a JSON value: strings bare, arrays comma separated.
pub fn plain_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => a
            .iter()
            .map(|x| match x {
                Value::Array(_) | Value::Object(_) => format!("[{}]", plain_value(x)),
                _ => plain_value(x),
            })
            .collect::<Vec<_>>()
            .join(","),
        Value::Object(o) => o.iter().map(|(k, x)| format!("{k}={}", plain_value(x))).collect::<Vec<_>>().join("; "),
        other => other.to_string(),
    }
}

pub fn render(r: &CommandResult, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&r.to_json()).expect("values serialize") + "\n",
        Format::Plain => {
            let mut s = format!("command: {}\n", r.command);
            for (k, v) in &r.entries {
                s += &format!("{k}: {}\n", plain_value(v));
            }
            for n in &r.notes {
                s += &format!("note: {n}\n");
            }
            s += &format!("provenance: {}\n", r.provenance);
            s
        }
        Format::Latex => match &r.latex {
            Some(l) => l.clone() + "\n",
            None => {
                let rows: Vec<String> =
                    r.entries.iter().map(|(k, v)| format!("\\text{{{}}} & {} \\\\", k.replace('_', "\\_"), plain_value(v))).collect();
                format!("\\begin{{tabular}}{{ll}}\n{}\n\\end{{tabular}}\n", rows.join("\n"))
            }
        },
    }
}

fn latex_scalar(c: &GaussianRational) -> String {
    match c.as_real() {
        Some(q) if q.is_integer() => q.to_string(),
        Some(q) => {
            let sign = if q.numer().sign() == num_bigint::Sign::Minus { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
        }
        None => c.to_string(),
    }
}

pub fn latex_matrix(m: &[Vec<GaussianRational>]) -> String {
    let rows: Vec<String> = m.iter().map(|r| r.iter().map(latex_scalar).collect::<Vec<_>>().join(" & ")).collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

pub fn latex_series(s: &TruncatedSeries) -> String {
    let mut parts = Vec::new();
    for (e, c) in s.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let coef = latex_scalar(c);
        let coef = if e > 0 && coef == "1" { String::new() } else { coef };
        parts.push(match e {
            0 => coef,
            1 => format!("{coef}t"),
            _ => format!("{coef}t^{{{e}}}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        format!("{} + O(t^{{{}}})", parts.join(" + "), s.bound() + 1)
    }
}
