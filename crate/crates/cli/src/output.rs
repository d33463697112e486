use clap::ValueEnum;
use pathinv::{OmegaPoly, TSeries};
use serde_json::{json, Value};

use crate::Omega;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

pub(crate) fn at_omega(c: &OmegaPoly, omega: &Omega) -> OmegaPoly {
    match omega {
        Omega::Symbolic => c.clone(),
        Omega::Value(x) => c.specialize(x),
    }
}

/// Integers are separated by a space, symbolic entries by `"; "`.
fn separator(omega: &Omega) -> &'static str {
    match omega {
        Omega::Symbolic => "; ",
        Omega::Value(_) => " ",
    }
}

fn csv_cell(c: &OmegaPoly) -> String {
    let s = c.to_string();
    if s.contains(' ') {
        format!("\"{s}\"")
    } else {
        s
    }
}

pub(crate) fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

pub(crate) fn sequence(coeffs: &[OmegaPoly], omega: &Omega, format: Format, meta: Value) -> String {
    let values: Vec<OmegaPoly> = coeffs.iter().map(|c| at_omega(c, omega)).collect();
    match format {
        Format::Plain => {
            let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
            parts.join(separator(omega)) + "\n"
        }
        Format::Csv => {
            let mut s = String::from("n,coefficient\n");
            for (n, c) in values.iter().enumerate() {
                s.push_str(&format!("{n},{}\n", csv_cell(c)));
            }
            s
        }
        Format::Json => {
            let series = TSeries::new(values.clone(), values.len().saturating_sub(1));
            let mut obj = meta;
            obj["omega"] = json!(omega.to_string());
            obj["series"] = serde_json::to_value(&series).expect("series serializes");
            to_json(&obj)
        }
    }
}

pub(crate) fn matrix(rows: &[Vec<OmegaPoly>], omega: &Omega, format: Format, meta: Value) -> String {
    let rows: Vec<Vec<OmegaPoly>> = rows.iter().map(|r| r.iter().map(|c| at_omega(c, omega)).collect()).collect();
    match format {
        Format::Plain => rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(separator(omega)) + "\n")
            .collect(),
        Format::Csv => rows.iter().map(|r| r.iter().map(csv_cell).collect::<Vec<_>>().join(",") + "\n").collect(),
        Format::Json => {
            let mut obj = meta;
            obj["omega"] = json!(omega.to_string());
            obj["rows"] = serde_json::to_value(&rows).expect("rows serialize");
            to_json(&obj)
        }
    }
}
