//! JSON encoding of exact values and the `--pretty` text rendering.

use std::fmt::Write as _;

use biproj::{Bidegree, CiSpec, Int, Rational};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

/// Integers that fit in an `i64` become numbers, larger ones decimal
/// strings.
pub fn int(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

/// Integral rationals as [`int`], others as `"p/q"`.
pub fn rational(x: &Rational) -> Value {
    if x.is_integer() {
        int(x.numer())
    } else {
        Value::String(format!("{}/{}", x.numer(), x.denom()))
    }
}

pub fn bidegree(d: Bidegree) -> Value {
    json!([d.a, d.b])
}

pub fn bidegrees(list: &[Bidegree]) -> Value {
    Value::Array(list.iter().copied().map(bidegree).collect())
}

pub fn spec_input(spec: &CiSpec) -> Value {
    json!({
        "m": spec.space().m(),
        "n": spec.space().n(),
        "bidegrees": bidegrees(spec.bidegrees()),
    })
}

pub fn envelope(command: &str, input: Value, result: Value) -> Value {
    json!({
        "tool": "biproj",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "input": input,
        "result": result,
    })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".to_owned(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("({})", parts.join(","))
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(" "))
        }
        other => other.to_string(),
    }
}

fn is_table(items: &[Value]) -> bool {
    !items.is_empty()
        && items.iter().all(|x| {
            x.as_object()
                .is_some_and(|o| o.values().all(|v| !v.is_object()))
        })
}

fn table(out: &mut String, indent: usize, rows: &[Value]) {
    let header: Vec<&String> = rows[0].as_object().map(|o| o.keys().collect()).unwrap_or_default();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| header.iter().map(|k| scalar(&r[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = header
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |out: &mut String, items: Vec<&str>| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        let _ = writeln!(out, "{:indent$}{}", "", padded.join("  ").trim_end());
    };
    line(out, header.iter().map(|h| h.as_str()).collect());
    for row in &cells {
        line(out, row.iter().map(String::as_str).collect());
    }
}

fn object(out: &mut String, indent: usize, map: &Map<String, Value>) {
    for (key, value) in map {
        match value {
            Value::Object(inner) => {
                let _ = writeln!(out, "{:indent$}{key}:", "");
                object(out, indent + 2, inner);
            }
            Value::Array(items) if is_table(items) => {
                let _ = writeln!(out, "{:indent$}{key}:", "");
                table(out, indent + 2, items);
            }
            other => {
                let _ = writeln!(out, "{:indent$}{key}: {}", "", scalar(other));
            }
        }
    }
}

/// Indented key/value text, arrays of flat records as aligned tables.
pub fn pretty(report: &Value) -> String {
    let mut out = String::new();
    if let Some(map) = report.as_object() {
        object(&mut out, 0, map);
    }
    out
}
