//! Command reports: `key value` lines by default, one JSON object with
//! `--json`.
//!
//! Scalars print as-is, arrays of scalars are space-joined, and an array of
//! arrays repeats the key once per row. `null` fields are omitted.

use serde::Serialize;
use serde_json::Value;

pub fn render<T: Serialize>(report: &T, json: bool) -> String {
    let value = serde_json::to_value(report).expect("reports serialise");
    if json {
        let mut out = serde_json::to_string(&value).expect("reports serialise");
        out.push('\n');
        return out;
    }
    let mut out = String::new();
    if let Value::Object(fields) = value {
        for (key, v) in fields {
            render_field(&mut out, &key, &v);
        }
    }
    out
}

fn render_field(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Null => {}
        Value::Array(items) if items.iter().all(Value::is_array) && !items.is_empty() => {
            for row in items {
                render_field(out, key, row);
            }
        }
        Value::Object(fields) => {
            for (sub, inner) in fields {
                render_field(out, &format!("{key}.{sub}"), inner);
            }
        }
        other => {
            out.push_str(key);
            let text = scalar_text(other);
            if !text.is_empty() {
                out.push(' ');
                out.push_str(&text);
            }
            out.push('\n');
        }
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar_text).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
