use serde_json::{Map, Value};

/// What every subcommand prints: the command echo, its inputs, structured
/// results and, on request, timing.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn json(&self) -> String {
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        top.insert("inputs".into(), self.inputs.clone());
        top.insert("results".into(), self.results.clone());
        if let Some(ms) = self.timing_ms {
            top.insert("timing".into(), serde_json::json!({ "ms": ms }));
        }
        serde_json::to_string(&sorted(Value::Object(top))).expect("values serialize")
    }

    pub fn pretty(&self) -> String {
        let mut out = format!("qhd {}\n", self.command);
        for (title, v) in [("inputs", &self.inputs), ("results", &self.results)] {
            let mut rows = Vec::new();
            flatten("", &sorted(v.clone()), &mut rows);
            if rows.is_empty() {
                continue;
            }
            out.push_str(&format!("\n{title}\n"));
            let width = rows
                .iter()
                .map(|(k, _)| k.chars().count())
                .max()
                .unwrap_or(0);
            for (k, v) in rows {
                out.push_str(&format!("  {k:<width$}  {v}\n"));
            }
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("\ntime  {ms:.1} ms\n"));
        }
        out.trim_end().to_string()
    }
}

/// Rebuilds every object with its keys in sorted order, so the output does
/// not depend on how `serde_json` stores maps.
pub fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        v => v,
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            a.iter()
                .map(|x| scalar(x).unwrap())
                .collect::<Vec<_>>()
                .join(", ")
        )),
        Value::Array(a)
            if a.iter().all(|x| {
                x.as_array()
                    .is_some_and(|r| r.iter().all(|y| !y.is_object() && !y.is_array()))
            }) =>
        {
            Some(
                a.iter()
                    .map(|x| scalar(x).unwrap())
                    .collect::<Vec<_>>()
                    .join(" "),
            )
        }
        _ => None,
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    if let Some(s) = scalar(v) {
        rows.push((prefix.to_string(), s));
        return;
    }
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&key(k), x, rows)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(&key(&i.to_string()), x, rows)),
        _ => unreachable!(),
    }
}
