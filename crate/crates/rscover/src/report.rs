//! Output documents. CSV is the primary interchange (config echoed in
//! comment lines, full-precision floats); JSON carries the same rows plus a
//! meta block. The CSV body is byte-stable across reruns; the run timestamp
//! appears only in JSON meta.

use serde_json::json;

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i128),
    UInt(u128),
    Float(f64),
    Str(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => format_float(*v),
            Cell::Str(s) => s.replace(',', ";"),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => json!(*v as i64),
            Cell::UInt(v) => {
                if let Ok(small) = u64::try_from(*v) {
                    json!(small)
                } else {
                    json!(v.to_string())
                }
            }
            Cell::Float(v) => json!(v),
            Cell::Str(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// 17 significant digits, enough to round-trip any f64.
pub fn format_float(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        // integers stay readable
        format!("{v}")
    } else {
        format!("{v:.16e}")
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Extra summary pairs, emitted as CSV comments / JSON meta entries.
    pub summary: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            params: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn param(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command: {}\n", self.command));
        for (k, v) in &self.params {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        for (k, v) in &self.summary {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, seed: Option<u64>) -> serde_json::Value {
        let params: serde_json::Map<String, serde_json::Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let results: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.clone(), cell.json()))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let mut meta = serde_json::Map::new();
        if let Some(s) = seed {
            meta.insert("seed".into(), json!(s));
        }
        meta.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        meta.insert("timestamp".into(), json!(timestamp));
        if !self.summary.is_empty() {
            let s: serde_json::Map<String, serde_json::Value> = self
                .summary
                .iter()
                .map(|(k, v)| (k.clone(), json!(v)))
                .collect();
            meta.insert("summary".into(), serde_json::Value::Object(s));
        }
        json!({
            "command": self.command,
            "params": params,
            "results": results,
            "meta": meta,
        })
    }
}
