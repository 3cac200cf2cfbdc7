use anyhow::Result;
use serde_json::{json, Map, Value};

use crate::{Format, SCHEMA_VERSION};

/// A rectangular table plus free-form notes, rendered as Markdown, CSV or JSON.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Table {
        Table {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: vec![],
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// A command's output: tables, then extra JSON fields shown as notes in Markdown.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub tables: Vec<Table>,
    pub fields: Map<String, Value>,
    /// Fields emitted in JSON only.
    pub json_fields: Map<String, Value>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Report {
        Report {
            command,
            tables: vec![],
            fields: Map::new(),
            json_fields: Map::new(),
            notes: vec![],
        }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    pub fn json_field(&mut self, key: &str, value: impl Into<Value>) {
        self.json_fields.insert(key.to_string(), value.into());
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Md => Ok(self.markdown()),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            if !t.title.is_empty() {
                out.push_str(&format!("## {}\n\n", t.title));
            }
            out.push_str(&md_row(t.columns.iter().cloned()));
            out.push_str(&md_row(t.columns.iter().map(|_| "---".to_string())));
            for r in &t.rows {
                out.push_str(&md_row(r.iter().map(cell)));
            }
            out.push('\n');
        }
        for (k, v) in &self.fields {
            out.push_str(&format!("- {k}: {}\n", cell(v)));
        }
        for n in &self.notes {
            out.push_str(&format!("- note: {n}\n"));
        }
        out
    }

    /// The first table only; CSV has no room for notes.
    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(vec![]);
        if let Some(t) = self.tables.first() {
            w.write_record(&t.columns)?;
            for r in &t.rows {
                w.write_record(r.iter().map(cell))?;
            }
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn json(&self) -> Result<String> {
        let mut root = Map::new();
        root.insert("schema_version".into(), json!(SCHEMA_VERSION));
        root.insert("command".into(), json!(self.command));
        let tables: Vec<Value> = self
            .tables
            .iter()
            .map(|t| {
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|r| Value::Object(t.columns.iter().cloned().zip(r.iter().cloned()).collect()))
                    .collect();
                json!({ "title": t.title, "columns": t.columns, "rows": rows })
            })
            .collect();
        root.insert("tables".into(), Value::Array(tables));
        for (k, v) in self.fields.iter().chain(&self.json_fields) {
            root.insert(k.clone(), v.clone());
        }
        if !self.notes.is_empty() {
            root.insert("notes".into(), json!(self.notes));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(root))?;
        s.push('\n');
        Ok(s)
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(a) => a.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn md_row(cells: impl Iterator<Item = String>) -> String {
    let cells: Vec<String> = cells.map(|c| c.replace('|', "\\|")).collect();
    format!("| {} |\n", cells.join(" | "))
}
