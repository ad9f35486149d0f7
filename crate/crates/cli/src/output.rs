use std::collections::BTreeMap;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DocKind {
    Table,
    PolyList,
    Report,
}

/// Everything a command prints. Cells are exact decimal strings or short
/// status words, so JSON round trips are lossless.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDoc {
    pub kind: DocKind,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub meta: BTreeMap<String, String>,
}

impl OutputDoc {
    pub fn new(kind: DocKind, command: &str, headers: Vec<String>) -> Self {
        let meta = BTreeMap::from([
            ("command".to_string(), command.to_string()),
            ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ]);
        Self { kind, headers, rows: Vec::new(), meta }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => serde_json::to_string_pretty(self).expect("plain strings serialize") + "\n",
            Format::Latex => self.to_latex(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        w.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            let mut padded = row.clone();
            padded.resize(self.headers.len().max(row.len()), String::new());
            w.write_record(&padded).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    /// An `array` environment laid out like the printed tables: header row,
    /// rule, then one line per row with trailing blanks dropped.
    fn to_latex(&self) -> String {
        let cols = self.headers.len().max(1);
        let mut out = format!("\\begin{{array}}{{r|{}}}\n", "c".repeat(cols - 1));
        let line = |cells: &[String]| {
            let end = cells.iter().rposition(|c| !c.is_empty()).map_or(0, |i| i + 1);
            cells[..end].iter().map(|c| latex_escape(c)).collect::<Vec<_>>().join(" & ")
        };
        out.push_str(&format!("  {} \\\\\n  \\hline\n", line(&self.headers)));
        for row in &self.rows {
            out.push_str(&format!("  {} \\\\\n", line(row)));
        }
        out.push_str("\\end{array}\n");
        out
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\backslash ").replace('_', "\\_").replace('#', "\\#").replace('%', "\\%")
}
