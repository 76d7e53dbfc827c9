//! Rendering of reports in the three output formats. Everything is ordered
//! deterministically so identical inputs give byte-identical output.

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Format-agnostic report body used for the table and CSV renderers; JSON
/// comes from the typed report structs directly.
pub struct Rendered {
    pub sections: Vec<Section>,
}

pub enum Section {
    Kv(Vec<(String, String)>),
    Table {
        header: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

impl Rendered {
    pub fn new() -> Self {
        Rendered { sections: vec![] }
    }

    pub fn kv(mut self, pairs: Vec<(&str, String)>) -> Self {
        self.sections.push(Section::Kv(
            pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        ));
        self
    }

    pub fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.sections.push(Section::Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            match section {
                Section::Kv(pairs) => {
                    for (k, v) in pairs {
                        out.push_str(&format!("{k}: {v}\n"));
                    }
                }
                Section::Table { header, rows } => {
                    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
                    for row in rows {
                        for (i, cell) in row.iter().enumerate() {
                            widths[i] = widths[i].max(cell.len());
                        }
                    }
                    let fmt_row = |cells: &[String]| -> String {
                        cells
                            .iter()
                            .enumerate()
                            .map(|(i, c)| format!("{c:>w$}", w = widths[i]))
                            .collect::<Vec<_>>()
                            .join("  ")
                    };
                    out.push_str(&fmt_row(header));
                    out.push('\n');
                    for row in rows {
                        out.push_str(&fmt_row(row));
                        out.push('\n');
                    }
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for section in &self.sections {
            match section {
                Section::Kv(pairs) => {
                    for (k, v) in pairs {
                        out.push_str(&format!("{k},{v}\n"));
                    }
                }
                Section::Table { header, rows } => {
                    out.push_str(&header.join(","));
                    out.push('\n');
                    for row in rows {
                        out.push_str(&row.join(","));
                        out.push('\n');
                    }
                }
            }
        }
        out
    }
}

/// Renders a JSON-serializable report plus its table/CSV body.
pub fn render<T: serde::Serialize>(format: Format, report: &T, body: &Rendered) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => body.to_table(),
        Format::Csv => body.to_csv(),
    }
}

pub fn fmt_i64_list(xs: &[i64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn dims_rows(dims: &std::collections::BTreeMap<i64, usize>) -> Vec<Vec<String>> {
    dims.iter()
        .map(|(d, v)| vec![d.to_string(), v.to_string()])
        .collect()
}
