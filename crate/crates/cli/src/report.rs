//! Reports: titled tables with deterministic ordering, rendered as aligned
//! text or as JSON with sorted keys.

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub sections: Vec<Section>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// One table cell. Element sets stay structured so the machine rendering can
/// emit them as sorted name arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Text(String),
    /// A set of element names, sorted.
    Set(Vec<String>),
    /// A list of element-name sets, each sorted.
    Sets(Vec<Vec<String>>),
}

impl Cell {
    pub fn text(value: impl Into<String>) -> Cell {
        Cell::Text(value.into())
    }

    fn render_text(&self) -> String {
        fn braces(names: &[String]) -> String {
            format!("{{{}}}", names.join(","))
        }
        match self {
            Cell::Text(t) => t.clone(),
            Cell::Set(names) => braces(names),
            Cell::Sets(sets) => sets
                .iter()
                .map(|names| braces(names))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    fn render_json(&self) -> Value {
        match self {
            Cell::Text(t) => json!(t),
            Cell::Set(names) => json!(names),
            Cell::Sets(sets) => json!(sets),
        }
    }

    /// Text of a `Text` cell, for report consumers in tests.
    pub fn as_text(&self) -> &str {
        match self {
            Cell::Text(t) => t,
            _ => "",
        }
    }
}

impl Section {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        Section {
            title: title.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

impl Report {
    pub fn new(title: &str) -> Self {
        Report { title: title.to_string(), sections: Vec::new() }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.title);
        out.push('\n');
        for section in &self.sections {
            out.push('\n');
            out.push_str(&format!("## {}\n", section.title));
            let rendered: Vec<Vec<String>> = section
                .rows
                .iter()
                .map(|row| row.iter().map(Cell::render_text).collect())
                .collect();
            let mut widths: Vec<usize> =
                section.columns.iter().map(|c| c.len()).collect();
            for row in &rendered {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.len());
                }
            }
            let fmt_row = |cells: &[String]| -> String {
                let mut line = String::new();
                for (i, cell) in cells.iter().enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(cell);
                    if i + 1 < cells.len() {
                        for _ in cell.len()..widths[i] {
                            line.push(' ');
                        }
                    }
                }
                line.push('\n');
                line
            };
            out.push_str(&fmt_row(&section.columns));
            let rule: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
            out.push_str(&"-".repeat(rule));
            out.push('\n');
            for row in &rendered {
                out.push_str(&fmt_row(row));
            }
        }
        out
    }

    /// JSON rendering; `serde_json` maps keep keys sorted, so identical
    /// reports serialize byte-identically. Element sets become arrays of
    /// names.
    pub fn render_json(&self) -> String {
        let value = json!({
            "title": self.title,
            "sections": self.sections.iter().map(|s| json!({
                "title": s.title,
                "columns": s.columns,
                "rows": s.rows.iter().map(|row| {
                    Value::Array(row.iter().map(Cell::render_json).collect())
                }).collect::<Vec<Value>>(),
            })).collect::<Vec<Value>>(),
        });
        let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut report = Report::new("sample");
        let mut section = Section::new("rows", &["k", "v"]);
        section.push(vec![Cell::text("a"), Cell::text("1")]);
        section.push(vec![
            Cell::text("bc"),
            Cell::Set(vec!["x".into(), "y".into()]),
        ]);
        report.sections.push(section);
        report
    }

    #[test]
    fn text_rendering_is_aligned() {
        let text = sample().render_text();
        assert!(text.contains("## rows"));
        assert!(text.contains("a   1"));
        assert!(text.contains("bc  {x,y}"));
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let rendered = sample().render_json();
        let parsed: Value = serde_json::from_str(&rendered).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(rendered, again);
    }

    #[test]
    fn sets_render_as_name_arrays_in_json() {
        let rendered = sample().render_json();
        let parsed: Value = serde_json::from_str(&rendered).unwrap();
        let cell = &parsed["sections"][0]["rows"][1][1];
        assert_eq!(cell, &json!(["x", "y"]));
    }
}
