use clap::ValueEnum;
use eulerpair::IntPoly;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Markdown,
}

/// One labelled polynomial of a table.
pub struct Row {
    pub n: usize,
    pub part: &'static str,
    pub poly: IntPoly,
}

/// Text prints bare polynomials when every row is unlabelled and there is one
/// row, so single values can be piped straight into other tools.
pub fn render_rows(rows: &[Row], format: Format, meta: Value) -> String {
    match format {
        Format::Text => {
            if rows.len() == 1 && rows[0].part.is_empty() {
                return format!("{}\n", rows[0].poly);
            }
            rows.iter()
                .map(|r| match r.part {
                    "" => format!("{}: {}\n", r.n, r.poly),
                    part => format!("{} {}: {}\n", r.n, part, r.poly),
                })
                .collect()
        }
        Format::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| json!({ "n": r.n, "part": r.part, "text": r.poly.to_string(), "coefficients": r.poly.to_json() }))
                .collect();
            let mut out = meta;
            out["values"] = Value::Array(values);
            format!("{}\n", serde_json::to_string_pretty(&out).expect("json"))
        }
        Format::Csv => {
            let mut out = String::from("n,part,k,coefficient\n");
            for r in rows {
                for (k, c) in r.poly.coeffs().iter().enumerate() {
                    out.push_str(&format!("{},{},{k},{c}\n", r.n, r.part));
                }
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| n | part | polynomial |\n|---|---|---|\n");
            for r in rows {
                out.push_str(&format!("| {} | {} | {} |\n", r.n, r.part, r.poly));
            }
            out
        }
    }
}

/// Renders a plain table given as a header and string cells.
pub fn render_table(header: &[String], cells: &[Vec<String>], format: Format, json: Value) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).expect("json")),
        Format::Csv => {
            let mut out = header.join(",") + "\n";
            for row in cells {
                out.push_str(&(row.join(",") + "\n"));
            }
            out
        }
        Format::Markdown => {
            let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
            for row in cells {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
            out
        }
        Format::Text => cells.iter().map(|row| row.join(" ") + "\n").collect(),
    }
}
