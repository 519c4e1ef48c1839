use eulergraph::rational::format_q;
use eulergraph::{GenusSeries, SymFunc};
use serde_json::{json, Value};

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut out = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            out.extend(std::iter::repeat(' ').take(w - cell.chars().count()));
        }
        out.trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn json_text(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n"
}

pub struct Cell {
    pub g: i64,
    pub n: u32,
    pub value: SymFunc,
}

pub fn cells(series: &GenusSeries, g_max: i64, n_max: u32) -> Result<Vec<Cell>, String> {
    let mut out = Vec::new();
    for g in 0..=g_max {
        for n in 0..=n_max {
            let value = series.genus_entry(g, n).map_err(|e| e.to_string())?;
            out.push(Cell { g, n, value });
        }
    }
    Ok(out)
}

pub fn cells_text(cells: &[Cell]) -> String {
    let rows: Vec<Vec<String>> = cells
        .iter()
        .map(|c| {
            let (euler, quotient) = c.value.euler_specializations(c.n);
            vec![
                c.g.to_string(),
                c.n.to_string(),
                format_q(&euler),
                format_q(&quotient),
                c.value.to_string(),
            ]
        })
        .collect();
    aligned(&["g", "n", "euler", "quotient", "character"], &rows)
}

pub fn cells_json(cells: &[Cell]) -> Value {
    let items: Vec<Value> = cells
        .iter()
        .map(|c| {
            let (euler, quotient) = c.value.euler_specializations(c.n);
            json!({
                "g": c.g,
                "n": c.n,
                "euler": format_q(&euler),
                "quotient_euler": format_q(&quotient),
                "value": c.value.to_json(),
            })
        })
        .collect();
    Value::Array(items)
}
