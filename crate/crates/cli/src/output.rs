//! Tabular output as CSV or JSON.

use serde_json::{Map, Number, Value};

use crate::config::Format;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Missing,
}

/// Column-labelled rows plus optional named summary rows written after the
/// data.
#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Vec<(&'static str, Vec<Cell>)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn render(&self, format: Format, precision: usize) -> String {
        match format {
            Format::Csv => self.to_csv(precision),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self, precision: usize) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        let line = |cells: &[Cell]| {
            cells
                .iter()
                .map(|c| match *c {
                    Cell::Int(i) => i.to_string(),
                    Cell::Float(f) => format_significant(f, precision),
                    Cell::Missing => String::new(),
                })
                .collect::<Vec<_>>()
                .join(",")
        };
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        for (name, cells) in &self.summary {
            out.push_str(&format!("# {name},{}\n", line(cells)));
        }
        out
    }

    fn object(&self, cells: &[Cell]) -> Value {
        let mut m = Map::new();
        for (col, cell) in self.columns.iter().zip(cells) {
            let v = match *cell {
                Cell::Int(i) => Value::Number(i.into()),
                Cell::Float(f) => Number::from_f64(f)
                    .map(Value::Number)
                    .unwrap_or(Value::Null),
                Cell::Missing => Value::Null,
            };
            m.insert((*col).to_string(), v);
        }
        Value::Object(m)
    }

    fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert(
            "columns".into(),
            Value::Array(
                self.columns
                    .iter()
                    .map(|c| Value::String((*c).into()))
                    .collect(),
            ),
        );
        root.insert(
            "rows".into(),
            Value::Array(self.rows.iter().map(|r| self.object(r)).collect()),
        );
        for (name, cells) in &self.summary {
            root.insert((*name).into(), self.object(cells));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(root)).expect("serializable");
        s.push('\n');
        s
    }
}

/// Formats `v` with `digits` significant digits, like C's `%g`: fixed
/// notation for moderate exponents, scientific otherwise, trailing zeros
/// trimmed.
pub fn format_significant(v: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
