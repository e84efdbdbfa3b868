//! Tabular output as CSV or JSON.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// An exact integer or rational, kept as its decimal text.
    Exact(String),
    Real(f64),
    Text(String),
}

impl Cell {
    pub fn exact(x: impl ToString) -> Self {
        Cell::Exact(x.to_string())
    }
}

/// A result table with `#`-prefixed notes ahead of the header.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub notes: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { notes: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn note(&mut self, key: &str, value: Cell) {
        self.notes.push((key.to_string(), value));
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Formats reals in scientific notation with a fixed number of significant digits.
#[derive(Debug, Clone, Copy)]
pub struct RealFormat {
    pub digits: usize,
}

impl RealFormat {
    /// Enough digits for `bits` of precision, capped at what a double carries.
    pub fn from_bits(bits: u32) -> Self {
        let digits = (bits as f64 * std::f64::consts::LOG10_2).ceil() as usize;
        Self { digits: digits.clamp(1, 16) }
    }

    pub fn fmt(&self, x: f64) -> String {
        if x.is_finite() {
            format!("{:.*e}", self.digits - 1, x)
        } else {
            x.to_string()
        }
    }

    fn cell_text(&self, c: &Cell) -> String {
        match c {
            Cell::Exact(s) | Cell::Text(s) => s.clone(),
            Cell::Real(x) => self.fmt(*x),
        }
    }

    fn cell_json(&self, c: &Cell) -> Value {
        match c {
            Cell::Exact(s) | Cell::Text(s) => Value::String(s.clone()),
            // Round through the text so both formats carry the same digits.
            Cell::Real(x) => match self.fmt(*x).parse::<f64>().ok().and_then(serde_json::Number::from_f64) {
                Some(n) => Value::Number(n),
                None => Value::String(self.fmt(*x)),
            },
        }
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Resource(format!("cannot write output: {e}"))
}

pub fn write_table(t: &Table, command: &str, format: Format, rf: RealFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Csv => {
            for (k, v) in &t.notes {
                writeln!(out, "# {k} = {}", rf.cell_text(v)).map_err(io_err)?;
            }
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            w.write_record(&t.columns).map_err(io_err)?;
            for row in &t.rows {
                w.write_record(row.iter().map(|c| rf.cell_text(c))).map_err(io_err)?;
            }
            w.flush().map_err(io_err)?;
        }
        Format::Json => {
            let mut meta = Map::new();
            for (k, v) in &t.notes {
                meta.insert(k.clone(), rf.cell_json(v));
            }
            let rows: Vec<Value> =
                t.rows.iter().map(|r| Value::Array(r.iter().map(|c| rf.cell_json(c)).collect())).collect();
            let doc = json!({
                "command": command,
                "meta": meta,
                "columns": t.columns,
                "rows": rows,
            });
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(io_err)?;
            writeln!(out).map_err(io_err)?;
        }
    }
    Ok(())
}
