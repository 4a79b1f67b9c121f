//! A small string table with a fixed header, written and read as CSV.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Result<usize> {
        self.header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::InvalidSpec(format!("no column named {name:?}")))
    }

    /// Values of a numeric column; empty or unparsable cells become `None`.
    pub fn column(&self, name: &str) -> Result<Vec<Option<f64>>> {
        let i = self.column_index(name)?;
        Ok(self.rows.iter().map(|r| r.get(i).and_then(|c| c.trim().parse().ok())).collect())
    }

    pub fn write_csv(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let io = |e: csv::Error| Error::InvalidSpec(format!("csv: {e}"));
        out.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            out.write_record(r).map_err(io)?;
        }
        out.flush().map_err(|e| Error::Io { path: "<csv>".into(), source: e })
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn read_csv(r: impl Read) -> Result<Self> {
        let mut rd = csv::Reader::from_reader(r);
        let err = |e: csv::Error| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            Error::Parse { path: "<csv>".into(), line, msg: e.to_string() }
        };
        let header = rd.headers().map_err(err)?.iter().map(String::from).collect();
        let rows = rd
            .records()
            .map(|rec| rec.map(|r| r.iter().map(String::from).collect()).map_err(err))
            .collect::<Result<_>>()?;
        Ok(Table { header, rows })
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let f = std::fs::File::create(path).map_err(|e| Error::Io { path: path.to_path_buf(), source: e })?;
        self.write_csv(f)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let f = std::fs::File::open(path).map_err(|e| Error::Io { path: path.to_path_buf(), source: e })?;
        Table::read_csv(f)
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn num(x: f64) -> String {
    format!("{x:e}")
}
