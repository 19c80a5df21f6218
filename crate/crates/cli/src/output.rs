use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    /// One JSON object per line.
    Json,
}

/// Collects records and writes them in the chosen format. Text tables are
/// buffered so columns can be aligned.
pub struct Sink<W: Write> {
    out: W,
    format: Format,
    columns: Vec<String>,
    table: Vec<Vec<String>>,
    trailer: Vec<String>,
}

impl<W: Write> Sink<W> {
    pub fn new(out: W, format: Format) -> Self {
        Sink {
            out,
            format,
            columns: Vec::new(),
            table: Vec::new(),
            trailer: Vec::new(),
        }
    }

    /// A single record with its own text rendering and a CSV form.
    pub fn record<T: Serialize>(
        &mut self,
        value: &T,
        text: Vec<String>,
        csv_header: &[&str],
        csv_rows: Vec<Vec<String>>,
    ) -> io::Result<()> {
        match self.format {
            Format::Text => text.iter().try_for_each(|l| writeln!(self.out, "{l}")),
            Format::Json => self.json(value),
            Format::Csv => {
                self.csv_line(csv_header.iter().map(|s| s.to_string()))?;
                csv_rows.into_iter().try_for_each(|r| self.csv_line(r))
            }
        }
    }

    pub fn header(&mut self, columns: &[&str]) -> io::Result<()> {
        self.columns = columns.iter().map(|c| c.to_string()).collect();
        match self.format {
            Format::Csv => self.csv_line(self.columns.clone()),
            _ => Ok(()),
        }
    }

    /// One table row; `text` replaces the aligned row in text mode.
    pub fn row<T: Serialize>(&mut self, value: &T, cells: Vec<String>, text: Option<String>) -> io::Result<()> {
        match self.format {
            Format::Text => {
                match text {
                    Some(line) => self.trailer.push(line),
                    None => self.table.push(cells),
                }
                Ok(())
            }
            Format::Json => self.json(value),
            Format::Csv => self.csv_line(cells),
        }
    }

    /// A closing line; printed in text mode, sent to stderr otherwise.
    pub fn summary(&mut self, line: &str) -> io::Result<()> {
        match self.format {
            Format::Text => {
                self.trailer.push(line.to_string());
                Ok(())
            }
            _ => {
                eprintln!("{line}");
                Ok(())
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        if self.format == Format::Text {
            if !self.table.is_empty() {
                let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
                for row in &self.table {
                    for (i, cell) in row.iter().enumerate() {
                        if i >= widths.len() {
                            widths.push(0);
                        }
                        widths[i] = widths[i].max(cell.len());
                    }
                }
                let render = |cells: &[String]| {
                    cells
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:>w$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(self.out, "{}", render(&self.columns))?;
                for row in std::mem::take(&mut self.table) {
                    writeln!(self.out, "{}", render(&row))?;
                }
            }
            for line in std::mem::take(&mut self.trailer) {
                writeln!(self.out, "{line}")?;
            }
        }
        self.out.flush()
    }

    fn json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, value)?;
        writeln!(self.out)
    }

    fn csv_line(&mut self, cells: impl IntoIterator<Item = String>) -> io::Result<()> {
        let mut writer = csv::WriterBuilder::new().from_writer(&mut self.out);
        writer.write_record(cells)?;
        writer.flush()
    }
}
