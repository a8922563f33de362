//! Generator files: one Pauli per line, `#` comments, optional `qubits: N` header.

use std::fmt;

use crate::error::Error;
use crate::pauli::{format_pauli, parse_pauli, PauliString, Style};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub n_qubits: usize,
    pub header: Option<usize>,
    pub generators: Vec<PauliString>,
    /// 1-based source line of each generator.
    pub lines: Vec<usize>,
}

/// An error located in the source text (1-based line and column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub line: usize,
    pub column: usize,
    pub error: Error,
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.error)
    }
}

impl std::error::Error for FileError {}

fn at(line: usize, column: usize, error: Error) -> FileError {
    FileError { line, column, error }
}

pub fn parse_generator_file(text: &str) -> Result<GeneratorFile, FileError> {
    let mut header = None;
    let mut raw: Vec<(usize, usize, PauliString)> = Vec::new();
    for (i, full) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = full.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix("qubits:") {
            if header.is_some() || !raw.is_empty() {
                return Err(at(line_no, indent + 1, Error::parse(0, "header must precede the generators")));
            }
            let n: usize = rest
                .trim()
                .parse()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| at(line_no, indent + 8, Error::parse(7, "expected a positive qubit count")))?;
            header = Some(n);
            continue;
        }
        let p = parse_pauli(trimmed, header).map_err(|e| {
            let pos = match e {
                Error::Parse { pos, .. } => pos,
                _ => 0,
            };
            at(line_no, indent + pos + 1, e)
        })?;
        raw.push((line_no, indent, p));
    }
    if raw.is_empty() {
        return Err(at(text.lines().count().max(1), 1, Error::Empty));
    }
    let n_qubits = header.unwrap_or_else(|| raw.iter().map(|r| r.2.n_qubits()).max().unwrap_or(1));
    let mut generators = Vec::with_capacity(raw.len());
    let mut lines = Vec::with_capacity(raw.len());
    for (k, (line_no, indent, p)) in raw.into_iter().enumerate() {
        if p.is_identity() {
            return Err(at(line_no, indent + 1, Error::Identity(k)));
        }
        generators.push(p.resized(n_qubits));
        lines.push(line_no);
    }
    Ok(GeneratorFile { n_qubits, header, generators, lines })
}

pub fn write_generator_file(paulis: &[PauliString], style: Style, header: bool) -> String {
    let mut out = String::new();
    if let (true, Some(p)) = (header, paulis.first()) {
        out.push_str(&format!("qubits: {}\n", p.n_qubits()));
    }
    for p in paulis {
        out.push_str(&format_pauli(p, style));
        out.push('\n');
    }
    out
}
