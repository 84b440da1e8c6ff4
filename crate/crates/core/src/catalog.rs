//! graph6 catalog files: one graph per line, blank lines and `#` comments
//! ignored.

use std::io::BufRead;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::graph6::parse_graph6;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// 1-based line number in the source file.
    pub line: usize,
    pub graph: Graph,
}

/// A malformed line that was skipped in lenient mode.
#[derive(Debug)]
pub struct SkippedLine {
    pub line: usize,
    pub error: Error,
}

#[derive(Debug, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub skipped: Vec<SkippedLine>,
}

/// Parses catalog text. In strict mode the first malformed line is an
/// error; otherwise malformed lines are collected in `skipped`.
pub fn read_catalog(reader: impl BufRead, strict: bool) -> Result<Catalog> {
    let mut catalog = Catalog::default();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        match parse_graph6(text) {
            Ok(graph) => catalog.entries.push(CatalogEntry { line: line_no, graph }),
            Err(e) if strict => {
                return Err(Error::Catalog {
                    line: line_no,
                    source: Box::new(e),
                })
            }
            Err(e) => catalog.skipped.push(SkippedLine {
                line: line_no,
                error: e,
            }),
        }
    }
    Ok(catalog)
}

pub fn load_catalog(path: &Path, strict: bool) -> Result<Catalog> {
    let file = std::fs::File::open(path)?;
    read_catalog(std::io::BufReader::new(file), strict)
}
