//! Reading newline-separated graph6 streams.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::{Path, PathBuf};

use sml_core::graph6::Graph6Error;
use sml_core::Graph;

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
}

/// Iterator over the graphs of a graph6 stream. Blank lines are skipped and
/// a `>>graph6<<` header is accepted on any line; line numbers start at 1.
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buf: Vec<u8>,
    path: PathBuf,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Self::named(reader, PathBuf::from("<stream>"))
    }

    fn named(reader: R, path: PathBuf) -> Self {
        Graph6Lines { reader, line: 0, buf: Vec::new(), path }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(source) => return Some(Err(IngestError::Io { path: self.path.clone(), source })),
            }
            self.line += 1;
            let text = self.buf.trim_ascii();
            if text.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(sml_core::graph6::parse(text).map_err(|source| IngestError::Parse { line, source }));
        }
    }
}

/// Opens `path` (or standard input for `-`) as a graph6 stream.
pub fn open_graph6(path: &Path) -> Result<Graph6Lines<Box<dyn BufRead>>, IngestError> {
    let reader: Box<dyn BufRead> = if path == Path::new("-") {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let file = File::open(path).map_err(|source| IngestError::Io { path: path.to_owned(), source })?;
        Box::new(BufReader::new(file))
    };
    Ok(Graph6Lines::named(reader, path.to_owned()))
}

/// Reads every graph of a graph6 file in order, stopping at the first
/// malformed line.
pub fn ingest_graph6_stream(path: &Path) -> Result<Vec<Graph>, IngestError> {
    open_graph6(path)?.collect()
}
