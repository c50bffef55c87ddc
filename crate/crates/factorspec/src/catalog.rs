//! Newline-delimited graph6 ingestion.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

use factorspec_core::{graph6, Graph};

use crate::error::{Error, Result};

/// Lazily decodes one graph per line. Blank lines are ignored and a
/// `>>graph6<<` header is accepted on any record.
///
/// In strict mode (the default) the first malformed line ends the stream with
/// an error carrying its 1-based line number. In lenient mode such lines are
/// skipped and counted.
pub struct Graph6Stream<R> {
    reader: R,
    buf: Vec<u8>,
    line: usize,
    lenient: bool,
    skipped: usize,
    failed: bool,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R) -> Self {
        Graph6Stream {
            reader,
            buf: Vec::new(),
            line: 0,
            lenient: false,
            skipped: 0,
            failed: false,
        }
    }

    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }

    /// Malformed records skipped so far (always 0 in strict mode).
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn line(&self) -> usize {
        self.line
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        if self.failed {
            return None;
        }
        loop {
            self.buf.clear();
            match self.reader.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    self.failed = true;
                    return Some(Err(Error::io("<graph6 stream>", e)));
                }
            }
            self.line += 1;
            if self.buf.iter().all(|c| c.is_ascii_whitespace()) {
                continue;
            }
            match graph6::parse(&self.buf) {
                Ok(g) => return Some(Ok(g)),
                Err(_) if self.lenient => {
                    self.skipped += 1;
                    eprintln!(
                        "warning: skipping malformed graph6 record on line {}",
                        self.line
                    );
                }
                Err(source) => {
                    self.failed = true;
                    return Some(Err(Error::Record {
                        line: self.line,
                        source,
                    }));
                }
            }
        }
    }
}

pub fn stream_graph6<R: BufRead>(source: R) -> Graph6Stream<R> {
    Graph6Stream::new(source)
}

pub fn open_graph6(path: &Path) -> Result<Graph6Stream<BufReader<File>>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    Ok(Graph6Stream::new(BufReader::new(file)))
}

/// Reads a whole catalog file in strict mode.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    open_graph6(path)?
        .map(|r| {
            r.map_err(|e| match e {
                Error::Io { source, .. } => Error::io(path, source),
                other => other,
            })
        })
        .collect()
}

pub fn read_graph6_str(text: &str) -> Result<Vec<Graph>> {
    stream_graph6(io::Cursor::new(text.as_bytes())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_records() {
        let gs = read_graph6_str("Bw\nA_\n").unwrap();
        assert_eq!(gs, vec![Graph::complete(3), Graph::complete(2)]);
        assert!(read_graph6_str("").unwrap().is_empty());
        let gs = read_graph6_str(">>graph6<<Bw\n\nA?").unwrap();
        assert_eq!(gs, vec![Graph::complete(3), Graph::empty(2)]);
    }

    #[test]
    fn strict_reports_line() {
        let mut s = stream_graph6(io::Cursor::new(&b"Bw\nZZZ\nA_\n"[..]));
        assert!(s.next().unwrap().is_ok());
        match s.next().unwrap() {
            Err(Error::Record { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected a record error, got {other:?}"),
        }
        assert!(s.next().is_none());
    }

    #[test]
    fn lenient_skips() {
        let mut s = stream_graph6(io::Cursor::new(&b"Bw\nZZZ\nA_\n"[..])).lenient(true);
        let gs: Vec<_> = s.by_ref().map(|r| r.unwrap()).collect();
        assert_eq!(gs.len(), 2);
        assert_eq!(s.skipped(), 1);
    }
}
