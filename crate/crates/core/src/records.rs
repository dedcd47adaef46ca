//! Streaming reader over mixed graph6 / edge-list input.
//!
//! Each non-blank line is a graph6 record unless it is an `n m` header, in
//! which case it and the following `m` edge lines form one edge-list record.
//! Lines starting with `#` are comments.

use crate::graph::Graph;
use crate::graph6::{is_edge_list_header, parse_edge_list, parse_graph6, parse_pair};
use std::io::{self, BufRead};

/// One decoded input record.
#[derive(Debug, Clone)]
pub struct GraphRecord {
    /// Zero-based record position in the stream (errors included).
    pub index: usize,
    /// One-based line number where the record starts.
    pub line: usize,
    /// The input's graph6 text, or the emitted graph6 for edge-list input.
    pub graph6: String,
    pub graph: Graph,
}

#[derive(Debug, Clone)]
pub struct RecordError {
    pub index: usize,
    pub line: usize,
    pub message: String,
}

pub type RecordResult = Result<GraphRecord, RecordError>;

pub struct RecordReader<R> {
    lines: io::Lines<R>,
    line_no: usize,
    index: usize,
}

impl<R: BufRead> RecordReader<R> {
    pub fn new(reader: R) -> Self {
        Self { lines: reader.lines(), line_no: 0, index: 0 }
    }

    fn next_line(&mut self) -> Option<io::Result<String>> {
        loop {
            let line = self.lines.next()?;
            self.line_no += 1;
            match line {
                Ok(l) if l.trim().is_empty() || l.starts_with('#') => continue,
                other => return Some(other),
            }
        }
    }

    fn error(&mut self, line: usize, message: String) -> RecordResult {
        let index = self.index;
        self.index += 1;
        Err(RecordError { index, line, message })
    }
}

impl<R: BufRead> Iterator for RecordReader<R> {
    type Item = RecordResult;

    fn next(&mut self) -> Option<RecordResult> {
        let first = match self.next_line()? {
            Ok(l) => l,
            Err(e) => {
                let line = self.line_no;
                return Some(self.error(line, e.to_string()));
            }
        };
        let start = self.line_no;
        let trimmed = first.trim();
        if is_edge_list_header(trimmed) {
            let (_, m) = parse_pair(trimmed).expect("header checked");
            let mut text = format!("{trimmed}\n");
            for _ in 0..m {
                match self.next_line() {
                    Some(Ok(l)) => {
                        text.push_str(&l);
                        text.push('\n');
                    }
                    Some(Err(e)) => return Some(self.error(start, e.to_string())),
                    None => break,
                }
            }
            return Some(match parse_edge_list(&text) {
                Ok(graph) => {
                    let index = self.index;
                    self.index += 1;
                    Ok(GraphRecord { index, line: start, graph6: crate::graph6::emit_graph6(&graph), graph })
                }
                Err(e) => self.error(start, e.to_string()),
            });
        }
        Some(match parse_graph6(trimmed) {
            Ok(graph) => {
                let index = self.index;
                self.index += 1;
                Ok(GraphRecord { index, line: start, graph6: trimmed.to_owned(), graph })
            }
            Err(e) => self.error(start, e.to_string()),
        })
    }
}
