use anyhow::{bail, Context, Result};
use bkcolor_core::records::RecordReader;
use bkcolor_core::Graph;
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;

/// Buffered reader over `path`, or stdin for `None` and `-`.
pub fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p == Path::new("-") => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let f = File::open(p).with_context(|| format!("opening {}", p.display()))?;
            Ok(Box::new(BufReader::new(f)))
        }
    }
}

pub fn records(path: Option<&Path>) -> Result<RecordReader<Box<dyn BufRead>>> {
    Ok(RecordReader::new(open_input(path)?))
}

/// A single graph given either as a file holding one record or as graph6 text.
pub fn single_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    let mut reader = if path.is_file() {
        RecordReader::new(open_input(Some(path))?)
    } else {
        RecordReader::new(Box::new(io::Cursor::new(arg.as_bytes().to_vec())) as Box<dyn BufRead>)
    };
    match reader.next() {
        Some(Ok(rec)) => Ok(rec.graph),
        Some(Err(e)) => bail!("line {}: {}", e.line, e.message),
        None => bail!("no graph in {arg:?}"),
    }
}
