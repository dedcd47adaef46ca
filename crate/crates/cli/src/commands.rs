//! The record-per-graph subcommands. Each writes one JSON line per input
//! record; unparseable records become `{"index", "line", "error"}` lines and
//! processing continues.

use anyhow::{bail, Context, Result};
use bkcolor_core::enumerate::enumerate_graphs;
use bkcolor_core::oracle::{chromatic_number_within, max_clique_within};
use bkcolor_core::records::{GraphRecord, RecordError, RecordResult};
use bkcolor_core::{bk_color, emit_graph6, find_h_witness, find_r_witness, ClassId, Deadline, Vertex};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

/// Counts across one run of a subcommand.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub graphs: usize,
    pub input_errors: usize,
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    index: usize,
    line: usize,
    error: &'a str,
}

fn write_line<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn each_record<I>(
    records: I,
    out: &mut dyn Write,
    mut f: impl FnMut(&GraphRecord, &mut dyn Write) -> Result<()>,
) -> Result<Tally>
where
    I: Iterator<Item = RecordResult>,
{
    let mut tally = Tally::default();
    for r in records {
        match r {
            Ok(rec) => {
                tally.graphs += 1;
                f(&rec, out)?;
            }
            Err(RecordError { index, line, message }) => {
                tally.input_errors += 1;
                write_line(out, &ErrorRecord { index, line, error: &message })?;
            }
        }
    }
    out.flush()?;
    Ok(tally)
}

#[derive(Serialize)]
struct ClassifyRecord<'a> {
    index: usize,
    graph6: &'a str,
    n: usize,
    h_free: bool,
    r_free: bool,
    h_witness: Option<[Vertex; 4]>,
    r_witness: Option<[Vertex; 4]>,
}

/// Class flags, with witness vertices in pattern role order when not free.
pub fn classify<I: Iterator<Item = RecordResult>>(records: I, out: &mut dyn Write) -> Result<Tally> {
    each_record(records, out, |rec, out| {
        let h = find_h_witness(&rec.graph).map(|w| w.vertices);
        let r = find_r_witness(&rec.graph).map(|w| w.vertices);
        write_line(
            out,
            &ClassifyRecord {
                index: rec.index,
                graph6: &rec.graph6,
                n: rec.graph.order(),
                h_free: h.is_none(),
                r_free: r.is_none(),
                h_witness: h,
                r_witness: r,
            },
        )
    })
}

#[derive(Debug, Clone)]
pub struct ColorOptions {
    pub class: ClassId,
    /// Trace destination; `{}` is replaced by the record index.
    pub trace: Option<String>,
}

#[derive(Serialize)]
struct ColorRecord<'a> {
    index: usize,
    graph6: &'a str,
    n: usize,
    class: String,
    in_class: bool,
    bound: usize,
    colors_used: usize,
    coloring: &'a [u32],
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<String>,
}

pub fn color<I: Iterator<Item = RecordResult>>(
    records: I,
    out: &mut dyn Write,
    opts: &ColorOptions,
) -> Result<Tally> {
    let templated = opts.trace.as_deref().is_some_and(|t| t.contains("{}"));
    let mut written = 0;
    each_record(records, out, |rec, out| {
        let res = bk_color(&rec.graph, opts.class).context("coloring engine")?;
        let trace = match &opts.trace {
            Some(t) => {
                if !templated && written > 0 {
                    bail!("--trace {t:?} has no {{}} but the input holds several graphs");
                }
                let path = PathBuf::from(t.replace("{}", &rec.index.to_string()));
                std::fs::write(&path, res.trace.to_text())
                    .with_context(|| format!("writing {}", path.display()))?;
                written += 1;
                Some(path.display().to_string())
            }
            None => None,
        };
        write_line(
            out,
            &ColorRecord {
                index: rec.index,
                graph6: &rec.graph6,
                n: rec.graph.order(),
                class: opts.class.to_string(),
                in_class: res.in_class,
                bound: res.budget,
                colors_used: res.colors_used,
                coloring: res.coloring.as_raw(),
                trace,
            },
        )
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleWhat {
    Chi,
    Omega,
    Both,
}

#[derive(Serialize)]
struct OracleRecord<'a> {
    index: usize,
    graph6: &'a str,
    n: usize,
    /// Outer `None`: not requested; inner `None`: timed out.
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chi: Option<Option<usize>>,
    timed_out: bool,
}

/// Exact ω and/or χ, each under its own `timeout`.
pub fn oracle<I: Iterator<Item = RecordResult>>(
    records: I,
    out: &mut dyn Write,
    what: OracleWhat,
    timeout: Option<Duration>,
) -> Result<Tally> {
    each_record(records, out, |rec, out| {
        let g = &rec.graph;
        let omega = (what != OracleWhat::Chi)
            .then(|| max_clique_within(g, &Deadline::from_option(timeout)).ok().map(|c| c.size));
        let chi = (what != OracleWhat::Omega)
            .then(|| chromatic_number_within(g, &Deadline::from_option(timeout)).ok().map(|r| r.0));
        let timed_out = matches!(omega, Some(None)) || matches!(chi, Some(None));
        write_line(
            out,
            &OracleRecord { index: rec.index, graph6: &rec.graph6, n: g.order(), omega, chi, timed_out },
        )
    })
}

/// One graph6 line per isomorphism class on `n` vertices.
pub fn enumerate(n: usize, connected_only: bool, out: &mut dyn Write) -> Result<usize> {
    let mut count = 0;
    for g in enumerate_graphs(n)? {
        if connected_only && !g.is_connected() {
            continue;
        }
        writeln!(out, "{}", emit_graph6(&g))?;
        count += 1;
    }
    out.flush()?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bkcolor_core::records::RecordReader;

    fn run(
        input: &str,
        f: impl FnOnce(RecordReader<&[u8]>, &mut Vec<u8>) -> Result<Tally>,
    ) -> (Tally, Vec<serde_json::Value>) {
        let mut out = Vec::new();
        let tally = f(RecordReader::new(input.as_bytes()), &mut out).unwrap();
        let lines =
            String::from_utf8(out).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        (tally, lines)
    }

    #[test]
    fn classify_examples() {
        // C5, C7, then a malformed line
        let (tally, lines) = run("Dhc\nFhCKG\n!!\n", |r, o| classify(r, o));
        assert_eq!(tally, Tally { graphs: 2, input_errors: 1 });
        assert_eq!(lines[0]["h_free"], true);
        assert_eq!(lines[0]["r_witness"], serde_json::Value::Null);
        assert_eq!(lines[1]["h_free"], false);
        assert_eq!(lines[1]["r_free"], false);
        assert_eq!(lines[1]["h_witness"].as_array().unwrap().len(), 4);
        assert_eq!(lines[2]["line"], 3);
        assert!(lines[2]["error"].is_string());
    }

    #[test]
    fn oracle_examples() {
        let (_, lines) = run("Dhc\nIheA@GUAo\n", |r, o| oracle(r, o, OracleWhat::Both, None));
        for l in &lines {
            assert_eq!((l["chi"].as_u64(), l["omega"].as_u64()), (Some(3), Some(2)));
            assert_eq!(l["timed_out"], false);
        }
        let (_, lines) = run("Dhc\n", |r, o| oracle(r, o, OracleWhat::Omega, None));
        assert!(lines[0].get("chi").is_none());
    }
}
