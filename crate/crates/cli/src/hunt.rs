//! Corpus hunt: every input graph gets one report line, in input order.
//!
//! Graphs are independent work units. A chunk of records is processed in
//! parallel, then written out sequentially, so the output does not depend on
//! the worker count.

use crate::verify::verify_trace_text;
use anyhow::{Context, Result};
use bkcolor_core::oracle::{chromatic_number_within, max_clique_within};
use bkcolor_core::recolor::SchemaHistogram;
use bkcolor_core::records::{GraphRecord, RecordResult};
use bkcolor_core::{bk_color, find_h_witness, find_r_witness, ClassId, Deadline, SchemaId};
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;
use std::time::Duration;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ClassFilter {
    H,
    R,
    /// Either class.
    Both,
}

impl ClassFilter {
    /// The class to run under, if the flags admit the graph.
    fn admit(self, h_free: bool, r_free: bool) -> Option<ClassId> {
        match self {
            ClassFilter::H if h_free => Some(ClassId::HFree),
            ClassFilter::R if r_free => Some(ClassId::RFree),
            ClassFilter::Both if h_free => Some(ClassId::HFree),
            ClassFilter::Both if r_free => Some(ClassId::RFree),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HuntConfig {
    pub class: ClassFilter,
    pub min_delta: usize,
    /// Cap for each of the ω and χ computations; `None` skips χ.
    pub chi_timeout: Option<Duration>,
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

impl Default for HuntConfig {
    fn default() -> Self {
        Self {
            class: ClassFilter::Both,
            min_delta: 9,
            chi_timeout: Some(Duration::from_millis(10_000)),
            jobs: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    BoundMet,
    BoundViolationCandidate,
    OffClass,
    SkippedDelta,
    SkippedTimeout,
    /// Over budget with `Δ` below 9, where no bound is claimed.
    BoundExceeded,
    /// The engine's own trace failed to replay to its coloring.
    InternalFailure,
}

impl Verdict {
    pub const ALL: [Verdict; 7] = [
        Verdict::BoundMet,
        Verdict::BoundViolationCandidate,
        Verdict::OffClass,
        Verdict::SkippedDelta,
        Verdict::SkippedTimeout,
        Verdict::BoundExceeded,
        Verdict::InternalFailure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verdict::BoundMet => "BOUND_MET",
            Verdict::BoundViolationCandidate => "BOUND_VIOLATION_CANDIDATE",
            Verdict::OffClass => "OFF_CLASS",
            Verdict::SkippedDelta => "SKIPPED_DELTA",
            Verdict::SkippedTimeout => "SKIPPED_TIMEOUT",
            Verdict::BoundExceeded => "BOUND_EXCEEDED",
            Verdict::InternalFailure => "INTERNAL_FAILURE",
        }
    }
}

/// One output line. Field order is the serialized key order.
#[derive(Debug, Clone, Serialize)]
pub struct HuntReport {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub delta: usize,
    pub omega: Option<usize>,
    pub h_free: bool,
    pub r_free: bool,
    pub bound: Option<usize>,
    pub colors_used: Option<usize>,
    pub exact_chi: Option<usize>,
    #[serde(serialize_with = "histogram_map")]
    pub schemas: SchemaHistogram,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

fn histogram_map<S: Serializer>(h: &SchemaHistogram, s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(None)?;
    for (id, count) in h.iter() {
        map.serialize_entry(id.name(), &count)?;
    }
    map.end()
}

/// A report plus the trace text it was verified from, when coloring ran.
#[derive(Debug, Clone)]
pub struct HuntOutcome {
    pub report: HuntReport,
    pub trace: Option<String>,
}

/// Classifies, colors and re-verifies one graph.
pub fn hunt_graph(rec: &GraphRecord, cfg: &HuntConfig) -> HuntOutcome {
    let g = &rec.graph;
    let delta = g.max_degree();
    let h_free = find_h_witness(g).is_none();
    let r_free = find_r_witness(g).is_none();
    let mut report = HuntReport {
        index: rec.index,
        graph6: rec.graph6.clone(),
        n: g.order(),
        delta,
        omega: None,
        h_free,
        r_free,
        bound: None,
        colors_used: None,
        exact_chi: None,
        schemas: SchemaHistogram::default(),
        verdict: Verdict::SkippedDelta,
        detail: None,
    };
    if delta < cfg.min_delta {
        return HuntOutcome { report, trace: None };
    }
    let Some(class) = cfg.class.admit(h_free, r_free) else {
        report.verdict = Verdict::OffClass;
        return HuntOutcome { report, trace: None };
    };
    let deadline = Deadline::from_option(cfg.chi_timeout);
    if max_clique_within(g, &deadline).is_err() {
        report.verdict = Verdict::SkippedTimeout;
        return HuntOutcome { report, trace: None };
    }

    let out = match bk_color(g, class) {
        Ok(out) => out,
        Err(e) => {
            report.verdict = Verdict::InternalFailure;
            report.detail = Some(e.to_string());
            return HuntOutcome { report, trace: None };
        }
    };
    report.omega = Some(out.omega);
    report.bound = Some(out.budget);
    report.colors_used = Some(out.colors_used);
    report.schemas = out.histogram.clone();
    if let Some(cap) = cfg.chi_timeout {
        report.exact_chi = chromatic_number_within(g, &Deadline::after(cap)).ok().map(|(chi, _)| chi);
    }

    let text = out.trace.to_text();
    let checked = match verify_trace_text(g, &text, out.budget) {
        Ok(v) => v,
        Err(e) => {
            report.verdict = Verdict::InternalFailure;
            report.detail = Some(e.to_string());
            return HuntOutcome { report, trace: Some(text) };
        }
    };
    let mismatch = match &checked.coloring {
        None => Some(format!("trace does not replay: {}", checked.violations.join("; "))),
        Some(c) if *c != out.coloring => Some("trace replays to a different coloring".into()),
        Some(_) => None,
    };
    if let Some(detail) = mismatch {
        report.verdict = Verdict::InternalFailure;
        report.detail = Some(detail);
        return HuntOutcome { report, trace: Some(text) };
    }

    let z_fired = out.histogram.get(SchemaId::Z) > 0;
    report.verdict = if delta >= 9 && (!checked.passed() || z_fired) {
        Verdict::BoundViolationCandidate
    } else if checked.passed() {
        Verdict::BoundMet
    } else {
        Verdict::BoundExceeded
    };
    if !checked.passed() {
        report.detail = Some(checked.violations.join("; "));
    }
    HuntOutcome { report, trace: Some(text) }
}

#[derive(Debug, Clone, Default)]
pub struct HuntSummary {
    pub graphs: usize,
    pub input_errors: usize,
    verdicts: [usize; Verdict::ALL.len()],
    /// Extension steps over all colored graphs.
    pub histogram: SchemaHistogram,
}

impl HuntSummary {
    pub fn count(&self, v: Verdict) -> usize {
        self.verdicts[v as usize]
    }

    fn add(&mut self, r: &HuntReport) {
        self.graphs += 1;
        self.verdicts[r.verdict as usize] += 1;
        self.histogram.merge(&r.schemas);
    }

    /// 3 on internal failure, 1 on a violation candidate, 2 on input errors
    /// under `strict`, else 0.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.count(Verdict::InternalFailure) > 0 {
            3
        } else if self.count(Verdict::BoundViolationCandidate) > 0 {
            1
        } else if strict && self.input_errors > 0 {
            2
        } else {
            0
        }
    }

    pub fn write_text(&self, w: &mut dyn Write) -> io::Result<()> {
        writeln!(w, "graphs {}", self.graphs)?;
        writeln!(w, "input_errors {}", self.input_errors)?;
        for v in Verdict::ALL {
            writeln!(w, "{} {}", v.name(), self.count(v))?;
        }
        writeln!(w, "extensions {}", self.histogram.total())?;
        for id in SchemaId::ALL {
            writeln!(w, "schema {} {}", id.name(), self.histogram.get(id))?;
        }
        Ok(())
    }
}

/// Runs the hunt over `records`, writing report lines to `out` and parse
/// errors to `diag`. Records with index at or below `skip_through` are
/// dropped unprocessed.
pub fn run_hunt<I>(
    records: I,
    out: &mut dyn Write,
    diag: &mut dyn Write,
    cfg: &HuntConfig,
    skip_through: Option<usize>,
) -> Result<HuntSummary>
where
    I: Iterator<Item = RecordResult>,
{
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().context("building worker pool")?;
    let mut summary = HuntSummary::default();
    let mut records = records.filter(|r| {
        let index = match r {
            Ok(rec) => rec.index,
            Err(e) => e.index,
        };
        skip_through.is_none_or(|s| index > s)
    });
    loop {
        let chunk: Vec<RecordResult> = records.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let done: Vec<Result<HuntReport, String>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|r| match r {
                    Ok(rec) => Ok(hunt_graph(rec, cfg).report),
                    Err(e) => Err(format!("line {}: {}", e.line, e.message)),
                })
                .collect()
        });
        for item in done {
            match item {
                Ok(report) => {
                    serde_json::to_writer(&mut *out, &report)?;
                    out.write_all(b"\n")?;
                    summary.add(&report);
                }
                Err(msg) => {
                    summary.input_errors += 1;
                    writeln!(diag, "{msg}")?;
                }
            }
        }
    }
    out.flush()?;
    Ok(summary)
}

/// Largest report index already in `path`, after dropping a trailing
/// partial line left by an interrupted run.
pub fn resume_point(path: &Path) -> Result<Option<usize>> {
    let Ok(file) = File::open(path) else {
        return Ok(None);
    };
    let mut last = None;
    let mut complete_len = 0u64;
    let mut reader = BufReader::new(file);
    let mut line = String::new();
    loop {
        line.clear();
        let read = reader.read_line(&mut line)?;
        if read == 0 || !line.ends_with('\n') {
            break;
        }
        complete_len += read as u64;
        let value: serde_json::Value = serde_json::from_str(&line)
            .with_context(|| format!("{}: unreadable report line", path.display()))?;
        if let Some(i) = value.get("index").and_then(serde_json::Value::as_u64) {
            last = Some(last.map_or(i as usize, |l: usize| l.max(i as usize)));
        }
    }
    OpenOptions::new().write(true).open(path)?.set_len(complete_len)?;
    Ok(last)
}
