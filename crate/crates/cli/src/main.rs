use anyhow::{Context, Result};
use bkcolor_cli::commands::{self, ColorOptions, OracleWhat};
use bkcolor_cli::gen::{instance, GenSpec};
use bkcolor_cli::hunt::{resume_point, run_hunt, ClassFilter, HuntConfig};
use bkcolor_cli::input::{records, single_graph};
use bkcolor_cli::verify::{default_budget, verify_coloring_text, verify_trace_text};
use bkcolor_core::{emit_graph6, ClassId};
use clap::{Parser, Subcommand};
use std::fs::OpenOptions;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

/// Coloring within max(ω, Δ−1) for {P3∪K1}-free and {K2∪2K1}-free graphs.
///
/// Graph inputs are graph6 lines or edge-list blocks (an `n m` header then
/// `m` lines `v w`), read from a file or stdin.
#[derive(Parser)]
#[command(name = "bkcolor", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class flags and induced-pattern witnesses.
    Classify {
        input: Option<PathBuf>,
        #[arg(long)]
        strict: bool,
    },
    /// Color each graph within max(ω, Δ−1) by peeling and reinsertion.
    Color {
        input: Option<PathBuf>,
        #[arg(long, default_value = "h")]
        class: ClassId,
        /// Write each move trace here; `{}` becomes the record index.
        #[arg(long)]
        trace: Option<String>,
        #[arg(long)]
        strict: bool,
    },
    /// Exact clique number and chromatic number.
    Oracle {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        what: OracleWhat,
        /// Per-graph cap; 0 disables it.
        #[arg(long, default_value_t = 10_000)]
        timeout_ms: u64,
        #[arg(long)]
        strict: bool,
    },
    /// Check a trace or coloring file against a graph.
    Verify {
        /// graph6 text, or a file holding one graph.
        graph: String,
        #[arg(long, conflicts_with = "coloring", required_unless_present = "coloring")]
        trace: Option<PathBuf>,
        /// Whitespace-separated colors, 0 for uncolored.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Defaults to max(ω, Δ−1).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Color and verify every graph in a corpus, one report line per graph.
    Hunt {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        class: ClassFilter,
        #[arg(long, default_value_t = 9)]
        min_delta: usize,
        /// Worker threads; 0 for one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Cap on each exact ω and χ computation; 0 skips χ.
        #[arg(long, default_value_t = 10_000)]
        chi_timeout_ms: u64,
        /// Report file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip records already reported in --out.
        #[arg(long, requires = "out")]
        resume: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Random class members as graph6 lines.
    Gen {
        #[arg(long, default_value = "h")]
        class: ClassId,
        #[arg(long, default_value_t = 10)]
        min_n: usize,
        #[arg(long, default_value_t = 16)]
        max_n: usize,
        #[arg(long, default_value_t = 9)]
        min_delta: usize,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All graphs on n ≤ 8 vertices up to isomorphism, as graph6 lines.
    Enumerate {
        n: usize,
        #[arg(long)]
        connected: bool,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn strict_code(strict: bool, input_errors: usize) -> u8 {
    if strict && input_errors > 0 {
        2
    } else {
        0
    }
}

fn run(cli: Cli) -> Result<u8> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Classify { input, strict } => {
            let t = commands::classify(records(input.as_deref())?, &mut out)?;
            Ok(strict_code(strict, t.input_errors))
        }
        Command::Color { input, class, trace, strict } => {
            let t = commands::color(records(input.as_deref())?, &mut out, &ColorOptions { class, trace })?;
            Ok(strict_code(strict, t.input_errors))
        }
        Command::Oracle { input, what, timeout_ms, strict } => {
            let cap = (timeout_ms > 0).then(|| Duration::from_millis(timeout_ms));
            let t = commands::oracle(records(input.as_deref())?, &mut out, what, cap)?;
            Ok(strict_code(strict, t.input_errors))
        }
        Command::Verify { graph, trace, coloring, budget } => {
            let g = single_graph(&graph)?;
            let budget = budget.unwrap_or_else(|| default_budget(&g));
            let report = match (trace, coloring) {
                (Some(p), _) => {
                    let text =
                        std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    verify_trace_text(&g, &text, budget)
                }
                (None, Some(p)) => {
                    let text =
                        std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    verify_coloring_text(&g, &text, budget)
                }
                (None, None) => unreachable!("clap requires one certificate"),
            };
            let report = match report {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(2);
                }
            };
            if report.passed() {
                writeln!(out, "PASS colors={} budget={}", report.colors_used(), budget)?;
                return Ok(0);
            }
            writeln!(out, "FAIL budget={budget}")?;
            for v in &report.violations {
                writeln!(out, "  {v}")?;
            }
            Ok(1)
        }
        Command::Hunt { input, class, min_delta, jobs, chi_timeout_ms, out: out_path, resume, strict } => {
            let cfg = HuntConfig {
                class,
                min_delta,
                chi_timeout: (chi_timeout_ms > 0).then(|| Duration::from_millis(chi_timeout_ms)),
                jobs,
            };
            let skip = match (&out_path, resume) {
                (Some(p), true) => resume_point(p)?,
                _ => None,
            };
            let recs = records(input.as_deref())?;
            let stderr = io::stderr();
            let mut diag = stderr.lock();
            let summary = match out_path {
                Some(p) => {
                    let file = OpenOptions::new()
                        .create(true)
                        .write(true)
                        .append(resume)
                        .truncate(!resume)
                        .open(&p)
                        .with_context(|| format!("opening {}", p.display()))?;
                    run_hunt(recs, &mut BufWriter::new(file), &mut diag, &cfg, skip)?
                }
                None => run_hunt(recs, &mut out, &mut diag, &cfg, skip)?,
            };
            summary.write_text(&mut diag)?;
            Ok(summary.exit_code(strict) as u8)
        }
        Command::Gen { class, min_n, max_n, min_delta, count, seed } => {
            let spec = GenSpec { class, order: min_n..=max_n, min_delta, seed };
            for i in 0..count {
                let g = instance(&spec, i)
                    .with_context(|| format!("instance {i}: no graph with Δ ≥ {min_delta} found"))?;
                writeln!(out, "{}", emit_graph6(&g))?;
            }
            Ok(0)
        }
        Command::Enumerate { n, connected } => {
            commands::enumerate(n, connected, &mut out)?;
            Ok(0)
        }
    }
}
