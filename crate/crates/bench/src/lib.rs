use bkcolor_cli::gen::{instance, GenSpec};
use bkcolor_cli::hunt::{run_hunt, HuntConfig};
use bkcolor_core::records::RecordReader;
use bkcolor_core::{bk_color, chromatic_number, emit_graph6, max_clique, ClassId, Graph};
use criterion::{BenchmarkId, Criterion, Throughput};
use std::hint::black_box;
use std::io;

/// The first `count` generator instances on `n` vertices with `Δ ≥ 9`.
pub fn sample(class: ClassId, n: usize, count: u64) -> Vec<Graph> {
    let spec = GenSpec { class, order: n..=n, min_delta: 9, seed: 2024 };
    (0..count).map(|i| instance(&spec, i).expect("dense instances exist")).collect()
}

pub fn benchmarks(c: &mut Criterion) {
    oracles(c);
    coloring(c);
    hunt(c);
}

fn oracles(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    for n in [10, 13, 16] {
        let graphs = sample(ClassId::RFree, n, 32);
        group.throughput(Throughput::Elements(graphs.len() as u64));
        group.bench_with_input(BenchmarkId::new("max_clique", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| max_clique(black_box(g)).size).sum::<usize>())
        });
        group.bench_with_input(BenchmarkId::new("chromatic_number", n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| chromatic_number(black_box(g)).0).sum::<usize>())
        });
    }
    group.finish();
}

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("bk_color");
    for class in [ClassId::HFree, ClassId::RFree] {
        for n in [10, 13, 16] {
            let graphs = sample(class, n, 32);
            group.throughput(Throughput::Elements(graphs.len() as u64));
            group.bench_with_input(BenchmarkId::new(class.to_string(), n), &graphs, |b, gs| {
                b.iter(|| {
                    gs.iter().map(|g| bk_color(black_box(g), class).unwrap().colors_used).sum::<usize>()
                })
            });
        }
    }
    group.finish();
}

fn hunt(c: &mut Criterion) {
    let text: String = sample(ClassId::HFree, 11, 256)
        .iter()
        .chain(&sample(ClassId::RFree, 11, 256))
        .map(|g| emit_graph6(g) + "\n")
        .collect();
    let mut group = c.benchmark_group("hunt");
    group.throughput(Throughput::Elements(512));
    group.sample_size(20);
    for jobs in [1, 4] {
        let cfg = HuntConfig { jobs, ..HuntConfig::default() };
        group.bench_with_input(BenchmarkId::new("jobs", jobs), &text, |b, text| {
            b.iter(|| {
                let records = RecordReader::new(text.as_bytes());
                run_hunt(records, &mut io::sink(), &mut io::sink(), &cfg, None).unwrap().graphs
            })
        });
    }
    group.finish();
}
