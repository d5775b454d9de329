use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use liaison_core::bdl::{enumerate_chains_with, EnumOptions};
use liaison_core::eqcoh::enumerate_eqcoh_with;
use liaison_core::{fixtures, Execution};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn chain_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_chains");
    let base = fixtures::two_skew_lines();
    for height in [3usize, 4] {
        for (name, exec) in MODES {
            let opts = EnumOptions {
                dedup: false,
                exec,
                prune: None,
            };
            group.bench_with_input(BenchmarkId::new(name, height), &height, |b, &h| {
                b.iter(|| enumerate_chains_with(black_box(&base), h, 8, &opts))
            });
        }
    }
    group.finish();
}

fn dedup_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_chains_dedup");
    let base = fixtures::l41_minimal();
    for (name, exec) in MODES {
        let opts = EnumOptions {
            dedup: true,
            exec,
            prune: None,
        };
        group.bench_function(name, |b| {
            b.iter(|| enumerate_chains_with(black_box(&base), 3, 16, &opts))
        });
    }
    group.finish();
}

fn eqcoh_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_eqcoh");
    let class = fixtures::l41_class(None);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| enumerate_eqcoh_with(black_box(&class), 7, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, chain_enumeration, dedup_enumeration, eqcoh_enumeration);
criterion_main!(benches);
