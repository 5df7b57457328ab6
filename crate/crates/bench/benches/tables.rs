use abelcover_core::local::{classify, enumerate_table, regenerate_table, DupPattern, LocalConfig};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn regenerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("regenerate_table");
    for t in 1..=9u8 {
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            b.iter(|| regenerate_table(black_box(t)).unwrap())
        });
    }
    group.finish();
    c.bench_function("enumerate_all_tables", |b| {
        b.iter(|| (1..=9u8).map(|t| enumerate_table(t).unwrap().len()).sum::<usize>())
    });
}

fn lookup(c: &mut Criterion) {
    let cfg = LocalConfig::smooth(3, vec![0b001, 0b010, 0b011, 0b100], DupPattern::FirstPair).unwrap();
    c.bench_function("classify_4p5", |b| b.iter(|| classify(black_box(&cfg)).unwrap()));
}

criterion_group!(benches, regenerate, lookup);
criterion_main!(benches);
