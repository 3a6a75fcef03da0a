use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hilb2_core::chart::build_chart;
use hilb2_core::{Grading, MonomialIdeal, Poset};

fn posets(c: &mut Criterion) {
    let g = Grading::trivial();
    let mut group = c.benchmark_group("poset_build");
    for n in [5u32, 7, 9] {
        let h = MonomialIdeal::from_partition(&[n]).unwrap().hilbert_function(&g).unwrap();
        group
            .bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| b.iter(|| Poset::build(h, &g).unwrap().len()));
    }
    group.finish();
}

fn charts(c: &mut Criterion) {
    let g = Grading::integer(1, 1);
    let h = MonomialIdeal::from_partition(&[4, 3, 2, 1]).unwrap().hilbert_function(&g).unwrap();
    c.bench_function("chart_build", |b| b.iter(|| build_chart(&h, &g).unwrap().d()));
}

criterion_group!(benches, posets, charts);
criterion_main!(benches);
