use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtlattice_bench::{lattice, INSTANCES};
use gtlattice_core::{build_lattice, check_sl_relations, force_all, label_all, verify_all, DiamondMode, Partition};

fn pipeline(c: &mut Criterion) {
    for &(shape, n) in INSTANCES {
        let id = format!("{shape}/n{n}");
        let p: Partition = shape.parse().unwrap();
        let l = lattice(shape, n);
        let lab = label_all(&l).unwrap();
        c.bench_with_input(BenchmarkId::new("build", &id), &p, |b, p| b.iter(|| build_lattice(p, n).unwrap()));
        c.bench_with_input(BenchmarkId::new("label", &id), &l, |b, l| b.iter(|| label_all(l).unwrap()));
        c.bench_with_input(BenchmarkId::new("verify", &id), &l, |b, l| {
            b.iter(|| verify_all(l, &lab, DiamondMode::SharedCovers))
        });
        c.bench_with_input(BenchmarkId::new("relations", &id), &l, |b, l| b.iter(|| check_sl_relations(l, &lab)));
        c.bench_with_input(BenchmarkId::new("force", &id), &l, |b, l| b.iter(|| force_all(l).unwrap()));
    }
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
