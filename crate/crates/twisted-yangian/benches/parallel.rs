use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use twisted_yangian::algebra::Case;
use twisted_yangian::par;
use twisted_yangian::suites::{evaluation, minor_routes, skew_sweep, symplectic_skew};

fn minors(c: &mut Criterion) {
    let fam = evaluation(Case::Symplectic, 4, Some(&[-1, -1])).unwrap();
    let mut g = c.benchmark_group("minor_routes");
    g.sample_size(10);
    for on in [false, true] {
        g.bench_with_input(BenchmarkId::new(if on { "parallel" } else { "sequential" }, "sp4 V(-1,-1)"), &on, |b, &on| {
            par::set_enabled(on);
            b.iter(|| minor_routes(&fam, 3, 0));
        });
    }
    g.finish();
}

fn skew_build(c: &mut Criterion) {
    let sweep = skew_sweep(&[(2, 1)], 2);
    let mut g = c.benchmark_group("skew_modules");
    g.sample_size(10);
    for on in [false, true] {
        g.bench_with_input(BenchmarkId::new(if on { "parallel" } else { "sequential" }, sweep.len()), &on, |b, &on| {
            par::set_enabled(on);
            b.iter(|| par::map(&sweep, |(l, mu)| symplectic_skew(l, mu).map(|s| s.dim()).unwrap()));
        });
    }
    g.finish();
    par::set_enabled(true);
}

criterion_group!(benches, minors, skew_build);
criterion_main!(benches);
