//! Same workloads on a one-thread pool and on the default pool.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use hopfkit::algebra::{algebra_verify, radical};
use hopfkit::catalog::catalog_get;
use hopfkit::hopf::{bialgebra_violations, coradical_filtration, fingerprint};

fn pools(c: &mut Criterion) {
    let one = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = ThreadPoolBuilder::new().build().unwrap();
    let tt = catalog_get("TT").unwrap();
    let c4 = catalog_get("kC4xC4").unwrap();
    let a = catalog_get("A").unwrap();

    let mut g = c.benchmark_group("pool");
    g.sample_size(10);
    for (label, pool) in [("1-thread", &one), ("default", &all)] {
        g.bench_with_input(BenchmarkId::new("algebra_verify/TT", label), pool, |b, p| {
            b.iter(|| p.install(|| algebra_verify(tt.alg())))
        });
        g.bench_with_input(BenchmarkId::new("bialgebra/TT", label), pool, |b, p| {
            b.iter(|| p.install(|| bialgebra_violations(&tt)))
        });
        g.bench_with_input(BenchmarkId::new("radical/TT", label), pool, |b, p| {
            b.iter(|| p.install(|| radical(tt.alg()).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("coradical/kC4xC4", label), pool, |b, p| {
            b.iter(|| p.install(|| coradical_filtration(&c4).unwrap()))
        });
        g.bench_with_input(BenchmarkId::new("fingerprint/A", label), pool, |b, p| {
            b.iter(|| p.install(|| fingerprint(&a).unwrap()))
        });
    }
    g.finish();
}

criterion_group!(benches, pools);
criterion_main!(benches);
