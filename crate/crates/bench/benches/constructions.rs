use cohom_core::cohom::{build_cohom, check_in_omega, coevaluation_check};
use cohom_core::exactla::Subspace;
use cohom_core::products::{koszul_dual, triangle, white_product};
use cohom_core::{Field, Matrix, Primitive, QuantumSpace, RatFunc};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn plane(d: usize) -> QuantumSpace<RatFunc> {
    QuantumSpace::quantum_plane(&RatFunc::q(), d)
}

fn sigma(s: i64, d: usize) -> Primitive<RatFunc> {
    Primitive::from_sigma(&Matrix::diagonal(&[RatFunc::from_i64(s), RatFunc::q()]), d).unwrap()
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("products");
    for d in [3, 4] {
        let p = plane(d);
        g.bench_with_input(BenchmarkId::new("triangle", d), &p, |b, p| b.iter(|| triangle(p, p).unwrap()));
        g.bench_with_input(BenchmarkId::new("koszul_dual", d), &p, |b, p| b.iter(|| koszul_dual(p).unwrap()));
    }
    g.finish();
}

fn cohom(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohom");
    g.sample_size(10);
    for d in [3, 4] {
        let p = plane(d);
        let (ta, tb) = (sigma(2, d), sigma(3, d));
        g.bench_function(BenchmarkId::new("build", d), |b| b.iter(|| build_cohom(&p, &p, &ta, &tb).unwrap()));
        let h = build_cohom(&p, &p, &ta, &tb).unwrap();
        g.bench_function(BenchmarkId::new("coevaluation_check", d), |b| b.iter(|| coevaluation_check(&h).unwrap()));
        let diag = h.coevaluation_diagram();
        g.bench_function(BenchmarkId::new("check_in_omega", d), |b| b.iter(|| check_in_omega(&diag, &ta, &tb).unwrap()));
    }
    g.finish();
}

/// Subalgebra of a lazy white product generated by its degree-1 part.
fn white_generated(c: &mut Criterion) {
    let p = plane(4);
    let w = white_product(&p, &p).unwrap();
    let full = Subspace::full(w.n());
    c.bench_function("white/generated", |b| b.iter(|| w.generated(&full).unwrap()));
}

criterion_group!(benches, products, cohom, white_generated);
criterion_main!(benches);
