use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use gentle_mar::bar::{bar_algebra, tilting_check};
use gentle_mar::endo::endomorphism_presentation;
use gentle_mar::homext::{ext1_basis, hom_basis};
use gentle_mar::mar::{enumerate_mars, m_proj};
use gentle_mar::oracle::{crosscheck, Field};
use gentle_mar::strings::enumerate_strings;
use gentle_mar_bench::workloads;

fn strings(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_strings");
    for (name, q) in workloads() {
        g.bench_with_input(BenchmarkId::from_parameter(&name), &q, |b, q| b.iter(|| enumerate_strings(q, 4)));
    }
    g.finish();
}

fn hom_ext(c: &mut Criterion) {
    let mut g = c.benchmark_group("hom_ext_all_pairs");
    for (name, q) in workloads() {
        let ws: Vec<_> = enumerate_strings(&q, 3).into_iter().collect();
        g.bench_function(BenchmarkId::from_parameter(&name), |b| {
            b.iter(|| {
                let mut n = 0;
                for v in &ws {
                    for w in &ws {
                        n += hom_basis(&q, v, w).len() + ext1_basis(&q, v, w).dim();
                    }
                }
                black_box(n)
            })
        });
    }
    g.finish();
}

fn mars(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_mars");
    g.sample_size(10);
    for (name, q) in workloads() {
        g.bench_with_input(BenchmarkId::from_parameter(&name), &q, |b, q| b.iter(|| enumerate_mars(q, 3)));
    }
    g.finish();
}

fn derived(c: &mut Criterion) {
    let mut g = c.benchmark_group("mproj_constructions");
    for (name, q) in workloads() {
        let t = m_proj(&q);
        g.bench_function(BenchmarkId::new("endo", &name), |b| b.iter(|| endomorphism_presentation(&q, &t)));
        g.bench_function(BenchmarkId::new("tilting", &name), |b| {
            b.iter(|| {
                let bar = bar_algebra(&q);
                tilting_check(&bar.bar, &bar.g_set(&t))
            })
        });
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let f = Field::default();
    let mut g = c.benchmark_group("oracle_crosscheck");
    g.sample_size(10);
    for (name, q) in workloads().into_iter().take(3) {
        g.bench_with_input(BenchmarkId::from_parameter(&name), &q, |b, q| b.iter(|| crosscheck(&f, q, 3)));
    }
    g.finish();
}

criterion_group!(benches, strings, hom_ext, mars, derived, oracle);
criterion_main!(benches);
