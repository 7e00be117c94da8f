//! Benchmarks for the hot paths: basis computation, limit closures, one
//! full table row, and Frobenius-power length counting.

use criterion::{criterion_group, criterion_main, Criterion};
use parafrac_bench::{node, two_planes};
use parafrac_core::{
    hk_function, ij_row, limit_closure_of_sequence, multiplicity, ParamSystem, Submodule,
    DEFAULT_HK_BUDGET, DEFAULT_STAB_CAP,
};
use std::hint::black_box;

fn bench_groebner(c: &mut Criterion) {
    let (r, m, _) = two_planes();
    let gens: Vec<_> = m
        .relations()
        .generators()
        .iter()
        .map(|g| g.component(&r, 0))
        .collect();
    c.bench_function("groebner_two_planes", |b| {
        b.iter(|| {
            let w = Submodule::ideal(r.clone(), black_box(&gens)).unwrap();
            black_box(w.gb().elements().len())
        })
    });
}

fn bench_limit_closure(c: &mut Criterion) {
    let (r, m, sop) = two_planes();
    let powered: Vec<_> = sop.iter().map(|p| r.pow(p, 2)).collect();
    c.bench_function("limit_closure_two_planes_n22", |b| {
        b.iter(|| {
            let clo = limit_closure_of_sequence(&m, black_box(&powered), DEFAULT_STAB_CAP).unwrap();
            black_box(clo.stabilized_at)
        })
    });
}

fn bench_table_row(c: &mut Criterion) {
    let (_, m, sop) = two_planes();
    let sys = ParamSystem::new(&m, sop).unwrap();
    let e_base = multiplicity(&m, &sys).unwrap();
    c.bench_function("table_row_two_planes_n23", |b| {
        b.iter(|| {
            let row = ij_row(&m, &sys, e_base, black_box(&[2, 3]), DEFAULT_STAB_CAP).unwrap();
            black_box(row.i_val + row.j_val)
        })
    });
}

fn bench_hk_lengths(c: &mut Criterion) {
    let (r, m) = node();
    let vars = vec![r.var(0), r.var(1)];
    c.bench_function("hk_node_e4", |b| {
        b.iter(|| {
            let series = hk_function(&m, black_box(&vars), 4, DEFAULT_HK_BUDGET).unwrap();
            black_box(series.values.len())
        })
    });
}

criterion_group!(
    benches,
    bench_groebner,
    bench_limit_closure,
    bench_table_row,
    bench_hk_lengths
);
criterion_main!(benches);
