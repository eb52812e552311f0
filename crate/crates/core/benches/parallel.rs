use std::hint::black_box;

use bv_core::counterexample::s_n;
use bv_core::exec::Exec;
use bv_core::fixtures::S0;
use bv_core::parse;
use bv_core::prover::{first_redex_analysis_with, prove_all, DEFAULT_BUDGET};
use bv_core::web::{verify_web_properties_with, web_of};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn web_properties(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_web_properties");
    for n in [1, 2] {
        let w = web_of(&s_n(n).structure);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, format!("S{n}")), &w, |b, w| {
                b.iter(|| verify_web_properties_with(black_box(w), exec))
            });
        }
    }
    g.finish();
}

fn first_redex(c: &mut Criterion) {
    let goal = parse(S0).unwrap();
    let mut g = c.benchmark_group("first_redex_s0");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| first_redex_analysis_with(black_box(&goal), DEFAULT_BUDGET, exec)));
    }
    g.finish();
}

fn batch_prove(c: &mut Criterion) {
    let goals: Vec<_> = [
        S0,
        "[<a;b>,<~a;~b>,(c,d),~c,~d]",
        "[(a,~b),(~a,b)]",
        "[<[a,b];c>,<~a;~b>,~c]",
        "[<a;~b>,<b;~a>,c,~c]",
        "[(a,<b;c>),~a,<~b;~c>]",
    ]
    .iter()
    .map(|t| parse(t).unwrap())
    .collect();
    let mut g = c.benchmark_group("prove_all");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| prove_all(black_box(&goals), DEFAULT_BUDGET, exec)));
    }
    g.finish();
}

criterion_group!(benches, web_properties, first_redex, batch_prove);
criterion_main!(benches);
