use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use quintic_bench::{e6_orbit, wahl_ladder};
use quintic_core::ade::Family;
use quintic_core::flopsim::{FiberState, TieBreak};
use quintic_core::localint::config::enumerate;
use quintic_core::localint::{mult, normal_form, separation, GraphCurve, Orientation};
use quintic_core::qsing::{discrepancies, hj_eval, hj_expand};

fn qsing(c: &mut Criterion) {
    let ladder = wahl_ladder(12);
    let fractions: Vec<_> = ladder.iter().map(hj_eval).collect();
    c.bench_function("hj_expand", |b| {
        b.iter(|| fractions.iter().map(|f| hj_expand(black_box(f)).unwrap().len()).sum::<usize>())
    });
    c.bench_function("discrepancies", |b| {
        b.iter(|| ladder.iter().map(|t| discrepancies(black_box(t)).unwrap().values().len()).sum::<usize>())
    });
}

fn flops(c: &mut Criterion) {
    let (rs, starts) = e6_orbit();
    let omega = rs.fundamental_weight(0).unwrap();
    c.bench_function("e6_orbit_reduction", |b| {
        b.iter(|| {
            starts
                .iter()
                .map(|a| {
                    let s = FiberState::new(&rs, omega.clone(), a.clone()).unwrap();
                    s.reduce(TieBreak::MostNegative).unwrap().steps.len()
                })
                .sum::<usize>()
        })
    });
}

fn local(c: &mut Criterion) {
    let b8 = normal_form(Family::E, 8, 24).unwrap();
    let d = GraphCurve::from_ints(Orientation::YOfX, &[0, 0, 1, 1]).unwrap();
    c.bench_function("mult_e8", |b| b.iter(|| mult(black_box(&b8), black_box(&d)).unwrap()));
    let a9 = normal_form(Family::A, 9, 24).unwrap();
    let tangent = GraphCurve::from_ints(Orientation::XOfY, &[0, 0, 0, 0, 1]).unwrap();
    c.bench_function("separation_a9", |b| b.iter(|| separation(black_box(&a9), black_box(&tangent)).unwrap()));
    let mut g = c.benchmark_group("enumeration");
    g.sample_size(10);
    g.bench_function("configs_rank6_k3", |b| b.iter(|| enumerate(6, 3).unwrap().len()));
    g.finish();
}

criterion_group!(benches, qsing, flops, local);
criterion_main!(benches);
