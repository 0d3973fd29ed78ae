//! Benchmarks for the exact-arithmetic kernels: certified series
//! evaluation, the two power-sum routes, fixed-point solves, and the
//! full certified radius.

#![allow(clippy::result_large_err)]

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use besselrad::asympt::{leading_constant_with, Wiring};
use besselrad::exactnum::{parse_rational, rat_int};
use besselrad::potpoly::power_sums_via_potential;
use besselrad::radii::{direct_radius_t, RadiusKind};
use besselrad::rayleigh::power_sums;
use besselrad::series::{eval_certified, Order, SeriesFamily};

fn bench_eval_certified(c: &mut Criterion) {
    let order = Order::from_int(50).unwrap();
    let t = rat_int(27);
    let tol = parse_rational("1e-20").unwrap();
    c.bench_function("eval_certified convex-g nu=50 t=27 tol=1e-20", |b| {
        b.iter(|| eval_certified(SeriesFamily::ConvexG, &order, black_box(&t), &tol).unwrap())
    });
}

fn bench_power_sum_routes(c: &mut Criterion) {
    let order = Order::new(parse_rational("7/3").unwrap()).unwrap();
    c.bench_function("power_sums newton k=8", |b| {
        b.iter(|| power_sums(SeriesFamily::UConvexG, black_box(&order), 8))
    });
    c.bench_function("power_sums potential k=8", |b| {
        b.iter(|| power_sums_via_potential(SeriesFamily::UConvexG, black_box(&order), 8))
    });
}

fn bench_leading_constant(c: &mut Criterion) {
    let width = parse_rational("1e-10").unwrap();
    c.bench_function("leading_constant conv-g M=20", |b| {
        b.iter(|| leading_constant_with(RadiusKind::ConvG, Wiring::Published, 20, black_box(&width)))
    });
}

fn bench_direct_radius(c: &mut Criterion) {
    let order = Order::from_int(10).unwrap();
    let tol = parse_rational("1e-9").unwrap();
    let mut group = c.benchmark_group("direct_radius");
    group.sample_size(10);
    group.bench_function("uconv-g nu=10 tol=1e-9", |b| {
        b.iter(|| direct_radius_t(RadiusKind::UconvG, black_box(&order), &tol).unwrap())
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_eval_certified,
    bench_power_sum_routes,
    bench_leading_constant,
    bench_direct_radius
);
criterion_main!(benches);
