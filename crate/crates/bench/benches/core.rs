use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use thetabound::bounds::region_psi_v;
use thetabound::cf::{convergents, rcf_expand_rational, RealSpec};
use thetabound::numeric::rat;
use thetabound::theta::{mu_measure, psi, psi_inverse, theta_direct};
use thetabound::verify::{run_suite, CheckId, Family, SweepConfig};
use thetabound::QuadSurd;

fn golden() -> QuadSurd {
    QuadSurd::new(-1, 1, 5, 2).unwrap()
}

fn expansion(c: &mut Criterion) {
    c.bench_function("expand 201/20201", |b| b.iter(|| rcf_expand_rational(black_box(&rat(201, 20201))).unwrap()));
    let g = RealSpec::surd(golden()).unwrap();
    c.bench_function("golden convergents depth 200", |b| b.iter(|| convergents(black_box(&g), 200).unwrap()));
    let x = RealSpec::surd(QuadSurd::new(-3, 1, 19, 5).unwrap()).unwrap();
    c.bench_function("theta_direct surd n=100", |b| b.iter(|| theta_direct(black_box(&x), 100).unwrap()));
}

fn geometry(c: &mut Criterion) {
    let t = QuadSurd::new(-3, 1, 19, 5).unwrap();
    let v = QuadSurd::from_rational(&rat(5, 13));
    c.bench_function("psi then psi_inverse", |b| {
        b.iter(|| psi_inverse(&psi(black_box(&t), black_box(&v)).unwrap()).unwrap())
    });
    let r = region_psi_v(2).unwrap();
    c.bench_function("mu_measure V_2 tol 1e-6", |b| b.iter(|| mu_measure(black_box(&r), 1e-6).unwrap()));
}

fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("sweeps");
    g.sample_size(10);
    g.bench_function("rationals q<=60 all checks", |b| {
        let cfg = SweepConfig::new(Family::Rationals { max_q: 60 }, CheckId::ALL.to_vec());
        b.iter(|| run_suite(&cfg).unwrap())
    });
    g.bench_function("surds D<=8 |p|,q<=3 depth 40", |b| {
        let cfg = SweepConfig::new(Family::Surds { max_d: 8, max_coeff: 3, depth: 40 }, CheckId::ALL.to_vec());
        b.iter(|| run_suite(&cfg).unwrap())
    });
    g.finish();
}

criterion_group!(benches, expansion, geometry, sweeps);
criterion_main!(benches);
