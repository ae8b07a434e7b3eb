use criterion::{black_box, criterion_group, criterion_main, Criterion};

use ffec_core::algebra::{Fq, FunctionField};
use ffec_core::lfunction::{euler_series, frobenius_trace, l_polynomial};
use ffec_core::local::global_data;
use ffec_core::weierstrass::{Curve, Weierstrass};

fn curve(p: u64, a: [&[i64]; 5]) -> Curve {
    Curve::from_coeff_lists(&FunctionField::new(Fq::new(p, 1).unwrap()), a)
}

fn traces(c: &mut Criterion) {
    for (p, f) in [(3u64, 7u32), (5, 6), (7, 5), (2, 16)] {
        let e = Weierstrass::from_ints(Fq::new(p, f).unwrap(), [0, 0, 0, 1, 1]);
        c.bench_function(&format!("frobenius_trace {p}^{f}"), |b| b.iter(|| frobenius_trace(black_box(&e), 7)));
    }
}

fn series(c: &mut Criterion) {
    let e = curve(5, [&[], &[1, 0, 0, 1], &[], &[0, 0, 0, 1], &[]]);
    let g = global_data(&e).unwrap();
    c.bench_function("euler_series cubic twist F_5 m=6", |b| b.iter(|| euler_series(black_box(&g), 6).unwrap()));
}

fn lpoly(c: &mut Criterion) {
    let mut grp = c.benchmark_group("l_polynomial");
    grp.sample_size(10);
    let e8 = curve(3, [&[1], &[], &[], &[0, 1], &[]]);
    grp.bench_function("E8 F_3", |b| b.iter(|| l_polynomial(black_box(&e8)).unwrap()));
    let tw = curve(5, [&[], &[1, 0, 0, 1], &[], &[0, 0, 0, 1], &[]]);
    grp.bench_function("cubic twist F_5", |b| b.iter(|| l_polynomial(black_box(&tw)).unwrap()));
    grp.finish();
}

criterion_group!(benches, traces, series, lpoly);
criterion_main!(benches);
