use braidmat::fusion::TowerKind;
use braidmat::*;
use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

fn structured_apply_word(c: &mut Criterion) {
    // 100 generators on 12 strands of local dimension 2 (state dim 4096)
    let n = 1;
    let m = 12;
    let dim = 2usize.pow(m as u32);
    let amps: Vec<Complex64> = (0..dim)
        .map(|i| Complex64::new((i as f64 * 0.37).sin(), (i as f64 * 0.11).cos()))
        .collect();
    let v0 = StrandVector::new(n, m, amps).unwrap();
    let ops: Vec<(StructuredBraidOp, usize)> = (0..100)
        .map(|i| {
            let sign = if i % 3 == 0 { Sign::Minus } else { Sign::Plus };
            (StructuredBraidOp::new(n, sign, 1.0, BraidClass::KJ), 1 + i % (m - 1))
        })
        .collect();
    c.bench_function("structured_apply_100_letters_dim4096", |b| {
        b.iter(|| {
            let mut v = v0.clone();
            for (op, slot) in &ops {
                v = apply_generator(op, *slot, &v).unwrap();
            }
            black_box(v)
        })
    });
}

fn braid_residual_n4(c: &mut Criterion) {
    // streamed triple-product residual on the 512-dimensional space
    c.bench_function("check_braid_n4_z1", |b| {
        let r = braid_hat(4, BraidClass::KJ, 1.0);
        b.iter(|| black_box(check_braid(&r).unwrap()))
    });
}

fn tower_order6(c: &mut Criterion) {
    c.bench_function("tower_n2_order6", |b| {
        b.iter(|| black_box(tower(TowerKind::L, BraidClass::KJ, 2, 0.5, 6).unwrap()))
    });
}

fn invariant_eval(c: &mut Criterion) {
    let sys = build_enhanced(1, &[1.0]).unwrap();
    let word = BraidWord::new(6, vec![1, 2, 3, -4, 5, 1, -2, 3]).unwrap();
    c.bench_function("invariant_6_strands_8_letters", |b| {
        b.iter(|| black_box(invariant(&sys, &word, 1.0).unwrap()))
    });
}

criterion_group!(benches, structured_apply_word, braid_residual_n4, tower_order6, invariant_eval);
criterion_main!(benches);
