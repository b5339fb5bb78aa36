//! Property tests over randomly drawn parameters, sizes and words.

use braidmat::dense::ZERO;
use braidmat::*;
use num_complex::Complex64;
use proptest::prelude::*;

#[test]
fn values_are_shareable_across_threads() {
    fn check<T: Send + Sync>() {}
    check::<ComplexDense>();
    check::<StrandVector>();
    check::<StructuredBraidOp>();
    check::<GeneratorSet>();
    check::<BraidSpec>();
    check::<OddBraidParams>();
    check::<ResidualReport>();
    check::<Tower>();
    check::<ChainSpec>();
    check::<PotentialParams>();
    check::<EnhancedSystem>();
    check::<BraidWord>();
    check::<TwoPartyState>();
    check::<SchmidtProfile>();
}

fn complex_entry() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = ComplexDense> {
    (2..=max_dim).prop_flat_map(move |d| {
        proptest::collection::vec(complex_entry(), d * d)
            .prop_map(move |data| ComplexDense::from_vec(d, d, data).unwrap())
    })
}

fn braid_class() -> impl Strategy<Value = BraidClass> {
    prop_oneof![
        Just(BraidClass::KJ),
        Just(BraidClass::JK),
        Just(BraidClass::KL),
        Just(BraidClass::LK),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_mixed_product(a in small_matrix(3), b in small_matrix(3), c in small_matrix(3), d in small_matrix(3)) {
        prop_assume!(a.rows() == c.rows() && b.rows() == d.rows());
        let lhs = a.kron(&b).mul(&c.kron(&d));
        let rhs = a.mul(&c).kron(&b.mul(&d));
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-12);
    }

    #[test]
    fn partial_trace_of_kron(a in small_matrix(3), b in small_matrix(3)) {
        let t = a.kron(&b).partial_trace_2(a.rows(), b.rows()).unwrap();
        prop_assert!(t.max_abs_diff(&a.scale(b.trace())) <= 1e-12);
    }

    #[test]
    fn swap_exchanges_factors(
        x in proptest::collection::vec(complex_entry(), 3),
        y in proptest::collection::vec(complex_entry(), 3),
    ) {
        let d = 3;
        let p = swap_matrix(d);
        let mut xy = vec![ZERO; d * d];
        let mut yx = vec![ZERO; d * d];
        for a in 0..d {
            for b in 0..d {
                xy[a * d + b] = x[a] * y[b];
                yx[a * d + b] = y[a] * x[b];
            }
        }
        let got = p.mul_vec(&xy);
        for (g, w) in got.iter().zip(&yx) {
            prop_assert!((g - w).norm() <= 1e-14);
        }
    }

    #[test]
    fn braid_family_is_unitary(n in 1usize..=4, class in braid_class(), z in -1.0..1.0f64) {
        let r = braid_hat(n, class, z);
        prop_assert!(check_unitarity(&r, 1e-12).pass);
        prop_assert!(check_quadratic(n, class, z, 1e-12).pass);
    }

    #[test]
    fn baxterized_equation_on_grid(n in 1usize..=4, class in braid_class(), z in -0.95..0.95f64, zp in -0.95..0.95f64) {
        let rep = check_baxterized(n, class, z, zp, 1e-12).unwrap();
        prop_assert!(rep.pass, "{}: {}", rep.check, rep.max_abs);
    }

    #[test]
    fn structured_apply_inverse_pair(
        n in 1usize..=2,
        m in 2usize..=4,
        class in braid_class(),
        z in -1.0..1.0f64,
        slot_seed in 0usize..16,
        seed in proptest::collection::vec(complex_entry(), 256),
    ) {
        let dim = (2 * n).pow(m as u32);
        let v = StrandVector::new(n, m, seed[..dim].to_vec()).unwrap();
        let slot = 1 + slot_seed % (m - 1);
        let fwd = StructuredBraidOp::new(n, Sign::Plus, z, class);
        let bwd = StructuredBraidOp::new(n, Sign::Minus, z, class);
        let back = apply_generator(&bwd, slot, &apply_generator(&fwd, slot, &v).unwrap()).unwrap();
        prop_assert!(back.max_abs_diff(&v) <= 1e-13);
    }

    #[test]
    fn invariant_conjugation(
        letters in proptest::collection::vec((1i64..=2, proptest::bool::ANY), 0..5),
        gamma in proptest::collection::vec((1i64..=2, proptest::bool::ANY), 1..4),
    ) {
        let m = 3;
        let sys = build_enhanced(1, &[1.0]).unwrap();
        let signed = |v: &[(i64, bool)]| -> Vec<i64> {
            v.iter().map(|&(g, s)| if s { g } else { -g }).collect()
        };
        let beta = signed(&letters);
        let gam = signed(&gamma);
        let base = invariant(&sys, &BraidWord::new(m, beta.clone()).unwrap(), 1.0).unwrap();
        let mut conj = gam.clone();
        conj.extend(&beta);
        conj.extend(gam.iter().rev().map(|g| -g));
        let moved = invariant(&sys, &BraidWord::new(m, conj).unwrap(), 1.0).unwrap();
        prop_assert!((base - moved).norm() <= 1e-10 * base.norm().max(1.0));
    }

    #[test]
    fn bell_states_unit_norm_and_overlap(n in 1usize..=3, z in -1.0..1.0f64, jk in (0usize..3, 0usize..3)) {
        let (j, k) = jk;
        prop_assume!(j < n && k < n);
        let plus = bell_generalized(n, z, j, k, true).unwrap();
        let minus = bell_generalized(n, z, j, k, false).unwrap();
        prop_assert!((plus.norm() - 1.0).abs() <= 1e-12);
        // ⟨+|−⟩ = (1−z²)/(1+z²): orthogonal exactly at the Bell point z = ±1
        let want = (1.0 - z * z) / (1.0 + z * z);
        prop_assert!((plus.inner(&minus) - Complex64::new(want, 0.0)).norm() <= 1e-13);
        let bp = bell_generalized(n, 1.0, j, k, true).unwrap();
        let bm = bell_generalized(n, 1.0, j, k, false).unwrap();
        prop_assert!(bp.inner(&bm).norm() <= 1e-13);
    }

    #[test]
    fn odd_family_unitary_any_params(
        ms in proptest::collection::vec(-2.0..2.0f64, 6),
        theta in -2.0..2.0f64,
    ) {
        let p = OddBraidParams::new((ms[0], ms[1]), (ms[2], ms[3]), (ms[4], ms[5]), theta);
        let r = build_odd_braid(&p);
        prop_assert!(check_unitarity(&r, 1e-12).pass);
    }
}
