use catpow::groups::{symmetric_group, Permutation};
use catpow::koszul::group_algebra::GroupAlgebra;
use catpow::koszul::*;
use catpow::partitions::{euler_phi_series, inv_phi_pow_series, IntSeries, Parity};
use num_bigint::BigInt;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn homotopy_identity_holds_up_to_eight() {
    for n in 0..=MAX_HOMOTOPY_DEGREE {
        let report = verify_homotopy_identity(n).unwrap();
        assert!(report.passed(), "n={n}: {:?}", report.failures.first());
        assert!(report.checks > 0);
    }
}

#[test]
fn left_literal_convention_breaks_the_identity() {
    let report = verify_homotopy_identity_with(2, SymbolConvention::LeftLiteral).unwrap();
    assert!(!report.passed());
    let v = KoszulVector::generator(1, 1, &Permutation::identity(2));
    let a = apply_delta_with(&apply_d_with(&v, SymbolConvention::LeftLiteral).unwrap(), SymbolConvention::LeftLiteral).unwrap();
    let b = apply_d_with(&apply_delta_with(&v, SymbolConvention::LeftLiteral).unwrap(), SymbolConvention::LeftLiteral).unwrap();
    assert_ne!(a.add(&b).unwrap(), v.scale(&BigInt::from(2)));
}

#[test]
fn symbolic_maps_agree_with_group_algebra() {
    for n in 1..=5 {
        let alg = GroupAlgebra::new(n).unwrap();
        for p in 0..=n {
            let q = n - p;
            for s in basis(p, q) {
                let v = KoszulVector::generator(p, q, s.rep());
                let a = alg.embed(p, &s);
                assert_eq!(alg.decompose(p, &a).unwrap(), v);
                if p >= 1 {
                    let literal = alg.decompose(p - 1, &alg.literal_d(p, &a)).unwrap();
                    assert_eq!(literal, apply_d(&v).unwrap(), "D at ({p},{q}) on {s:?}");
                }
                if q >= 1 {
                    let literal = alg.decompose(p + 1, &alg.literal_delta(p, &a)).unwrap();
                    assert_eq!(literal, apply_delta(&v).unwrap(), "Δ at ({p},{q}) on {s:?}");
                }
            }
        }
    }
}

#[test]
fn normalization_is_equivariant() {
    for (p, q) in [(2, 2), (3, 1), (1, 3), (3, 2)] {
        let n = p + q;
        let g = symmetric_group(n).unwrap();
        for w in g.labels() {
            let (base, base_sign) = normalize(p, q, w, Parity::Even);
            for u in g.labels() {
                let img = u.images();
                if img[..p].iter().any(|&x| x >= p) {
                    continue;
                }
                let up_sign = Permutation::from_images(img[..p].to_vec()).unwrap().sign();
                let (s, sign) = normalize(p, q, &w.compose(u), Parity::Even);
                assert_eq!(s, base);
                assert_eq!(sign, up_sign * base_sign);
            }
            let (again, sign) = normalize(p, q, base.rep(), Parity::Even);
            assert_eq!((again, sign), (base.clone(), 1));
            let (_, odd_sign) = normalize(p, q, w, Parity::Odd);
            assert_eq!(odd_sign, -base_sign);
        }
    }
}

#[test]
fn complexes_are_acyclic() {
    assert_eq!(exactness_report(0).unwrap().d_complex.homology, vec![1]);
    for n in 1..=MAX_EXACTNESS_DEGREE {
        let report = exactness_report(n).unwrap();
        assert!(report.acyclic(), "n={n}: {report:?}");
        let dims: Vec<usize> = (0..=n).map(|p| binomial(n, p)).collect();
        assert_eq!(report.d_complex.dims, dims);
    }
}

#[test]
fn reciprocity_to_order_thirty() {
    let report = reciprocity_check(30, 1, DimensionReading::Superdimension).unwrap();
    assert!(report.passed, "{:?}", report.first_failure);
    assert!(exterior_series_is_phi(30).unwrap());
    for d in 2..=3 {
        let report = reciprocity_check(30, d, DimensionReading::Superdimension).unwrap();
        assert!(report.passed, "d={d}");
    }
    let inv = inv_phi_pow_series(3, 30).unwrap();
    let phi3 = euler_phi_series(30).unwrap().pow(3);
    assert!(inv.mul(&phi3).unwrap() == IntSeries::one(30));
}

#[test]
fn total_dimension_reading_fails_at_q_squared() {
    let report = reciprocity_check(30, 1, DimensionReading::Total).unwrap();
    assert!(!report.passed);
    assert_eq!(report.first_failure, Some(2));
    assert_eq!(report.residual[2], "2");
}

#[test]
fn caps_are_enforced() {
    assert!(verify_homotopy_identity(MAX_HOMOTOPY_DEGREE + 1).is_err());
    assert!(exactness_report(MAX_EXACTNESS_DEGREE + 1).is_err());
    assert!(reciprocity_check(MAX_RECIPROCITY_ORDER + 1, 1, DimensionReading::Superdimension).is_err());
}

fn shuffle(images: &mut [usize], seed: &[usize]) {
    for (i, &s) in seed.iter().enumerate().take(images.len()) {
        let j = i + s % (images.len() - i);
        images.swap(i, j);
    }
}

proptest::proptest! {
    #[test]
    fn normalize_random_block_actions(
        p in 0usize..=6,
        q in 0usize..=6,
        w_seed in proptest::collection::vec(0usize..64, 12),
        u_seed in proptest::collection::vec(0usize..64, 6),
        v_seed in proptest::collection::vec(0usize..64, 6),
    ) {
        proptest::prop_assume!(p + q <= 6 && p + q > 0);
        let n = p + q;
        let mut w: Vec<usize> = (0..n).collect();
        shuffle(&mut w, &w_seed);
        let w = Permutation::from_images(w).unwrap();
        let mut u: Vec<usize> = (0..p).collect();
        shuffle(&mut u, &u_seed);
        let mut v: Vec<usize> = (p..n).collect();
        shuffle(&mut v, &v_seed);
        let u_sign = Permutation::from_images(u.clone()).unwrap().sign();
        let uv = Permutation::from_images(u.into_iter().chain(v).collect()).unwrap();
        let (base, base_sign) = normalize(p, q, &w, Parity::Even);
        let (moved, moved_sign) = normalize(p, q, &w.compose(&uv), Parity::Even);
        proptest::prop_assert_eq!(&moved, &base);
        proptest::prop_assert_eq!(moved_sign, u_sign * base_sign);
        proptest::prop_assert_eq!(normalize(p, q, base.rep(), Parity::Even), (base.clone(), 1));
    }
}
