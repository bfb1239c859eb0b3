use catpow::groups::Permutation;
use catpow::partitions::*;
use num_bigint::BigInt;

/// `p(n)` from the pentagonal recurrence.
fn pentagonal(max: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(1)];
    for n in 1..=max {
        let mut total = BigInt::from(0);
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += &p[n - g1] * sign;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                total += &p[n - g2] * sign;
            }
        }
        p.push(total);
    }
    p
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let oracle = pentagonal(60);
    for n in 0..=30 {
        assert_eq!(BigInt::from(enumerate_partitions(n).unwrap().len()), oracle[n], "n={n}");
    }
    assert_eq!(inv_phi_pow_series(1, 60).unwrap().coeffs().to_vec(), oracle);
    assert_eq!(count_p_regular(60, 61).unwrap(), "966467".parse::<BigInt>().unwrap());
}

#[test]
fn euler_strict_equals_odd_parts() {
    for n in 0..=40 {
        assert_eq!(enumerate_strict(n).unwrap().len(), enumerate_odd_parts(n).unwrap().len(), "n={n}");
    }
    assert_eq!(strict_series(100).unwrap(), odd_parts_series(100).unwrap());
}

#[test]
fn enumerations_are_well_formed() {
    for n in 0..=12 {
        let all = enumerate_partitions(n).unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.reverse();
        assert_eq!(all, sorted, "reverse lexicographic order at n={n}");
        assert!(all.iter().all(|l| l.size() == n));
        let strict: Vec<_> = all.iter().filter(|l| l.is_strict()).cloned().collect();
        assert_eq!(enumerate_strict(n).unwrap(), strict);
        for p in 2..=4 {
            let regular: Vec<_> = all.iter().filter(|l| l.max_multiplicity() < p).cloned().collect();
            assert_eq!(enumerate_p_regular(n, p).unwrap(), regular);
            assert_eq!(count_p_regular(n, p).unwrap(), BigInt::from(regular.len()));
        }
    }
    assert_eq!(enumerate_strict(10).unwrap().len(), 10);
}

#[test]
fn parity_matches_permutation_sign() {
    for n in 0..=8 {
        for lambda in enumerate_partitions(n).unwrap() {
            let sigma = Permutation::with_cycle_type(&lambda);
            assert_eq!(sigma.cycle_type(), lambda);
            assert_eq!(partition_parity(&lambda) == Parity::Odd, sigma.is_odd(), "{lambda:?}");
        }
    }
}

#[test]
fn strict_parity_counts_split_strict_partitions() {
    for n in 0..=20 {
        let (even, odd) = strict_parity_counts(n).unwrap();
        let strict = enumerate_strict(n).unwrap();
        assert_eq!((even + odd) as usize, strict.len());
        assert_eq!(odd as usize, strict.iter().filter(|l| partition_parity(l) == Parity::Odd).count());
    }
}

#[test]
fn multipartitions_are_convolutions() {
    for d in 1..=4 {
        let series = inv_phi_pow_series(d, 20).unwrap();
        for n in 0..=20 {
            assert_eq!(count_multipartitions(n, d).unwrap(), series.coeff(n), "n={n} d={d}");
        }
    }
}

#[test]
fn series_identities() {
    let phi = euler_phi_series(40).unwrap();
    assert!(phi.mul(&inv_phi_pow_series(1, 40).unwrap()).unwrap().is_one());
    assert_eq!(phi.inverse().unwrap(), inv_phi_pow_series(1, 40).unwrap());
    assert_eq!(inv_phi_pow_series(2, 40).unwrap(), inv_phi_pow_series(1, 40).unwrap().pow(2));
    let short = euler_phi_series(10).unwrap();
    assert!(matches!(phi.mul(&short), Err(PartitionError::OrderMismatch { .. })));
    assert!(matches!(IntSeries::zero(5).inverse(), Err(PartitionError::NotInvertible)));
}

#[test]
fn caps_are_enforced() {
    assert!(matches!(enumerate_partitions(MAX_ENUMERATION_SIZE + 1), Err(PartitionError::SizeCapExceeded { .. })));
    assert!(euler_phi_series(MAX_SERIES_ORDER + 1).is_err());
    assert!(count_multipartitions(MAX_MULTIPARTITION_SIZE + 1, 2).is_err());
}
