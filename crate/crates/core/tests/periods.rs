use num_bigint::{BigInt, BigUint};
use rider_core::*;

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn bishop_pairs_have_period_one() {
    let s = count_series(&Rider::bishop(), 2, 24);
    for (n, u) in &s.values {
        let n = *n as u64;
        assert_eq!(*u, binom(n * n, 2) - BigUint::from(2u32) * (BigUint::from(2u32) * binom(n, 3) + binom(n, 2)));
    }
    match minimal_period(&s.values, 4).unwrap() {
        PeriodOutcome::Found(f) => {
            assert_eq!(f.period, 1);
            assert_eq!(f.verified_range, 24);
        }
        o => panic!("{o:?}"),
    }
}

#[test]
fn bishop_triples_have_period_two() {
    let s = count_series(&Rider::bishop(), 3, 32);
    assert_eq!(fit(&s, 1).unwrap(), FitOutcome::Reject);
    let f = match fit(&s, 2).unwrap() {
        FitOutcome::Accept(f) => f,
        FitOutcome::Reject => panic!("period 2 rejected"),
    };
    // leading coefficient 1/3! is shared by both classes
    assert_eq!(f.leading(), vec![Rational::new(1, 6); 2]);
    let r = conjecture_report(&s).unwrap();
    assert_eq!((r.period, r.denominator, r.equal, r.divides), (2, BigInt::from(2), true, true));
}

#[test]
fn lateral_pairs_period_divides_two() {
    let s = count_series(&Rider::lateral_nightrider(), 2, 40);
    let r = conjecture_report(&s).unwrap();
    assert!(r.divides);
    assert_eq!(r.denominator, BigInt::from(2));
    assert_eq!(2 % r.period, 0);
}

#[test]
fn inclined_pairs_period_divides_two() {
    let s = count_series(&Rider::inclined_nightrider(), 2, 30);
    let r = conjecture_report(&s).unwrap();
    assert!(r.divides);
    assert_eq!(r.denominator, BigInt::from(2));
}

#[test]
fn short_series_is_inconclusive() {
    let s = count_series(&Rider::bishop(), 3, 10);
    assert!(matches!(conjecture_report(&s), Err(ConjectureError::Inconclusive { .. })));
}
