use num_bigint::BigInt;
use rider_core::*;

fn rider(a: (i64, i64), b: (i64, i64)) -> Rider {
    Rider::from_pairs(a, b).unwrap()
}

fn values(r: &Rider, qs: std::ops::RangeInclusive<usize>) -> Vec<BigInt> {
    qs.map(|q| denominator(&Board::square(), r, q).value).collect()
}

fn ints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn named_piece_tables() {
    assert_eq!(values(&Rider::inclined_nightrider(), 1..=5), ints(&[1, 2, 12, 24, 48]));
    assert_eq!(values(&Rider::orthonightrider(), 1..=5), ints(&[1, 2, 20, 120, 240]));
    assert_eq!(values(&Rider::lateral_nightrider(), 1..=4), ints(&[1, 2, 4, 4]));
    assert_eq!(values(&Rider::bishop(), 3..=5), ints(&[2, 2, 2]));
}

#[test]
fn orthogonal_family_matches_closed_form() {
    for m in 2..=5 {
        let r = rider((m, 1), (1, -m));
        for q in 1..=5 {
            assert_eq!(denominator(&Board::square(), &r, q).value, closed_form_orthogonal(m, q).unwrap(), "m={m} q={q}");
        }
    }
}

#[test]
fn mirror_family_matches_closed_form() {
    for (c, d) in [(2, 1), (3, 1), (3, 2), (5, 3)] {
        let r = rider((c, d), (c, -d));
        for q in 1..=6 {
            assert_eq!(denominator(&Board::square(), &r, q).value, closed_form_mirror(c, d, q).unwrap(), "({c},{d}) q={q}");
        }
    }
}

#[test]
fn inclined_family_matches_closed_form() {
    for (a, b) in [((2, 1), (1, 2)), ((3, 1), (1, 2)), ((3, 2), (1, 3)), ((3, 1), (1, 3)), ((5, 2), (2, 3))] {
        let r = rider(a, b);
        for q in 1..=5 {
            assert_eq!(denominator(&Board::square(), &r, q).value, closed_form_inclined(&r, q).unwrap(), "{a:?} {b:?} q={q}");
        }
    }
}

const PAIRS: [((i64, i64), (i64, i64)); 12] = [
    ((1, 1), (1, -1)),
    ((2, 1), (1, 2)),
    ((2, 1), (2, -1)),
    ((2, 1), (1, -2)),
    ((3, 1), (1, 2)),
    ((3, 2), (1, -4)),
    ((5, 3), (1, 1)),
    ((4, 1), (-3, 5)),
    ((1, 0), (1, 1)),
    ((0, 1), (5, -2)),
    ((5, 4), (2, 3)),
    ((1, 5), (4, -3)),
];

#[test]
fn oracle_agrees_for_small_q() {
    for (a, b) in PAIRS {
        let r = rider(a, b);
        for q in 1..=2 {
            assert_eq!(denominator(&Board::square(), &r, q).value, vertex_oracle(&Board::square(), &r, q), "{a:?} {b:?} q={q}");
        }
    }
}

#[test]
fn oracle_agrees_at_three_pieces() {
    for (a, b) in PAIRS {
        let r = rider(a, b);
        assert_eq!(denominator(&Board::square(), &r, 3).value, vertex_oracle(&Board::square(), &r, 3), "{a:?} {b:?}");
    }
}

#[test]
fn oracle_agrees_on_other_boards() {
    let tri = Board::new(vec![Point2::int(0, 0), Point2::int(2, 0), Point2::int(0, 1)]).unwrap();
    let pent = Board::new(vec![
        Point2::int(0, 0),
        Point2::int(2, 0),
        Point2::int(3, 1),
        Point2::frac(3, 2, 5, 2),
        Point2::int(0, 1),
    ])
    .unwrap();
    for board in [tri, pent] {
        for (a, b) in PAIRS.iter().take(6) {
            let r = rider(*a, *b);
            for q in 1..=3 {
                assert_eq!(denominator(&board, &r, q).value, vertex_oracle(&board, &r, q), "{a:?} {b:?} q={q}");
            }
        }
    }
}

#[test]
fn rigid_cycle_census() {
    for m in [2i64, 3] {
        let r = rider((m, 1), (-1, m));
        let cycles = enumerate_rigid_cycles(&Board::square(), &r, 8);
        assert_eq!(cycles.len(), 1, "m={m}");
        let k = Rational::new(1, 1 + m);
        let j = Rational::new(m, 1 + m);
        let mut want = vec![
            Point2::new(k.clone(), Rational::zero()),
            Point2::new(Rational::one(), k),
            Point2::new(j.clone(), Rational::one()),
            Point2::new(Rational::zero(), j),
        ];
        want.sort();
        let mut got = cycles[0].configuration.clone();
        got.sort();
        assert_eq!(got, want);
    }
    for r in [Rider::bishop(), Rider::lateral_nightrider(), rider((3, 2), (3, -2)), rider((1, 3), (1, -3))] {
        assert!(enumerate_rigid_cycles(&Board::square(), &r, 8).is_empty(), "{r:?}");
    }
}

#[test]
fn denominators_grow_by_divisibility() {
    for (a, b) in PAIRS {
        let r = rider(a, b);
        let v = values(&r, 1..=5);
        for w in v.windows(2) {
            assert!(num_integer::Integer::is_multiple_of(&w[1], &w[0]), "{a:?} {b:?} {v:?}");
        }
    }
}
