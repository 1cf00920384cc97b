//! Nonattacking placements of a two-move rider on the `n × n` grid.
//!
//! Cells `(x, y)` with `1 <= x, y <= n` are indexed x-major:
//! `(x - 1)·n + (y - 1)`. Placements are unordered sets of distinct cells.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::dynamics::{MoveType, Rider};

/// Largest supported side length.
pub const MAX_SIDE: usize = 64;

/// Two distinct cells attack when their difference is an integer multiple
/// of a move. Moves are primitive, so collinearity already forces the
/// multiple to be an integer.
pub fn attacks(rider: &Rider, a: (i64, i64), b: (i64, i64)) -> bool {
    if a == b {
        return false;
    }
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    [MoveType::First, MoveType::Second].into_iter().any(|t| {
        let m = rider.get(t);
        m.c() * dy - m.d() * dx == 0
    })
}

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(len: usize) -> Bits {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

/// Precomputed attack masks for one `(rider, n)`.
pub struct Grid {
    n: usize,
    /// `attack[c]` has every cell attacked by `c`, and `c` itself.
    attack: Vec<Bits>,
}

impl Grid {
    pub fn new(rider: &Rider, n: usize) -> Grid {
        assert!(n <= MAX_SIDE, "grid side {n} exceeds {MAX_SIDE}");
        let cells = n * n;
        let coords: Vec<(i64, i64)> = (0..cells).map(|i| ((i / n) as i64 + 1, (i % n) as i64 + 1)).collect();
        let mut attack = Vec::with_capacity(cells);
        for a in 0..cells {
            let mut m = Bits::zeros(cells);
            m.set(a);
            for b in 0..cells {
                if attacks(rider, coords[a], coords[b]) {
                    m.set(b);
                }
            }
            attack.push(m);
        }
        Grid { n, attack }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> usize {
        self.n * self.n
    }

    /// Placements of `q` pieces whose smallest cell is `first`.
    pub fn count_with_first(&self, q: usize, first: usize) -> u128 {
        if q == 0 || first >= self.cells() {
            return 0;
        }
        if q == 1 {
            return 1;
        }
        let mut avail = Bits::zeros(self.cells());
        for i in first + 1..self.cells() {
            avail.set(i);
        }
        for (w, a) in avail.0.iter_mut().zip(&self.attack[first].0) {
            *w &= !a;
        }
        self.extend(&avail, q - 1)
    }

    /// Placements of `remaining` pieces drawn from `avail`.
    fn extend(&self, avail: &Bits, remaining: usize) -> u128 {
        if remaining == 1 {
            return u128::from(avail.count());
        }
        let mut total = 0;
        let mut rest = avail.clone();
        for wi in 0..avail.0.len() {
            let mut word = avail.0[wi];
            while word != 0 {
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                let c = wi * 64 + bit;
                rest.0[wi] &= !(1u64 << bit);
                let mut next = rest.clone();
                for (w, a) in next.0.iter_mut().zip(&self.attack[c].0) {
                    *w &= !a;
                }
                total += self.extend(&next, remaining - 1);
            }
        }
        total
    }

    pub fn count(&self, q: usize) -> u128 {
        if q == 0 {
            return 1;
        }
        (0..self.cells()).map(|c| self.count_with_first(q, c)).sum()
    }
}

/// Unordered nonattacking placements of `q` pieces on the `n × n` grid.
pub fn count(rider: &Rider, q: usize, n: usize) -> u128 {
    Grid::new(rider, n).count(q)
}

/// Placements of `q` labelled pieces by direct search over ordered tuples,
/// independent of [`Grid`].
pub fn count_ordered_naive(rider: &Rider, q: usize, n: usize) -> u128 {
    fn go(rider: &Rider, n: i64, placed: &mut Vec<(i64, i64)>, left: usize) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for x in 1..=n {
            for y in 1..=n {
                let c = (x, y);
                if placed.iter().any(|&p| p == c || attacks(rider, p, c)) {
                    continue;
                }
                placed.push(c);
                total += go(rider, n, placed, left - 1);
                placed.pop();
            }
        }
        total
    }
    go(rider, n as i64, &mut Vec::new(), q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub rider: Rider,
    pub q: usize,
    /// `(n, u(q; n))` for `n = 0, 1, ..., n_max`.
    pub values: Vec<(usize, BigUint)>,
}

impl CountSeries {
    pub fn n_max(&self) -> Option<usize> {
        self.values.last().map(|v| v.0)
    }
}

pub fn count_series(rider: &Rider, q: usize, n_max: usize) -> CountSeries {
    let values = (0..=n_max).map(|n| (n, BigUint::from(count(rider, q, n)))).collect();
    CountSeries { rider: *rider, q, values }
}
