//! Parallel counting. Work is split by the first occupied cell and by
//! board side; sums are order-independent, so results match serial counts.

use num_bigint::BigUint;
use rayon::prelude::*;
use rider_core::{CountSeries, Grid, Rider};

pub fn count_parallel(rider: &Rider, q: usize, n: usize) -> u128 {
    if q == 0 {
        return 1;
    }
    let grid = Grid::new(rider, n);
    (0..grid.cells()).into_par_iter().map(|c| grid.count_with_first(q, c)).sum()
}

pub fn count_series_parallel(rider: &Rider, q: usize, n_max: usize) -> CountSeries {
    let values = (0..=n_max).into_par_iter().map(|n| (n, BigUint::from(count_parallel(rider, q, n)))).collect();
    CountSeries { rider: *rider, q, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rider_core::count_series;

    #[test]
    fn matches_serial() {
        for r in [Rider::bishop(), Rider::lateral_nightrider()] {
            for q in 0..=3 {
                assert_eq!(count_series_parallel(&r, q, 9), count_series(&r, q, 9));
            }
        }
    }
}
