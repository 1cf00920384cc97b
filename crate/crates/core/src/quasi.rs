//! Exact quasipolynomial fitting of counting series and period detection.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use crate::arrangement::solve_augmented;
use crate::counting::CountSeries;
use crate::denominator::denominator;
use crate::dynamics::Rider;
use crate::geometry::Board;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitError {
    /// Every residue class needs `degree + 2` samples; this is the
    /// smallest `n_max` that provides them.
    InsufficientData { required_n_max: usize },
    /// Samples must be `n = 0, 1, ..., n_max` in order.
    NonContiguous,
}

impl fmt::Display for FitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FitError::InsufficientData { required_n_max } => write!(f, "insufficient data: need n_max >= {required_n_max}"),
            FitError::NonContiguous => write!(f, "samples must be n = 0, 1, ..., n_max"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasipolynomialFit {
    pub degree: usize,
    pub period: usize,
    /// `constituents[r][k]` is the coefficient of `n^k` for `n ≡ r (mod period)`.
    pub constituents: Vec<Vec<Rational>>,
    /// Largest `n` checked against the fit.
    pub verified_range: usize,
}

impl QuasipolynomialFit {
    pub fn eval(&self, n: usize) -> Rational {
        let coeffs = &self.constituents[n % self.period];
        let x = Rational::from(n as i64);
        coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &x + c)
    }

    /// Coefficients of `n^degree` across residue classes.
    pub fn leading(&self) -> Vec<Rational> {
        self.constituents.iter().map(|c| c[self.degree].clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitOutcome {
    Accept(QuasipolynomialFit),
    Reject,
}

pub fn required_n_max(degree: usize, period: usize) -> usize {
    (degree + 2) * period - 1
}

fn check_contiguous(values: &[(usize, BigUint)]) -> Result<(), FitError> {
    if values.iter().enumerate().all(|(i, (n, _))| *n == i) {
        Ok(())
    } else {
        Err(FitError::NonContiguous)
    }
}

/// Interpolates each residue class mod `period` on its first `degree + 1`
/// samples and accepts iff every remaining sample agrees exactly.
pub fn fit_values(values: &[(usize, BigUint)], degree: usize, period: usize) -> Result<FitOutcome, FitError> {
    assert!(period >= 1);
    check_contiguous(values)?;
    let need = required_n_max(degree, period);
    if values.len() < need + 1 {
        return Err(FitError::InsufficientData { required_n_max: need });
    }
    let mut constituents = Vec::with_capacity(period);
    for r in 0..period {
        let class: Vec<(usize, Rational)> =
            values.iter().skip(r).step_by(period).map(|(n, u)| (*n, Rational::from(BigInt::from(u.clone())))).collect();
        let rows = class[..=degree]
            .iter()
            .map(|(n, u)| {
                let x = Rational::from(*n as i64);
                let mut row: Vec<Rational> = (0..=degree).map(|k| x.pow(k as i32)).collect();
                row.push(u.clone());
                row
            })
            .collect();
        let coeffs = solve_augmented(rows, degree + 1).expect("distinct nodes give a regular Vandermonde system");
        constituents.push(coeffs);
    }
    let fit = QuasipolynomialFit { degree, period, constituents, verified_range: values.len() - 1 };
    let all_match = values.iter().all(|(n, u)| fit.eval(*n) == Rational::from(BigInt::from(u.clone())));
    Ok(if all_match { FitOutcome::Accept(fit) } else { FitOutcome::Reject })
}

/// Fits with the degree `2q` of the series.
pub fn fit(series: &CountSeries, period: usize) -> Result<FitOutcome, FitError> {
    fit_values(&series.values, 2 * series.q, period)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodOutcome {
    Found(QuasipolynomialFit),
    /// No period up to `max_tried` fits and the data cannot test the next.
    Inconclusive { max_tried: usize, required_n_max: usize },
}

/// Smallest period whose fit is accepted, trying `1, 2, ...` while the
/// data suffices.
pub fn minimal_period(values: &[(usize, BigUint)], degree: usize) -> Result<PeriodOutcome, FitError> {
    check_contiguous(values)?;
    let mut p = 1;
    loop {
        match fit_values(values, degree, p) {
            Ok(FitOutcome::Accept(f)) => return Ok(PeriodOutcome::Found(f)),
            Ok(FitOutcome::Reject) => p += 1,
            Err(FitError::InsufficientData { required_n_max }) => {
                return Ok(PeriodOutcome::Inconclusive { max_tried: p - 1, required_n_max })
            }
            Err(e) => return Err(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub q: usize,
    pub period: usize,
    pub denominator: BigInt,
    /// Evidence only: agreement on the verified range.
    pub equal: bool,
    pub divides: bool,
    pub verified_range: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConjectureError {
    Inconclusive { max_tried: usize, required_n_max: usize },
    Fit(FitError),
}

impl fmt::Display for ConjectureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjectureError::Inconclusive { max_tried, required_n_max } => write!(
                f,
                "inconclusive: no period up to {max_tried} fits; testing the next needs n_max >= {required_n_max}"
            ),
            ConjectureError::Fit(e) => write!(f, "{e}"),
        }
    }
}

/// Compares the fitted period of a square-board series with the denominator.
pub fn conjecture_report(series: &CountSeries) -> Result<ConjectureReport, ConjectureError> {
    let fit = match minimal_period(&series.values, 2 * series.q).map_err(ConjectureError::Fit)? {
        PeriodOutcome::Found(f) => f,
        PeriodOutcome::Inconclusive { max_tried, required_n_max } => {
            return Err(ConjectureError::Inconclusive { max_tried, required_n_max })
        }
    };
    let den = denominator(&Board::square(), &series.rider, series.q).value;
    let period = BigInt::from(fit.period);
    Ok(ConjectureReport {
        q: series.q,
        period: fit.period,
        equal: period == den,
        divides: den.is_multiple_of(&period),
        denominator: den,
        verified_range: fit.verified_range,
    })
}

/// Series and report in one call, counting serially.
pub fn conjecture_for(rider: &Rider, q: usize, n_max: usize) -> Result<ConjectureReport, ConjectureError> {
    conjecture_report(&crate::counting::count_series(rider, q, n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_series;
    use alloc::vec;

    fn series(v: &[u64]) -> Vec<(usize, BigUint)> {
        v.iter().enumerate().map(|(n, u)| (n, BigUint::from(*u))).collect()
    }

    #[test]
    fn constant_series() {
        match fit_values(&series(&[5; 4]), 0, 1).unwrap() {
            FitOutcome::Accept(f) => assert_eq!(f.constituents, vec![vec![Rational::from(5)]]),
            FitOutcome::Reject => panic!("constant rejected"),
        }
    }

    #[test]
    fn squares() {
        let s = count_series(&Rider::bishop(), 1, 6);
        match fit(&s, 1).unwrap() {
            FitOutcome::Accept(f) => {
                assert_eq!(f.constituents[0], vec![Rational::zero(), Rational::zero(), Rational::one()]);
                assert_eq!(f.verified_range, 6);
            }
            FitOutcome::Reject => panic!("n^2 rejected"),
        }
    }

    #[test]
    fn insufficient_data() {
        assert_eq!(fit_values(&series(&[1, 2, 3]), 2, 1), Err(FitError::InsufficientData { required_n_max: 3 }));
        assert_eq!(fit_values(&series(&[0; 10]), 2, 3), Err(FitError::InsufficientData { required_n_max: 11 }));
    }

    #[test]
    fn parity_dependent_series() {
        // floor(n/2): period 2, degree 1
        let v: Vec<u64> = (0..12).map(|n| n / 2).collect();
        assert_eq!(fit_values(&series(&v), 1, 1).unwrap(), FitOutcome::Reject);
        match minimal_period(&series(&v), 1).unwrap() {
            PeriodOutcome::Found(f) => assert_eq!(f.period, 2),
            o => panic!("{o:?}"),
        }
        assert!(matches!(
            minimal_period(&series(&v[..4]), 1).unwrap(),
            PeriodOutcome::Inconclusive { max_tried: 1, required_n_max: 5 }
        ));
    }

    #[test]
    fn trivial_conjecture() {
        let r = conjecture_for(&Rider::orthonightrider(), 1, 6).unwrap();
        assert_eq!((r.period, r.denominator.clone(), r.equal, r.divides), (1, BigInt::from(1), true, true));
    }
}
