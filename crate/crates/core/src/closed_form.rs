//! Closed-form denominators on the square board for three families of
//! two-move riders.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::dynamics::Rider;
use crate::geometry::{point_denominator, Point2};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormError {
    /// The moves do not satisfy `0 < d1/c1 < 1 < d2/c2` in either order.
    SlopeConditionViolated,
    NotCoprime,
    /// `m < 2`, `q < 1` or a zero component.
    BadArgument,
}

impl fmt::Display for ClosedFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedFormError::SlopeConditionViolated => write!(f, "moves need slopes 0 < m1 < 1 < m2"),
            ClosedFormError::NotCoprime => write!(f, "move components are not coprime"),
            ClosedFormError::BadArgument => write!(f, "argument out of range"),
        }
    }
}

/// Riders with a closed-form denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Slopes `0 < m1 < 1 < m2`; moves stored as `(c1, d1), (c2, d2)` in that order.
    Inclined { c1: i64, d1: i64, c2: i64, d2: i64 },
    /// Moves `(m, 1)` and `(1, -m)`.
    Orthogonal { m: i64 },
    /// Moves `(c, d)` and `(c, -d)`.
    Mirror { c: i64, d: i64 },
}

pub fn detect_family(rider: &Rider) -> Option<Family> {
    let [a, b] = rider.moves();
    let (a, b) = ((a.c(), a.d()), (b.c(), b.d()));
    for (u, v) in [(a, b), (b, a)] {
        if u.0 > 0 && 0 < u.1 && u.1 < u.0 && v.0 > 0 && v.1 > v.0 {
            return Some(Family::Inclined { c1: u.0, d1: u.1, c2: v.0, d2: v.1 });
        }
        if u.1 == 1 && u.0 >= 2 && v == (1, -u.0) {
            return Some(Family::Orthogonal { m: u.0 });
        }
        if u.0 > 0 && u.1 > 0 && v == (u.0, -u.1) {
            return Some(Family::Mirror { c: u.0, d: u.1 });
        }
    }
    None
}

/// The closed-form denominator when the rider belongs to a known family.
pub fn closed_form(rider: &Rider, q: usize) -> Option<BigInt> {
    match detect_family(rider)? {
        Family::Inclined { .. } => closed_form_inclined(rider, q).ok(),
        Family::Orthogonal { m } => closed_form_orthogonal(m, q).ok(),
        Family::Mirror { c, d } => closed_form_mirror(c, d, q).ok(),
    }
}

fn inclined_params(rider: &Rider) -> Result<(i64, i64, i64, i64), ClosedFormError> {
    match detect_family(rider) {
        Some(Family::Inclined { c1, d1, c2, d2 }) => Ok((c1, d1, c2, d2)),
        _ => Err(ClosedFormError::SlopeConditionViolated),
    }
}

/// Terms whose coordinates carry the denominators of the corner
/// trajectories; odd terms are the points on the east side.
pub fn inclined_point_sequence(rider: &Rider, count: usize) -> Result<Vec<Point2>, ClosedFormError> {
    let (c1, d1, c2, d2) = inclined_params(rider)?;
    let rho = Rational::new(d1 * c2, c1 * d2);
    Ok((1..=count)
        .map(|i| {
            if i % 2 == 1 {
                Point2::new(Rational::one(), rho.pow(((i - 1) / 2) as i32))
            } else {
                let r = rho.pow((i / 2 - 1) as i32);
                Point2::new(Rational::new(d1, c1) * &r, Rational::new(c2, d2) * &r)
            }
        })
        .collect())
}

/// Crossing points of the corner trajectories from `(0, 0)` and `(1, 1)`.
pub fn inclined_crossing_sequence(rider: &Rider, count: usize) -> Result<Vec<Point2>, ClosedFormError> {
    let (c1, d1, c2, d2) = inclined_params(rider)?;
    let rho = Rational::new(d1 * c2, c1 * d2);
    let det = c1 * d2 - c2 * d1;
    Ok((1..=count)
        .map(|i| {
            let (r, vx, vy) = if i % 2 == 1 {
                (rho.pow(((i - 1) / 2) as i32), Rational::new(c2 * (d1 - c1), det), Rational::new(d1 * (d2 - c2), det))
            } else {
                (rho.pow((i / 2) as i32), Rational::new(c1 * (c2 - d2), det), Rational::new(d2 * (c1 - d1), det))
            };
            Point2::new(Rational::one() + &r * &vx, &r * &vy)
        })
        .collect())
}

pub fn closed_form_inclined(rider: &Rider, q: usize) -> Result<BigInt, ClosedFormError> {
    if q < 1 {
        return Err(ClosedFormError::BadArgument);
    }
    let pts = inclined_point_sequence(rider, q)?;
    let cross = inclined_crossing_sequence(rider, (q - 1) / 2)?;
    Ok(pts.iter().chain(cross.iter()).fold(BigInt::from(1), |acc, p| acc.lcm(&point_denominator(p))))
}

pub fn closed_form_orthogonal(m: i64, q: usize) -> Result<BigInt, ClosedFormError> {
    if m < 2 || q < 1 {
        return Err(ClosedFormError::BadArgument);
    }
    let m = BigInt::from(m);
    Ok(match q {
        1 => BigInt::from(1),
        2 => m,
        3 => m.pow(4) + m.pow(2),
        _ => (m.pow(2) + 1u32).lcm(&(&m + 1u32)) * m.pow((q - 1) as u32),
    })
}

pub fn closed_form_mirror(c: i64, d: i64, q: usize) -> Result<BigInt, ClosedFormError> {
    if c == 0 || d == 0 || q < 1 {
        return Err(ClosedFormError::BadArgument);
    }
    let (c, d) = (c.unsigned_abs(), d.unsigned_abs());
    if c.gcd(&d) != 1 {
        return Err(ClosedFormError::NotCoprime);
    }
    let (lo, hi) = (c.min(d), c.max(d));
    Ok(BigInt::from(match q {
        1 => 1,
        2 => hi,
        _ if q as u64 <= hi.div_ceil(lo) => 2 * hi,
        _ => 2 * lo * hi,
    }))
}
