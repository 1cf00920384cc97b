//! Floating-point attack map for limit-behaviour experiments, including
//! irrational slopes. Never used by the exact computations.

use rider_core::{Board, MoveType, Rider};

/// Absolute tolerance for boundary, corner and stop detection.
pub const TOL: f64 = 1e-9;

pub type Pt = (f64, f64);

#[derive(Debug, Clone)]
pub struct FloatBoard {
    corners: Vec<Pt>,
    /// Outward normal `(a, b)` and offset `c` of each edge: `a·x + b·y <= c`.
    edges: Vec<(f64, f64, f64)>,
}

impl FloatBoard {
    pub fn from_board(board: &Board) -> FloatBoard {
        let corners: Vec<Pt> = board.corners().iter().map(|p| p.to_f64()).collect();
        let edges = board
            .edges()
            .iter()
            .map(|e| (e.fixation.a.to_f64(), e.fixation.b.to_f64(), e.fixation.rhs.to_f64()))
            .collect();
        FloatBoard { corners, edges }
    }

    pub fn corners(&self) -> &[Pt] {
        &self.corners
    }

    pub fn is_unit_square(&self) -> bool {
        self.corners == [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    }

    fn near_corner(&self, p: Pt) -> bool {
        self.corners.iter().any(|c| dist(*c, p) < TOL)
    }

    /// The far end of the chord through `b` along `v`, or `None` when the
    /// line misses the interior.
    pub fn antipode(&self, b: Pt, v: Pt) -> Option<Pt> {
        let norm = v.0.hypot(v.1);
        let v = (v.0 / norm, v.1 / norm);
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for &(a, bb, c) in &self.edges {
            let along = a * v.0 + bb * v.1;
            let slack = c - (a * b.0 + bb * b.1);
            let scale = a.hypot(bb);
            if along.abs() < TOL * scale {
                if slack.abs() < TOL * scale {
                    return None;
                }
                continue;
            }
            let bound = slack / along;
            if along > 0.0 {
                hi = hi.min(bound);
            } else {
                lo = lo.max(bound);
            }
        }
        let l = if hi > TOL {
            hi
        } else if lo < -TOL {
            lo
        } else {
            return None;
        };
        Some((b.0 + l * v.0, b.1 + l * v.1))
    }
}

pub fn dist(a: Pt, b: Pt) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// Unit-free direction of slope `m`; infinite slopes are vertical.
pub fn direction(m: f64) -> Pt {
    if m.is_infinite() {
        (0.0, 1.0)
    } else {
        (1.0, m)
    }
}

pub fn rider_slopes(rider: &Rider) -> (f64, f64) {
    let s = |t| {
        let m = rider.get(t);
        if m.c() == 0 {
            f64::INFINITY
        } else {
            m.d() as f64 / m.c() as f64
        }
    };
    (s(MoveType::First), s(MoveType::Second))
}

#[derive(Debug, Clone, PartialEq)]
pub struct FloatPath {
    pub points: Vec<Pt>,
    pub slopes: (f64, f64),
    pub first_move_type: MoveType,
    /// Candidate limit set the distances refer to.
    pub limit: Vec<Pt>,
    /// Distance from each point to the nearest limit point; NaN without a limit set.
    pub distances: Vec<f64>,
    /// True when the orbit hit a corner or a stop before `steps` points.
    pub stopped: bool,
}

fn distance_to(limit: &[Pt], p: Pt) -> f64 {
    limit.iter().map(|&o| dist(o, p)).fold(f64::NAN, f64::min)
}

fn orbit(board: &FloatBoard, slopes: (f64, f64), start: Pt, first: MoveType, steps: usize) -> (Vec<Pt>, bool) {
    let dirs = [direction(slopes.0), direction(slopes.1)];
    let mut points = vec![start];
    let mut t = first;
    while points.len() < steps {
        let last = points[points.len() - 1];
        if points.len() > 1 && board.near_corner(last) {
            return (points, true);
        }
        let v = dirs[t.number() as usize - 1];
        match board.antipode(last, v) {
            Some(next) => points.push(next),
            None => return (points, true),
        }
        t = t.other();
    }
    (points, false)
}

/// The limit set used when none is supplied. On the unit square:
/// the two fixed corners for slopes of equal sign; the period-4 orbit for
/// slopes `0 < m1 < 1`, `m2 < -1` (either order); otherwise the corner
/// trajectories. On other boards: the corner trajectories.
pub fn default_limit(board: &FloatBoard, slopes: (f64, f64)) -> Vec<Pt> {
    let (a, b) = slopes;
    if board.is_unit_square() && a.is_finite() && b.is_finite() {
        if a > 0.0 && b > 0.0 {
            return vec![(1.0, 0.0), (0.0, 1.0)];
        }
        if a < 0.0 && b < 0.0 {
            return vec![(0.0, 0.0), (1.0, 1.0)];
        }
        let pair = if a > 0.0 && a < 1.0 && b < -1.0 {
            Some((a, b))
        } else if b > 0.0 && b < 1.0 && a < -1.0 {
            Some((b, a))
        } else {
            None
        };
        if let Some((m1, m2)) = pair {
            let s = m1 + m2;
            return vec![((m1 - 1.0) / s, 0.0), (1.0, m1 * (1.0 + m2) / s), ((1.0 + m2) / s, 1.0), (0.0, m2 * (1.0 - m1) / s)];
        }
    }
    let corners: Vec<Pt> = if board.is_unit_square() { vec![(0.0, 0.0)] } else { board.corners().to_vec() };
    let mut out: Vec<Pt> = Vec::new();
    for c in corners {
        for t in [MoveType::First, MoveType::Second] {
            for p in orbit(board, slopes, c, t, 64).0 {
                if !out.iter().any(|q| dist(*q, p) < TOL) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Iterates the floating-point attack map for at most `steps` points.
pub fn simulate_float(
    board: &Board,
    slopes: (f64, f64),
    start: Pt,
    first: MoveType,
    steps: usize,
    limit: Option<Vec<Pt>>,
) -> FloatPath {
    let fb = FloatBoard::from_board(board);
    let (points, stopped) = orbit(&fb, slopes, start, first, steps.max(1));
    let limit = limit.unwrap_or_else(|| default_limit(&fb, slopes));
    let distances = points.iter().map(|&p| distance_to(&limit, p)).collect();
    FloatPath { points, slopes, first_move_type: first, limit, distances, stopped }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_chords() {
        let fb = FloatBoard::from_board(&Board::square());
        let p = fb.antipode((0.0, 0.0), direction(2.0)).unwrap();
        assert!(dist(p, (0.5, 1.0)) < 1e-12);
        assert!(fb.antipode((1.0, 0.0), direction(1.0)).is_none());
        assert!(fb.antipode((0.3, 0.0), direction(0.0)).is_none());
    }

    #[test]
    fn default_limits() {
        let fb = FloatBoard::from_board(&Board::square());
        let near = |got: &[Pt], want: &[Pt]| {
            got.len() == want.len() && want.iter().all(|w| got.iter().any(|g| dist(*g, *w) < 1e-12))
        };
        assert!(near(&default_limit(&fb, (0.3, 2.7)), &[(1.0, 0.0), (0.0, 1.0)]));
        assert!(near(&default_limit(&fb, (0.2, -3.0)), &[(2.0 / 7.0, 0.0), (1.0, 1.0 / 7.0), (5.0 / 7.0, 1.0), (0.0, 6.0 / 7.0)]));
        assert!(near(&default_limit(&fb, (0.3, -0.4)), &[(0.0, 0.0), (1.0, 0.3), (0.0, 0.7), (1.0, 1.0)]));
    }

    #[test]
    fn dense_looking_orbit_has_all_points() {
        let path = simulate_float(&Board::square(), (1.0 / 3.0, -0.25), (0.0, 0.0), MoveType::First, 80, None);
        assert_eq!(path.points.len(), 80);
        assert!(!path.stopped);
    }
}
