//! The chess attack map on the boundary of a convex board.
//!
//! A particle on the boundary leaves along one of the rider's two moves,
//! crosses the board, and on arrival switches to the other move. The two
//! antipode maps `s_1`, `s_2` send a boundary point to the far end of its
//! chord along move 1 or move 2; the attack map alternates them.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::geometry::{canonical_move, Board, GeometryError, Move, Point2};
use crate::rational::Rational;

/// Default step cap for open-ended tracing.
pub const DEFAULT_MAX_STEPS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynamicsError {
    NotOnBoundary(Box<Point2>),
}

impl fmt::Display for DynamicsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynamicsError::NotOnBoundary(p) => write!(f, "point {p:?} is not on the board boundary"),
        }
    }
}

/// Which of the rider's two basic moves a segment is parallel to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveType {
    First,
    Second,
}

impl MoveType {
    pub fn other(self) -> MoveType {
        match self {
            MoveType::First => MoveType::Second,
            MoveType::Second => MoveType::First,
        }
    }

    /// 1 or 2.
    pub fn number(self) -> u8 {
        match self {
            MoveType::First => 1,
            MoveType::Second => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<MoveType> {
        match n {
            1 => Some(MoveType::First),
            2 => Some(MoveType::Second),
            _ => None,
        }
    }

    /// The type after `steps` alternations.
    pub fn after(self, steps: usize) -> MoveType {
        if steps.is_multiple_of(2) {
            self
        } else {
            self.other()
        }
    }
}

/// A two-move rider: two non-parallel canonical basic moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rider {
    moves: [Move; 2],
}

impl Rider {
    pub fn new(first: Move, second: Move) -> Result<Rider, GeometryError> {
        if first.is_parallel(&second) {
            return Err(GeometryError::ParallelMoves);
        }
        Ok(Rider { moves: [first, second] })
    }

    pub fn from_pairs(first: (i64, i64), second: (i64, i64)) -> Result<Rider, GeometryError> {
        Rider::new(canonical_move(first.0, first.1)?, canonical_move(second.0, second.1)?)
    }

    pub fn bishop() -> Rider {
        Rider::from_pairs((1, 1), (1, -1)).unwrap()
    }

    /// Slopes 1/2 and 2.
    pub fn inclined_nightrider() -> Rider {
        Rider::from_pairs((2, 1), (1, 2)).unwrap()
    }

    /// Slopes 1/2 and -2.
    pub fn orthonightrider() -> Rider {
        Rider::from_pairs((2, 1), (1, -2)).unwrap()
    }

    /// Slopes 1/2 and -1/2.
    pub fn lateral_nightrider() -> Rider {
        Rider::from_pairs((2, 1), (2, -1)).unwrap()
    }

    pub fn get(&self, t: MoveType) -> Move {
        match t {
            MoveType::First => self.moves[0],
            MoveType::Second => self.moves[1],
        }
    }

    pub fn moves(&self) -> [Move; 2] {
        self.moves
    }

    pub fn swapped(&self) -> Rider {
        Rider { moves: [self.moves[1], self.moves[0]] }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// A boundary point together with the move type of its outgoing chord.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParticleState {
    pub position: Point2,
    pub move_type: MoveType,
    /// Which of `±m` leaves the point into the board; `Positive` for stop states.
    pub orientation: Sign,
}

impl ParticleState {
    pub fn new(board: &Board, rider: &Rider, position: Point2, move_type: MoveType) -> Result<Self, DynamicsError> {
        let orientation = chord_parameter(board, &rider.get(move_type), &position)?
            .map(|l| if l.is_negative() { Sign::Negative } else { Sign::Positive })
            .unwrap_or(Sign::Positive);
        Ok(ParticleState { position, move_type, orientation })
    }
}

/// Parameter `λ` with `b + λ·m` the far end of the chord through `b`, or
/// `None` when the line through `b` misses the board interior.
fn chord_parameter(board: &Board, mv: &Move, b: &Point2) -> Result<Option<Rational>, DynamicsError> {
    if !board.classify(b).on_boundary() {
        return Err(DynamicsError::NotOnBoundary(Box::new(b.clone())));
    }
    let (dx, dy) = (mv.dx(), mv.dy());
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for e in board.edges() {
        let along = e.fixation.along(&dx, &dy);
        let slack = &e.fixation.rhs - e.fixation.eval(b);
        if along.is_zero() {
            if slack.is_zero() {
                // the line runs along this side
                return Ok(None);
            }
            continue;
        }
        let bound = slack / &along;
        if along.is_positive() {
            hi = Some(match hi {
                Some(h) => h.min(bound),
                None => bound,
            });
        } else {
            lo = Some(match lo {
                Some(l) => l.max(bound),
                None => bound,
            });
        }
    }
    let (lo, hi) = (lo.unwrap_or_else(Rational::zero), hi.unwrap_or_else(Rational::zero));
    if hi.is_positive() {
        Ok(Some(hi))
    } else if lo.is_negative() {
        Ok(Some(lo))
    } else {
        Ok(None)
    }
}

/// The antipode map: the other end of the chord through `b` parallel to
/// `mv`, or `b` itself when that line misses the interior.
pub fn antipode(board: &Board, mv: &Move, b: &Point2) -> Result<Point2, DynamicsError> {
    Ok(match chord_parameter(board, mv, b)? {
        Some(l) => b.offset(&mv.dx(), &mv.dy(), &l),
        None => b.clone(),
    })
}

/// One step of the chess attack map; `None` is a stop.
pub fn attack_map(board: &Board, rider: &Rider, state: &ParticleState) -> Result<Option<ParticleState>, DynamicsError> {
    let next = antipode(board, &rider.get(state.move_type), &state.position)?;
    if next == state.position {
        return Ok(None);
    }
    ParticleState::new(board, rider, next, state.move_type.other()).map(Some)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrajectoryStatus {
    /// The attack map sends the last point back to the first.
    Cyclic,
    /// The extended trajectory starts at the first point and ends at the last.
    StoppedBothEnds,
    /// Ends at the last point; continues before the first.
    StoppedForward,
    /// Starts at the first point; continues after the last.
    StoppedBackward,
    /// Continues past both ends; `cap` is the point budget that cut it.
    Truncated { cap: usize },
}

/// Distinct boundary points joined by chords of alternating move types.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trajectory {
    pub points: Vec<Point2>,
    pub first_move_type: MoveType,
    pub status: TrajectoryStatus,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.status == TrajectoryStatus::Cyclic
    }

    /// Move type of the chord from `points[i]` to `points[i + 1]`.
    pub fn segment_type(&self, i: usize) -> MoveType {
        self.first_move_type.after(i)
    }

    pub fn contains_corner(&self, board: &Board) -> bool {
        self.points.iter().any(|p| board.is_corner(p))
    }

    /// The same trajectory traversed in the opposite direction.
    pub fn reversed(&self) -> Trajectory {
        let mut points = self.points.clone();
        points.reverse();
        let first_move_type = if self.points.len() > 1 {
            self.segment_type(self.points.len() - 2)
        } else {
            self.first_move_type
        };
        let status = match self.status {
            TrajectoryStatus::StoppedForward => TrajectoryStatus::StoppedBackward,
            TrajectoryStatus::StoppedBackward => TrajectoryStatus::StoppedForward,
            s => s,
        };
        Trajectory { points, first_move_type, status }
    }
}

/// Status of a run of points read off an extended trajectory.
pub fn status_of(board: &Board, rider: &Rider, points: &[Point2], first: MoveType) -> Result<TrajectoryStatus, DynamicsError> {
    let (head, tail) = (&points[0], &points[points.len() - 1]);
    let next_type = first.after(points.len() - 1);
    let after = antipode(board, &rider.get(next_type), tail)?;
    if points.len() > 1 && points.len().is_multiple_of(2) && &after == head {
        return Ok(TrajectoryStatus::Cyclic);
    }
    let before = antipode(board, &rider.get(first.other()), head)?;
    Ok(match (&before == head, &after == tail) {
        (true, true) => TrajectoryStatus::StoppedBothEnds,
        (false, true) => TrajectoryStatus::StoppedForward,
        (true, false) => TrajectoryStatus::StoppedBackward,
        (false, false) => TrajectoryStatus::Truncated { cap: points.len() },
    })
}

/// Iterates the attack map from `start`, recording at most `max_len` points.
///
/// Backward tracing is this same call with the other first move type.
pub fn trace(board: &Board, rider: &Rider, start: &Point2, first: MoveType, max_len: usize) -> Result<Trajectory, DynamicsError> {
    let max_len = max_len.max(1);
    let backward_stops = antipode(board, &rider.get(first.other()), start)? == *start;
    let mut points = alloc::vec![start.clone()];
    let mut t = first;
    let forward_stopped;
    loop {
        let last = &points[points.len() - 1];
        let next = antipode(board, &rider.get(t), last)?;
        if &next == last {
            forward_stopped = true;
            break;
        }
        // The attack map is injective, so the first repeated (point, type)
        // state is necessarily the start state.
        if next == *start && t.other() == first {
            return Ok(Trajectory { points, first_move_type: first, status: TrajectoryStatus::Cyclic });
        }
        if points.len() == max_len {
            forward_stopped = false;
            break;
        }
        points.push(next);
        t = t.other();
    }
    let status = match (backward_stops, forward_stopped) {
        (true, true) => TrajectoryStatus::StoppedBothEnds,
        (false, true) => TrajectoryStatus::StoppedForward,
        (true, false) => TrajectoryStatus::StoppedBackward,
        (false, false) => TrajectoryStatus::Truncated { cap: max_len },
    };
    Ok(Trajectory { points, first_move_type: first, status })
}

/// Traces of length at most `max_len` from every corner with both first move
/// types, in corner order. Opposite traversals of one point set are kept.
pub fn corner_trajectories(board: &Board, rider: &Rider, max_len: usize) -> Vec<Trajectory> {
    let mut out = Vec::with_capacity(2 * board.corners().len());
    for c in board.corners() {
        for t in [MoveType::First, MoveType::Second] {
            out.push(trace(board, rider, c, t, max_len).expect("corners lie on the boundary"));
        }
    }
    out
}

/// A trajectory extended by the neighbouring point at each end where the
/// flow continues. For a cycle the first point is repeated at the end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AugmentedTrajectory {
    pub points: Vec<Point2>,
    /// Span of the original trajectory inside `points`.
    pub core_range: Range<usize>,
    /// Move type of the chord from `points[0]` to `points[1]`.
    pub first_move_type: MoveType,
}

impl AugmentedTrajectory {
    /// Chords `(from, to, type)` in order.
    pub fn segments(&self) -> impl Iterator<Item = (&Point2, &Point2, MoveType)> + '_ {
        self.points
            .windows(2)
            .enumerate()
            .map(move |(i, w)| (&w[0], &w[1], self.first_move_type.after(i)))
    }

    pub fn segment_count(&self) -> usize {
        self.points.len().saturating_sub(1)
    }
}

pub fn augment(board: &Board, rider: &Rider, t: &Trajectory) -> AugmentedTrajectory {
    let l = t.points.len();
    if t.is_cyclic() {
        let mut points = t.points.clone();
        points.push(t.points[0].clone());
        return AugmentedTrajectory { points, core_range: 0..l, first_move_type: t.first_move_type };
    }
    let head = &t.points[0];
    let tail = &t.points[l - 1];
    let before = antipode(board, &rider.get(t.first_move_type.other()), head).expect("trajectory on boundary");
    let after = antipode(board, &rider.get(t.first_move_type.after(l - 1)), tail).expect("trajectory on boundary");
    let mut points = Vec::with_capacity(l + 2);
    let mut first_move_type = t.first_move_type;
    let mut start = 0;
    if &before != head {
        points.push(before);
        first_move_type = t.first_move_type.other();
        start = 1;
    }
    points.extend(t.points.iter().cloned());
    if &after != tail {
        points.push(after);
    }
    AugmentedTrajectory { points, core_range: start..start + l, first_move_type }
}

fn canonical_window(t: Trajectory) -> Trajectory {
    if t.points.len() == 1 {
        return Trajectory { first_move_type: MoveType::First, ..t };
    }
    let r = t.reversed();
    if r.points < t.points {
        r
    } else {
        t
    }
}

/// Every trajectory of length at most `max_len` that contains a corner,
/// read off the extended trajectories through the corners. A corner can sit
/// anywhere in the window, not only at an end. Each point sequence appears
/// once, in the direction with the lexicographically smaller point list.
pub fn corner_windows(board: &Board, rider: &Rider, max_len: usize) -> Vec<Trajectory> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |board: &Board, pts: Vec<Point2>, first: MoveType| {
        let status = status_of(board, rider, &pts, first).expect("boundary points");
        let w = canonical_window(Trajectory { points: pts, first_move_type: first, status });
        if seen.insert((w.points.clone(), w.first_move_type)) {
            out.push(w);
        }
    };
    for c in board.corners() {
        let f1 = trace(board, rider, c, MoveType::First, max_len).expect("corner");
        if f1.is_cyclic() {
            let p = f1.len();
            for s in 0..p {
                for len in 1..=max_len.min(p) {
                    // window [s, s + len) must cover index 0 (the corner) mod p
                    if s != 0 && s + len <= p {
                        continue;
                    }
                    let pts: Vec<Point2> = (0..len).map(|k| f1.points[(s + k) % p].clone()).collect();
                    let first = if len == p { f1.first_move_type.after(s) } else { f1.segment_type(s % p) };
                    push(board, pts, first);
                }
            }
            continue;
        }
        let f2 = trace(board, rider, c, MoveType::Second, max_len).expect("corner");
        let mut ext: Vec<Point2> = f1.points.iter().rev().cloned().collect();
        let k0 = ext.len() - 1;
        ext.extend(f2.points.iter().skip(1).cloned());
        // chord ext[j] -> ext[j + 1] has type Second at j = k0, alternating
        let seg_type = |j: usize| {
            if (j + k0) % 2 == (2 * k0) % 2 {
                MoveType::Second
            } else {
                MoveType::First
            }
        };
        for i in 0..=k0 {
            for j in k0..ext.len() {
                let len = j - i + 1;
                if len > max_len {
                    break;
                }
                let pts = ext[i..=j].to_vec();
                let distinct = pts.iter().enumerate().all(|(a, p)| pts[a + 1..].iter().all(|q| q != p));
                if !distinct {
                    continue;
                }
                push(board, pts, seg_type(i));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq() -> Board {
        Board::square()
    }

    fn mv(c: i64, d: i64) -> Move {
        canonical_move(c, d).unwrap()
    }

    #[test]
    fn antipode_examples() {
        let b = sq();
        assert_eq!(antipode(&b, &mv(1, 1), &Point2::int(0, 0)).unwrap(), Point2::int(1, 1));
        assert_eq!(antipode(&b, &mv(1, 2), &Point2::int(0, 0)).unwrap(), Point2::frac(1, 2, 1, 1));
        assert_eq!(antipode(&b, &mv(1, 1), &Point2::int(1, 0)).unwrap(), Point2::int(1, 0));
        assert_eq!(
            antipode(&b, &mv(1, 1), &Point2::frac(1, 2, 1, 2)),
            Err(DynamicsError::NotOnBoundary(Box::new(Point2::frac(1, 2, 1, 2))))
        );
        // a move along a side fixes every point of that side
        assert_eq!(antipode(&b, &mv(1, 0), &Point2::frac(1, 3, 0, 1)).unwrap(), Point2::frac(1, 3, 0, 1));
    }

    #[test]
    fn attack_map_examples() {
        let b = sq();
        let bishop = Rider::bishop();
        let x = Rational::new(2, 7);
        let s = ParticleState::new(&b, &bishop, Point2::new(x.clone(), Rational::zero()), MoveType::First).unwrap();
        let n = attack_map(&b, &bishop, &s).unwrap().unwrap();
        assert_eq!(n.position, Point2::new(Rational::one(), Rational::one() - &x));
        assert_eq!(n.move_type, MoveType::Second);
        // moving along (1,-1) from the east side goes up-left
        assert_eq!(n.orientation, Sign::Negative);

        let knightish = Rider::from_pairs((2, 1), (1, 2)).unwrap();
        let s = ParticleState::new(&b, &knightish, Point2::int(0, 0), MoveType::First).unwrap();
        let n = attack_map(&b, &knightish, &s).unwrap().unwrap();
        assert_eq!(n.position, Point2::frac(1, 1, 1, 2));

        let s = ParticleState::new(&b, &bishop, Point2::int(1, 0), MoveType::First).unwrap();
        assert_eq!(attack_map(&b, &bishop, &s).unwrap(), None);
    }

    #[test]
    fn trace_rigid_cycle() {
        let t = trace(&sq(), &Rider::orthonightrider(), &Point2::frac(1, 3, 0, 1), MoveType::First, 100).unwrap();
        assert_eq!(t.status, TrajectoryStatus::Cyclic);
        assert_eq!(
            t.points,
            alloc::vec![
                Point2::frac(1, 3, 0, 1),
                Point2::frac(1, 1, 1, 3),
                Point2::frac(2, 3, 1, 1),
                Point2::frac(0, 1, 2, 3)
            ]
        );
    }

    #[test]
    fn trace_diagonal_stops_both_ends() {
        let t = trace(&sq(), &Rider::bishop(), &Point2::int(0, 0), MoveType::First, 100).unwrap();
        assert_eq!(t.status, TrajectoryStatus::StoppedBothEnds);
        assert_eq!(t.points, alloc::vec![Point2::int(0, 0), Point2::int(1, 1)]);
    }

    #[test]
    fn trace_cap_and_errors() {
        let t = trace(&sq(), &Rider::inclined_nightrider(), &Point2::int(0, 0), MoveType::First, 40).unwrap();
        assert_eq!(t.status, TrajectoryStatus::Truncated { cap: 40 });
        assert_eq!(t.len(), 40);
        assert!(trace(&sq(), &Rider::bishop(), &Point2::frac(1, 2, 1, 2), MoveType::First, 5).is_err());
    }

    #[test]
    fn augment_examples() {
        let b = sq();
        let inclined = Rider::inclined_nightrider();
        let t = trace(&b, &inclined, &Point2::int(0, 0), MoveType::First, 2).unwrap();
        assert_eq!(t.points, alloc::vec![Point2::int(0, 0), Point2::frac(1, 1, 1, 2)]);
        let a = augment(&b, &inclined, &t);
        // both moves enter at (0,0), so the flow also continues backward
        assert_eq!(
            a.points,
            alloc::vec![Point2::frac(1, 2, 1, 1), Point2::int(0, 0), Point2::frac(1, 1, 1, 2), Point2::frac(3, 4, 0, 1)]
        );
        assert_eq!(a.core_range, 1..3);
        assert_eq!(a.first_move_type, MoveType::Second);

        let bishop = Rider::bishop();
        let t = trace(&b, &bishop, &Point2::int(0, 0), MoveType::First, 5).unwrap();
        assert_eq!(augment(&b, &bishop, &t).points, t.points);

        let t = trace(&b, &Rider::orthonightrider(), &Point2::frac(1, 3, 0, 1), MoveType::First, 10).unwrap();
        let a = augment(&b, &Rider::orthonightrider(), &t);
        assert_eq!(a.points.len(), 5);
        assert_eq!(a.points[0], a.points[4]);
    }

    #[test]
    fn corner_trajectory_examples() {
        let b = sq();
        let bishop_long: Vec<_> =
            corner_trajectories(&b, &Rider::bishop(), 5).into_iter().filter(|t| t.len() > 1).collect();
        assert_eq!(bishop_long.len(), 4);
        assert!(bishop_long.iter().all(|t| t.len() == 2 && t.status == TrajectoryStatus::StoppedBothEnds));

        let ortho = corner_trajectories(&b, &Rider::orthonightrider(), 5);
        assert!(ortho.iter().any(|t| t.points
            == alloc::vec![
                Point2::int(0, 0),
                Point2::frac(1, 1, 1, 2),
                Point2::frac(3, 4, 1, 1),
                Point2::frac(0, 1, 5, 8),
                Point2::frac(5, 16, 0, 1)
            ]));
    }

    #[test]
    fn corner_windows_include_mid_corner_runs() {
        let b = sq();
        let w = corner_windows(&b, &Rider::inclined_nightrider(), 3);
        let mid = [Point2::frac(1, 1, 1, 2), Point2::int(0, 0), Point2::frac(1, 2, 1, 1)];
        assert!(w.iter().any(|t| t.points == mid || t.points.iter().rev().eq(mid.iter())));
        for t in &w {
            assert!(t.contains_corner(&b));
            assert!(t.len() <= 3);
        }
    }
}
