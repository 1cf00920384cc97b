//! Attack equations, fixations and the hyperplane arrangement of a
//! configuration; exact rank and vertex tests; rigid cycles.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dynamics::{status_of, trace, DynamicsError, MoveType, Rider, Trajectory, TrajectoryStatus};
use crate::geometry::{Board, Edge, Move, Point2};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    /// Index of the first piece outside the closed board.
    OutsideBoard(usize),
    NotCyclic,
    Dynamics(DynamicsError),
    /// A point of a full-rank configuration not explained by corner
    /// trajectories, rigid cycles or their crossings.
    Uncertified(Box<Point2>),
}

impl fmt::Display for ArrangementError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrangementError::OutsideBoard(i) => write!(f, "piece {} lies outside the board", i + 1),
            ArrangementError::NotCyclic => write!(f, "trajectory is not cyclic"),
            ArrangementError::Dynamics(e) => write!(f, "{e}"),
            ArrangementError::Uncertified(p) => write!(f, "vertex point {p} has no certificate"),
        }
    }
}

impl From<DynamicsError> for ArrangementError {
    fn from(e: DynamicsError) -> Self {
        ArrangementError::Dynamics(e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HyperplaneKind {
    /// Pieces `i < j` share a line along the given move.
    Attack { i: usize, j: usize, move_type: MoveType },
    /// Piece `piece` lies on the line of board edge `edge`.
    Fixation { piece: usize, edge: usize },
}

/// `normal · z = offset` in `R^{2q}`, coordinates ordered `x_1, y_1, x_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    pub kind: HyperplaneKind,
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Hyperplane {
    pub fn attack(q: usize, i: usize, j: usize, move_type: MoveType, mv: &Move) -> Hyperplane {
        let mut normal = vec![Rational::zero(); 2 * q];
        let (a, b) = (Rational::from(mv.d()), Rational::from(-mv.c()));
        normal[2 * j] = -&a;
        normal[2 * j + 1] = -&b;
        normal[2 * i] = a;
        normal[2 * i + 1] = b;
        Hyperplane { kind: HyperplaneKind::Attack { i, j, move_type }, normal, offset: Rational::zero() }
    }

    pub fn fixation(q: usize, piece: usize, edge_index: usize, edge: &Edge) -> Hyperplane {
        let mut normal = vec![Rational::zero(); 2 * q];
        normal[2 * piece] = edge.fixation.a.clone();
        normal[2 * piece + 1] = edge.fixation.b.clone();
        Hyperplane {
            kind: HyperplaneKind::Fixation { piece, edge: edge_index },
            normal,
            offset: edge.fixation.rhs.clone(),
        }
    }

    pub fn contains(&self, z: &[Point2]) -> bool {
        let mut s = Rational::zero();
        for (k, p) in z.iter().enumerate() {
            s += &(&self.normal[2 * k] * &p.x);
            s += &(&self.normal[2 * k + 1] * &p.y);
        }
        s == self.offset
    }

    /// Pieces with a nonzero coefficient.
    pub fn pieces(&self) -> Vec<usize> {
        match self.kind {
            HyperplaneKind::Attack { i, j, .. } => vec![i, j],
            HyperplaneKind::Fixation { piece, .. } => vec![piece],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HyperplaneSystem {
    pub hyperplanes: Vec<Hyperplane>,
    pub ambient_dim: usize,
}

impl HyperplaneSystem {
    pub fn new(ambient_dim: usize) -> HyperplaneSystem {
        HyperplaneSystem { hyperplanes: Vec::new(), ambient_dim }
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn subsystem(&self, indices: &[usize]) -> HyperplaneSystem {
        HyperplaneSystem {
            hyperplanes: indices.iter().map(|&k| self.hyperplanes[k].clone()).collect(),
            ambient_dim: self.ambient_dim,
        }
    }

    /// The unique common point when the system is consistent of full rank.
    pub fn unique_solution(&self) -> Option<Vec<Rational>> {
        let rows: Vec<Vec<Rational>> = self
            .hyperplanes
            .iter()
            .map(|h| {
                let mut r = h.normal.clone();
                r.push(h.offset.clone());
                r
            })
            .collect();
        solve_augmented(rows, self.ambient_dim)
    }
}

/// Row-reduces in place; returns the pivot columns among the first `cols`.
fn eliminate(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip().expect("nonzero pivot");
        for v in m[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..m[r].len() {
                    let delta = &f * &m[row][c];
                    m[r][c] -= &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn matrix_rank(mut rows: Vec<Vec<Rational>>, cols: usize) -> usize {
    eliminate(&mut rows, cols).len()
}

/// Solves `[A | b]` for the unique solution, if any.
pub(crate) fn solve_augmented(mut rows: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Rational>> {
    let pivots = eliminate(&mut rows, cols);
    if pivots.len() < cols {
        return None;
    }
    // a pivot-free row with a nonzero right-hand side is inconsistent
    if rows[cols..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|k| rows[k][cols].clone()).collect())
}

/// Exact rank of the normals.
pub fn rank(system: &HyperplaneSystem) -> usize {
    matrix_rank(system.hyperplanes.iter().map(|h| h.normal.clone()).collect(), system.ambient_dim)
}

fn check_inside(board: &Board, z: &[Point2]) -> Result<(), ArrangementError> {
    match z.iter().position(|p| !board.contains(p)) {
        Some(i) => Err(ArrangementError::OutsideBoard(i)),
        None => Ok(()),
    }
}

/// All attack equations and fixations on which `z` lies.
pub fn arrangement_of(board: &Board, rider: &Rider, z: &[Point2]) -> Result<HyperplaneSystem, ArrangementError> {
    check_inside(board, z)?;
    let q = z.len();
    let mut sys = HyperplaneSystem::new(2 * q);
    for (i, p) in z.iter().enumerate() {
        for (e, edge) in board.edges().iter().enumerate() {
            if edge.fixation.eval(p) == edge.fixation.rhs {
                sys.hyperplanes.push(Hyperplane::fixation(q, i, e, edge));
            }
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            let (dx, dy) = z[j].sub(&z[i]);
            for t in [MoveType::First, MoveType::Second] {
                let mv = rider.get(t);
                if mv.cross(&dx, &dy).is_zero() {
                    sys.hyperplanes.push(Hyperplane::attack(q, i, j, t, &mv));
                }
            }
        }
    }
    Ok(sys)
}

/// True iff the arrangement of `z` has full rank `2q`.
pub fn is_vertex(board: &Board, rider: &Rider, z: &[Point2]) -> Result<bool, ArrangementError> {
    let sys = arrangement_of(board, rider, z)?;
    Ok(rank(&sys) == sys.ambient_dim)
}

/// Indices of a maximal linearly independent subset, chosen greedily in order.
pub fn independent_subsystem(system: &HyperplaneSystem) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (k, h) in system.hyperplanes.iter().enumerate() {
        rows.push(h.normal.clone());
        if matrix_rank(rows.clone(), system.ambient_dim) == rows.len() {
            chosen.push(k);
        } else {
            rows.pop();
        }
    }
    chosen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleVerdict {
    RigidCycle,
    Treachery,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleClassification {
    pub verdict: CycleVerdict,
    /// The cycle's points, the unique solution of its system, when rigid.
    pub solution: Option<Vec<Point2>>,
}

pub fn classify_cycle(board: &Board, rider: &Rider, t: &Trajectory) -> Result<CycleClassification, ArrangementError> {
    if t.status != TrajectoryStatus::Cyclic {
        return Err(ArrangementError::NotCyclic);
    }
    if is_vertex(board, rider, &t.points)? {
        Ok(CycleClassification { verdict: CycleVerdict::RigidCycle, solution: Some(t.points.clone()) })
    } else {
        Ok(CycleClassification { verdict: CycleVerdict::Treachery, solution: None })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RigidCycle {
    pub trajectory: Trajectory,
    pub configuration: Vec<Point2>,
}

/// `c + k·t`
#[derive(Clone)]
struct Affine {
    c: Rational,
    k: Rational,
}

#[derive(Clone)]
struct AffinePoint {
    x: Affine,
    y: Affine,
}

/// Narrows `[lo, hi]` to the `t` with `c + k·t` in `[0, 1]`.
fn clip(lo: &mut Rational, hi: &mut Rational, f: &Affine) -> bool {
    if f.k.is_zero() {
        return !f.c.is_negative() && f.c <= Rational::one();
    }
    let a = -&f.c / &f.k;
    let b = (Rational::one() - &f.c) / &f.k;
    let (l, h) = if f.k.is_positive() { (a, b) } else { (b, a) };
    if l > *lo {
        *lo = l;
    }
    if h < *hi {
        *hi = h;
    }
    lo <= hi
}

/// Position along `edge` (0 at start, 1 at end) of a point on its line.
fn edge_param(edge: &Edge, p: &AffinePoint) -> Affine {
    let (ex, ey) = edge.end.sub(&edge.start);
    let len2 = &ex * &ex + &ey * &ey;
    let c = ((&p.x.c - &edge.start.x) * &ex + (&p.y.c - &edge.start.y) * &ey) / &len2;
    let k = (&p.x.k * &ex + &p.y.k * &ey) / &len2;
    Affine { c, k }
}

struct CycleSearch<'a> {
    board: &'a Board,
    rider: &'a Rider,
    len: usize,
    first: MoveType,
    e1: usize,
    found: Vec<RigidCycle>,
    seen: &'a mut BTreeSet<Vec<Point2>>,
}

impl CycleSearch<'_> {
    /// Moves the affine point `p` along move `t` to the line of edge `to`.
    fn step(&self, p: &AffinePoint, t: MoveType, to: usize) -> Option<AffinePoint> {
        let fix = &self.board.edges()[to].fixation;
        let mv = self.rider.get(t);
        let (dx, dy) = (mv.dx(), mv.dy());
        let am = fix.along(&dx, &dy);
        if am.is_zero() {
            return None;
        }
        // λ(t) = (β − α·p(t)) / (α·m)
        let lc = (&fix.rhs - &(&fix.a * &p.x.c) - &(&fix.b * &p.y.c)) / &am;
        let lk = -(&(&fix.a * &p.x.k) + &(&fix.b * &p.y.k)) / &am;
        Some(AffinePoint {
            x: Affine { c: &p.x.c + &(&lc * &dx), k: &p.x.k + &(&lk * &dx) },
            y: Affine { c: &p.y.c + &(&lc * &dy), k: &p.y.k + &(&lk * &dy) },
        })
    }

    fn run(&mut self) {
        let edge = &self.board.edges()[self.e1];
        let (ex, ey) = edge.end.sub(&edge.start);
        let b1 = AffinePoint {
            x: Affine { c: edge.start.x.clone(), k: ex },
            y: Affine { c: edge.start.y.clone(), k: ey },
        };
        self.extend(&b1, self.e1, 1, Rational::zero(), Rational::one());
    }

    fn extend(&mut self, p: &AffinePoint, at: usize, depth: usize, lo: Rational, hi: Rational) {
        let t = self.first.after(depth - 1);
        if depth == self.len {
            if at == self.e1 {
                return;
            }
            if let Some(back) = self.step(p, t, self.e1) {
                self.close(&back, lo, hi);
            }
            return;
        }
        for to in 0..self.board.edges().len() {
            if to == at {
                continue;
            }
            let Some(next) = self.step(p, t, to) else { continue };
            let (mut l, mut h) = (lo.clone(), hi.clone());
            if !clip(&mut l, &mut h, &edge_param(&self.board.edges()[to], &next)) {
                continue;
            }
            self.extend(&next, to, depth + 1, l, h);
        }
    }

    fn close(&mut self, back: &AffinePoint, lo: Rational, hi: Rational) {
        // b_{l+1}(t) lies on edge e1 at parameter s(t); closure is s(t) = t
        let s = edge_param(&self.board.edges()[self.e1], back);
        let slope = &s.k - &Rational::one();
        if slope.is_zero() {
            // a continuum of solutions or none: never rigid
            return;
        }
        let t = -&s.c / &slope;
        if t < lo || t > hi {
            return;
        }
        let edge = &self.board.edges()[self.e1];
        let (ex, ey) = edge.end.sub(&edge.start);
        let start = edge.start.offset(&ex, &ey, &t);
        if self.board.is_corner(&start) {
            return;
        }
        let Ok(tr) = trace(self.board, self.rider, &start, self.first, self.len) else { return };
        if tr.status != TrajectoryStatus::Cyclic || tr.len() != self.len {
            return;
        }
        if tr.points.iter().any(|p| self.board.is_corner(p)) {
            return;
        }
        let mut key = tr.points.clone();
        key.sort();
        if self.seen.contains(&key) {
            return;
        }
        match classify_cycle(self.board, self.rider, &tr) {
            Ok(CycleClassification { verdict: CycleVerdict::RigidCycle, .. }) => {}
            _ => return,
        }
        self.seen.insert(key);
        let tr = rotate_to_min(tr);
        self.found.push(RigidCycle { configuration: tr.points.clone(), trajectory: tr });
    }
}

fn rotate_to_min(t: Trajectory) -> Trajectory {
    let k = (0..t.len()).min_by(|&a, &b| t.points[a].cmp(&t.points[b])).unwrap_or(0);
    let mut points = t.points.clone();
    points.rotate_left(k);
    Trajectory { points, first_move_type: t.first_move_type.after(k), status: t.status }
}

/// All rigid cycles of length at most `max_len`, by solving the cycle
/// system of every edge sequence and alternating move pattern. Each cycle is
/// reported once, rotated to start at its smallest point; output is ordered
/// by length, then points.
pub fn enumerate_rigid_cycles(board: &Board, rider: &Rider, max_len: usize) -> Vec<RigidCycle> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for len in (2..=max_len).step_by(2) {
        let mut level = Vec::new();
        for e1 in 0..board.edges().len() {
            for first in [MoveType::First, MoveType::Second] {
                let mut s = CycleSearch { board, rider, len, first, e1, found: Vec::new(), seen: &mut seen };
                s.run();
                level.extend(s.found);
            }
        }
        level.sort_by(|a, b| a.configuration.cmp(&b.configuration));
        out.extend(level);
    }
    out
}

/// Splits a finite set of distinct boundary points into the maximal
/// trajectories it contains: two points are linked when one is the
/// antipode of the other along some move.
pub fn partition_into_trajectories(board: &Board, rider: &Rider, points: &[Point2]) -> Result<Vec<Trajectory>, ArrangementError> {
    use crate::dynamics::antipode;
    let n = points.len();
    // link[k][r] = index of s_r(points[k]) if it is in the set and differs
    let mut link = vec![[None::<usize>; 2]; n];
    for (k, p) in points.iter().enumerate() {
        for (r, t) in [MoveType::First, MoveType::Second].into_iter().enumerate() {
            let a = antipode(board, &rider.get(t), p)?;
            if &a != p {
                link[k][r] = points.iter().position(|x| x == &a);
            }
        }
    }
    let mut used = vec![false; n];
    let mut out = Vec::new();
    let walk = |start: usize, r0: usize, used: &mut Vec<bool>| -> Vec<usize> {
        let mut seq = vec![start];
        used[start] = true;
        let (mut cur, mut r) = (start, r0);
        while let Some(nx) = link[cur][r] {
            if used[nx] {
                break;
            }
            used[nx] = true;
            seq.push(nx);
            cur = nx;
            r = 1 - r;
        }
        seq
    };
    // paths first, from an endpoint
    for k in 0..n {
        if used[k] {
            continue;
        }
        let deg = link[k].iter().filter(|l| l.is_some()).count();
        if deg == 2 {
            continue;
        }
        let r0 = if link[k][0].is_some() { 0 } else { 1 };
        let seq = walk(k, r0, &mut used);
        let first = if r0 == 0 { MoveType::First } else { MoveType::Second };
        let pts: Vec<Point2> = seq.iter().map(|&i| points[i].clone()).collect();
        let status = status_of(board, rider, &pts, first)?;
        out.push(Trajectory { points: pts, first_move_type: first, status });
    }
    // whatever is left lies on closed cycles
    for k in 0..n {
        if used[k] {
            continue;
        }
        let seq = walk(k, 0, &mut used);
        let pts: Vec<Point2> = seq.iter().map(|&i| points[i].clone()).collect();
        out.push(Trajectory { points: pts, first_move_type: MoveType::First, status: TrajectoryStatus::Cyclic });
    }
    Ok(out)
}
