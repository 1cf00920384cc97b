//! Crossing points, the decomposition of vertices into trajectories and
//! crossings, and the denominator of the inside-out polytope.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::arrangement::{
    arrangement_of, enumerate_rigid_cycles, partition_into_trajectories, rank, solve_augmented, ArrangementError,
    Hyperplane, RigidCycle,
};
use crate::dynamics::{augment, corner_windows, AugmentedTrajectory, MoveType, Rider, Trajectory};
use crate::geometry::{point_denominator, BoundaryLocation, Board, Point2};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CrossKind {
    Cross,
    SelfCross,
}

/// An interior point on segments of two augmentations with different move
/// types. `sources` holds `(trajectory id, segment index)` for each side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CrossingPoint {
    pub location: Point2,
    pub sources: [(usize, usize); 2],
    pub kind: CrossKind,
}

fn cross(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * by - ay * bx
}

/// Intersection of segments `p0p1` and `q0q1` when they are not parallel.
fn segment_intersection(p0: &Point2, p1: &Point2, q0: &Point2, q1: &Point2) -> Option<Point2> {
    let (ux, uy) = p1.sub(p0);
    let (wx, wy) = q1.sub(q0);
    let den = cross(&ux, &uy, &wx, &wy);
    if den.is_zero() {
        return None;
    }
    let (hx, hy) = q0.sub(p0);
    let s = cross(&hx, &hy, &wx, &wy) / &den;
    let t = cross(&hx, &hy, &ux, &uy) / &den;
    let unit = |v: &Rational| !v.is_negative() && *v <= Rational::one();
    if !unit(&s) || !unit(&t) {
        return None;
    }
    Some(p0.offset(&ux, &uy, &s))
}

/// Crossing points between augmentations `a` (id `a_id`) and `b` (id
/// `b_id`). Equal ids mean self-crossings, where only non-adjacent segments
/// are compared.
pub fn crossing_points(
    board: &Board,
    a: &AugmentedTrajectory,
    a_id: usize,
    b: &AugmentedTrajectory,
    b_id: usize,
) -> Vec<CrossingPoint> {
    let same = a_id == b_id;
    let kind = if same { CrossKind::SelfCross } else { CrossKind::Cross };
    let sa: Vec<_> = a.segments().collect();
    let sb: Vec<_> = b.segments().collect();
    let mut out = Vec::new();
    for (i, (p0, p1, ta)) in sa.iter().enumerate() {
        let start = if same { i + 2 } else { 0 };
        for (j, (q0, q1, tb)) in sb.iter().enumerate().skip(start) {
            if ta == tb {
                continue;
            }
            if same && i == 0 && j + 1 == sb.len() && a.points.first() == a.points.last() {
                // first and last segments of a closed cycle meet at the wrap point
                continue;
            }
            let Some(c) = segment_intersection(p0, p1, q0, q1) else { continue };
            if board.classify(&c) != BoundaryLocation::Interior {
                continue;
            }
            out.push(CrossingPoint { location: c, sources: [(a_id, i), (b_id, j)], kind });
        }
    }
    out
}

/// Boundary points split into trajectories plus certified interior crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDecomposition {
    /// Corner trajectories and rigid cycles covering the boundary points.
    pub trajectories: Vec<Trajectory>,
    /// One certificate per distinct interior point; trajectory ids index
    /// `trajectories`.
    pub crossings: Vec<CrossingPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexCharacterization {
    Vertex(VertexDecomposition),
    NotVertex { rank: usize, deficiency: usize },
}

/// Decomposes a vertex into corner trajectories, rigid cycles and
/// crossing points of their augmentations.
pub fn characterize_vertex(board: &Board, rider: &Rider, z: &[Point2]) -> Result<VertexCharacterization, ArrangementError> {
    let sys = arrangement_of(board, rider, z)?;
    let r = rank(&sys);
    if r < sys.ambient_dim {
        return Ok(VertexCharacterization::NotVertex { rank: r, deficiency: sys.ambient_dim - r });
    }
    let mut boundary: Vec<Point2> = Vec::new();
    let mut interior: Vec<Point2> = Vec::new();
    for p in z {
        let list = if board.classify(p).on_boundary() { &mut boundary } else { &mut interior };
        if !list.contains(p) {
            list.push(p.clone());
        }
    }
    let trajectories = partition_into_trajectories(board, rider, &boundary)?;
    for t in &trajectories {
        if !t.is_cyclic() && !t.contains_corner(board) {
            return Err(ArrangementError::Uncertified(Box::new(t.points[0].clone())));
        }
    }
    let augs: Vec<AugmentedTrajectory> = trajectories.iter().map(|t| augment(board, rider, t)).collect();
    let mut crossings = Vec::new();
    'points: for c in &interior {
        for i in 0..augs.len() {
            for j in i..augs.len() {
                if let Some(x) = crossing_points(board, &augs[i], i, &augs[j], j).into_iter().find(|x| &x.location == c) {
                    crossings.push(x);
                    continue 'points;
                }
            }
        }
        return Err(ArrangementError::Uncertified(Box::new(c.clone())));
    }
    Ok(VertexCharacterization::Vertex(VertexDecomposition { trajectories, crossings }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ContributionCategory {
    RigidCyclePoint,
    CornerTrajectoryPoint,
    SelfCross,
    Cross,
}

impl ContributionCategory {
    pub fn name(self) -> &'static str {
        match self {
            ContributionCategory::RigidCyclePoint => "rigid_cycle_point",
            ContributionCategory::CornerTrajectoryPoint => "corner_trajectory_point",
            ContributionCategory::SelfCross => "self_cross",
            ContributionCategory::Cross => "cross",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub category: ContributionCategory,
    pub point: Point2,
    pub denominator: BigInt,
    /// A vertex of the `q`-piece polytope having `point` as a coordinate pair.
    pub witness: Vec<Point2>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorReport {
    pub q: usize,
    pub value: BigInt,
    /// Sorted by category, then point; one entry per (category, point).
    pub contributions: Vec<Contribution>,
}

fn padded(mut pts: Vec<Point2>, q: usize) -> Vec<Point2> {
    let last = pts.last().cloned().expect("nonempty witness");
    while pts.len() < q {
        pts.push(last.clone());
    }
    pts
}

/// The denominator of the inside-out polytope for `q` pieces: the lcm of
/// the denominators of points on corner trajectories and rigid cycles of
/// length at most `q`, self-crossings of augmentations of length at most
/// `q - 1`, and crossings of pairs whose lengths sum to at most `q - 1`.
pub fn denominator(board: &Board, rider: &Rider, q: usize) -> DenominatorReport {
    let q = q.max(1);
    let windows = corner_windows(board, rider, q);
    let cycles: Vec<RigidCycle> = enumerate_rigid_cycles(board, rider, q);
    let mut found: BTreeMap<(ContributionCategory, Point2), Vec<Point2>> = BTreeMap::new();
    let mut add = |cat, p: &Point2, witness: Vec<Point2>| {
        found.entry((cat, p.clone())).or_insert_with(|| padded(witness, q));
    };

    for w in &windows {
        for p in &w.points {
            add(ContributionCategory::CornerTrajectoryPoint, p, w.points.clone());
        }
    }
    for c in &cycles {
        for p in &c.configuration {
            add(ContributionCategory::RigidCyclePoint, p, c.configuration.clone());
        }
    }

    let all: Vec<&Trajectory> = windows.iter().chain(cycles.iter().map(|c| &c.trajectory)).filter(|t| t.len() < q).collect();
    let augs: Vec<AugmentedTrajectory> = all.iter().map(|t| augment(board, rider, t)).collect();
    for i in 0..all.len() {
        for j in i..all.len() {
            let total = if i == j { all[i].len() } else { all[i].len() + all[j].len() };
            if total > q - 1 {
                continue;
            }
            for x in crossing_points(board, &augs[i], i, &augs[j], j) {
                let mut witness = all[i].points.clone();
                if i != j {
                    witness.extend(all[j].points.iter().cloned());
                }
                witness.push(x.location.clone());
                let cat = if i == j { ContributionCategory::SelfCross } else { ContributionCategory::Cross };
                add(cat, &x.location, witness);
            }
        }
    }

    let mut value = BigInt::from(1);
    let contributions = found
        .into_iter()
        .map(|((category, point), witness)| {
            let denominator = point_denominator(&point);
            value = value.lcm(&denominator);
            Contribution { category, point, denominator, witness }
        })
        .collect();
    DenominatorReport { q, value, contributions }
}

/// Brute-force denominator: solves every `2q`-subset of fixations and
/// attack equations and takes the lcm over the solutions inside the board.
/// The cost grows like `binom(q·edges + q(q-1), 2q)`; meant for `q <= 3`.
pub fn vertex_oracle(board: &Board, rider: &Rider, q: usize) -> BigInt {
    let q = q.max(1);
    let mut planes: Vec<Hyperplane> = Vec::new();
    for i in 0..q {
        for (e, edge) in board.edges().iter().enumerate() {
            planes.push(Hyperplane::fixation(q, i, e, edge));
        }
    }
    for i in 0..q {
        for j in i + 1..q {
            for t in [MoveType::First, MoveType::Second] {
                planes.push(Hyperplane::attack(q, i, j, t, &rider.get(t)));
            }
        }
    }
    let k = 2 * q;
    let mut value = BigInt::from(1);
    let mut idx: Vec<usize> = (0..k).collect();
    if planes.len() < k {
        return value;
    }
    loop {
        let rows = idx
            .iter()
            .map(|&h| {
                let mut r = planes[h].normal.clone();
                r.push(planes[h].offset.clone());
                r
            })
            .collect();
        if let Some(sol) = solve_augmented(rows, k) {
            let pts: Vec<Point2> = sol.chunks(2).map(|c| Point2::new(c[0].clone(), c[1].clone())).collect();
            if pts.iter().all(|p| board.contains(p)) {
                for p in &pts {
                    value = value.lcm(&point_denominator(p));
                }
            }
        }
        // next k-combination in lexicographic order
        let n = planes.len();
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
    value
}
