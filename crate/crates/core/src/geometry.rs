//! Points, rider moves and convex rational boards.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{Rational, RationalError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    ZeroMove,
    ParallelMoves,
    TooFewCorners,
    NonConvexBoard,
    DuplicateCorner,
    Parse(String),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::ZeroMove => write!(f, "move (0, 0) has no direction"),
            GeometryError::ParallelMoves => write!(f, "the two basic moves are parallel"),
            GeometryError::TooFewCorners => write!(f, "a board needs at least 3 corners"),
            GeometryError::NonConvexBoard => write!(f, "board is not strictly convex"),
            GeometryError::DuplicateCorner => write!(f, "board has a repeated corner"),
            GeometryError::Parse(s) => write!(f, "cannot parse {s:?}"),
        }
    }
}

impl From<RationalError> for GeometryError {
    fn from(e: RationalError) -> Self {
        match e {
            RationalError::Parse(s) => GeometryError::Parse(s),
            RationalError::ZeroDenominator => GeometryError::Parse(String::from("zero denominator")),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    /// Shorthand for `(xn/xd, yn/yd)`.
    pub fn frac(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point2::new(Rational::new(xn, xd), Rational::new(yn, yd))
    }

    pub fn int(x: i64, y: i64) -> Self {
        Point2::new(Rational::from(x), Rational::from(y))
    }

    pub fn sub(&self, other: &Point2) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    pub fn offset(&self, dx: &Rational, dy: &Rational, scale: &Rational) -> Point2 {
        Point2::new(&self.x + dx * scale, &self.y + dy * scale)
    }

    /// Squared Euclidean distance, exact.
    pub fn dist2(&self, other: &Point2) -> Rational {
        let (dx, dy) = self.sub(other);
        &dx * &dx + &dy * &dy
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl FromStr for Point2 {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s
            .split_once(',')
            .ok_or_else(|| GeometryError::Parse(String::from(s)))?;
        Ok(Point2::new(x.parse()?, y.parse()?))
    }
}

/// Least common multiple of the coordinate denominators.
pub fn point_denominator(p: &Point2) -> BigInt {
    p.x.denom().lcm(p.y.denom())
}

/// A basic move `(c, d)`: coprime, with `c > 0` or `c = 0, d > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    c: i64,
    d: i64,
}

pub fn canonical_move(c: i64, d: i64) -> Result<Move, GeometryError> {
    if c == 0 && d == 0 {
        return Err(GeometryError::ZeroMove);
    }
    let g = c.gcd(&d);
    let (mut c, mut d) = (c / g, d / g);
    if c < 0 || (c == 0 && d < 0) {
        c = -c;
        d = -d;
    }
    Ok(Move { c, d })
}

impl Move {
    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn dx(&self) -> Rational {
        Rational::from(self.c)
    }

    pub fn dy(&self) -> Rational {
        Rational::from(self.d)
    }

    /// Signed cross product `c * v.y - d * v.x`; zero iff `v` is parallel to the move.
    pub fn cross(&self, vx: &Rational, vy: &Rational) -> Rational {
        &Rational::from(self.c) * vy - &Rational::from(self.d) * vx
    }

    pub fn is_parallel(&self, other: &Move) -> bool {
        self.c * other.d == self.d * other.c
    }

    /// The slope `d / c`, or `None` for a vertical move.
    pub fn slope(&self) -> Option<Rational> {
        if self.c == 0 {
            None
        } else {
            Some(Rational::new(self.d, self.c))
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.c, self.d)
    }
}

impl FromStr for Move {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GeometryError::Parse(String::from(s));
        let (c, d) = s.split_once(',').ok_or_else(bad)?;
        let c: i64 = c.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        canonical_move(c, d)
    }
}

/// Line `a*x + b*y = rhs` of a board side, scaled to primitive integer
/// coefficients with the board interior on the side `a*x + b*y < rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fixation {
    pub a: Rational,
    pub b: Rational,
    pub rhs: Rational,
}

impl Fixation {
    pub fn eval(&self, p: &Point2) -> Rational {
        &self.a * &p.x + &self.b * &p.y
    }

    /// `a*dx + b*dy` for a direction; zero iff the direction runs along the side.
    pub fn along(&self, dx: &Rational, dy: &Rational) -> Rational {
        &self.a * dx + &self.b * dy
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.eval(p) == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub start: Point2,
    pub end: Point2,
    pub fixation: Fixation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryLocation {
    Interior,
    EdgeInterior(usize),
    Corner(usize),
    Outside,
}

impl BoundaryLocation {
    pub fn on_boundary(&self) -> bool {
        matches!(self, BoundaryLocation::EdgeInterior(_) | BoundaryLocation::Corner(_))
    }
}

/// A strictly convex polygon with rational corners in counterclockwise order.
/// Edge `i` runs from corner `i` to corner `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Board {
    corners: Vec<Point2>,
    edges: Vec<Edge>,
}

fn cross3(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    let (ux, uy) = b.sub(a);
    let (vx, vy) = c.sub(b);
    &ux * &vy - &uy * &vx
}

fn primitive_fixation(a: Rational, b: Rational, rhs: Rational) -> Fixation {
    let mut scale = BigInt::one();
    for r in [&a, &b, &rhs] {
        scale = scale.lcm(r.denom());
    }
    let s = Rational::from(scale);
    let (ia, ib, ir) = ((&a * &s).floor(), (&b * &s).floor(), (&rhs * &s).floor());
    let mut g = ia.gcd(&ib).gcd(&ir);
    if g.is_zero() {
        g = BigInt::one();
    }
    let g = g.abs();
    Fixation {
        a: Rational::from(ia / &g),
        b: Rational::from(ib / &g),
        rhs: Rational::from(ir / &g),
    }
}

impl Board {
    /// Accepts corners in either orientation; clockwise input is reversed.
    pub fn new(mut corners: Vec<Point2>) -> Result<Board, GeometryError> {
        let n = corners.len();
        if n < 3 {
            return Err(GeometryError::TooFewCorners);
        }
        for i in 0..n {
            for j in i + 1..n {
                if corners[i] == corners[j] {
                    return Err(GeometryError::DuplicateCorner);
                }
            }
        }
        let turns: Vec<Rational> = (0..n)
            .map(|i| cross3(&corners[i], &corners[(i + 1) % n], &corners[(i + 2) % n]))
            .collect();
        if turns.iter().all(|t| t.is_negative()) {
            // keep the first corner first
            corners.reverse();
            corners.rotate_right(1);
        } else if !turns.iter().all(|t| t.is_positive()) {
            return Err(GeometryError::NonConvexBoard);
        }
        let edges = (0..n)
            .map(|i| {
                let (p, q) = (&corners[i], &corners[(i + 1) % n]);
                let (dx, dy) = q.sub(p);
                // outward normal of a counterclockwise edge is (dy, -dx)
                let rhs = &dy * &p.x - &dx * &p.y;
                Edge {
                    start: p.clone(),
                    end: q.clone(),
                    fixation: primitive_fixation(dy, -dx, rhs),
                }
            })
            .collect::<Vec<Edge>>();
        // Left turns alone still admit star polygons winding more than once.
        for (i, e) in edges.iter().enumerate() {
            for (j, p) in corners.iter().enumerate() {
                if j != i && j != (i + 1) % n && e.fixation.eval(p) >= e.fixation.rhs {
                    return Err(GeometryError::NonConvexBoard);
                }
            }
        }
        Ok(Board { corners, edges })
    }

    /// The unit square `[0, 1]^2`; edges south, east, north, west.
    pub fn square() -> Board {
        Board::new(alloc::vec![
            Point2::int(0, 0),
            Point2::int(1, 0),
            Point2::int(1, 1),
            Point2::int(0, 1),
        ])
        .expect("unit square is convex")
    }

    pub fn corners(&self) -> &[Point2] {
        &self.corners
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn classify(&self, p: &Point2) -> BoundaryLocation {
        let mut tight = [usize::MAX; 2];
        let mut count = 0;
        for (i, e) in self.edges.iter().enumerate() {
            let v = e.fixation.eval(p);
            if v > e.fixation.rhs {
                return BoundaryLocation::Outside;
            }
            if v == e.fixation.rhs {
                if count < 2 {
                    tight[count] = i;
                }
                count += 1;
            }
        }
        match count {
            0 => BoundaryLocation::Interior,
            1 => BoundaryLocation::EdgeInterior(tight[0]),
            _ => {
                let n = self.edges.len();
                // corner i is shared by edges i - 1 and i
                let (a, b) = (tight[0], tight[1]);
                if a == 0 && b == n - 1 {
                    BoundaryLocation::Corner(0)
                } else {
                    BoundaryLocation::Corner(b)
                }
            }
        }
    }

    pub fn contains(&self, p: &Point2) -> bool {
        self.classify(p) != BoundaryLocation::Outside
    }

    pub fn is_corner(&self, p: &Point2) -> bool {
        matches!(self.classify(p), BoundaryLocation::Corner(_))
    }

    /// Indices of the edges whose closed segment contains `p`.
    pub fn edges_through(&self, p: &Point2) -> Vec<usize> {
        match self.classify(p) {
            BoundaryLocation::EdgeInterior(i) => alloc::vec![i],
            BoundaryLocation::Corner(i) => {
                let n = self.edges.len();
                alloc::vec![(i + n - 1) % n, i]
            }
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_move_examples() {
        assert_eq!(canonical_move(2, 4).unwrap(), Move { c: 1, d: 2 });
        assert_eq!(canonical_move(-1, 2).unwrap(), Move { c: 1, d: -2 });
        assert_eq!(canonical_move(0, -3).unwrap(), Move { c: 0, d: 1 });
        assert_eq!(canonical_move(0, 0), Err(GeometryError::ZeroMove));
    }

    #[test]
    fn classify_examples() {
        let sq = Board::square();
        assert_eq!(sq.classify(&Point2::frac(1, 2, 1, 2)), BoundaryLocation::Interior);
        assert_eq!(sq.classify(&Point2::frac(1, 3, 0, 1)), BoundaryLocation::EdgeInterior(0));
        assert_eq!(sq.classify(&Point2::int(1, 1)), BoundaryLocation::Corner(2));
        assert_eq!(sq.classify(&Point2::int(0, 0)), BoundaryLocation::Corner(0));
        assert_eq!(sq.classify(&Point2::int(2, 0)), BoundaryLocation::Outside);
        assert_eq!(sq.edges_through(&Point2::int(0, 0)), alloc::vec![3, 0]);
    }

    #[test]
    fn point_denominator_examples() {
        assert_eq!(point_denominator(&Point2::frac(2, 3, 1, 3)), 3.into());
        assert_eq!(point_denominator(&Point2::frac(1, 4, 1, 8)), 8.into());
        assert_eq!(point_denominator(&Point2::int(1, 0)), 1.into());
    }

    #[test]
    fn square_fixations_are_primitive() {
        let sq = Board::square();
        let east = &sq.edges()[1].fixation;
        assert_eq!((east.a.clone(), east.b.clone(), east.rhs.clone()), (1.into(), 0.into(), 1.into()));
    }

    #[test]
    fn rejects_bad_boards() {
        assert_eq!(
            Board::new(alloc::vec![Point2::int(0, 0), Point2::int(1, 0)]),
            Err(GeometryError::TooFewCorners)
        );
        let collinear = alloc::vec![Point2::int(0, 0), Point2::int(1, 0), Point2::int(2, 0), Point2::int(1, 1)];
        assert_eq!(Board::new(collinear), Err(GeometryError::NonConvexBoard));
        let dented = alloc::vec![
            Point2::int(0, 0),
            Point2::int(2, 0),
            Point2::frac(1, 1, 1, 2),
            Point2::int(2, 2),
            Point2::int(0, 2),
        ];
        assert_eq!(Board::new(dented), Err(GeometryError::NonConvexBoard));
        let cw = alloc::vec![Point2::int(0, 0), Point2::int(0, 1), Point2::int(1, 1), Point2::int(1, 0)];
        assert_eq!(Board::new(cw).unwrap().corners()[1], Point2::int(1, 0));
    }
}
