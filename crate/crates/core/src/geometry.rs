//! Exact planar predicates on integer points.
//!
//! Every predicate here is evaluated with exact integer arithmetic over the
//! [`Coord`] scalar. The scalar must be wide enough to hold products of two
//! coordinate differences; [`num_bigint::BigInt`] always is.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::error::GeometryError;

/// Exact integer scalar usable as a point coordinate.
pub trait Coord:
    Clone + Ord + Hash + Debug + Display + FromStr + Signed + Integer + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Coord for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + FromStr
        + Signed
        + Integer
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactPoint<T> {
    pub x: T,
    pub y: T,
}

impl<T: Coord> ExactPoint<T> {
    pub fn new(x: T, y: T) -> Self {
        ExactPoint { x, y }
    }

    /// Builds a point from machine integers. Panics only if `T` cannot
    /// represent an `i64`, which no supported scalar does.
    pub fn from_i64(x: i64, y: i64) -> Self {
        ExactPoint {
            x: T::from_i64(x).expect("scalar holds i64"),
            y: T::from_i64(y).expect("scalar holds i64"),
        }
    }

    pub fn translated(&self, dx: &T, dy: &T) -> Self {
        ExactPoint {
            x: self.x.clone() + dx.clone(),
            y: self.y.clone() + dy.clone(),
        }
    }

    pub fn scaled(&self, factor: &T) -> Self {
        ExactPoint {
            x: self.x.clone() * factor.clone(),
            y: self.y.clone() * factor.clone(),
        }
    }
}

impl<T: Display> Display for ExactPoint<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Turn direction of an ordered triple. Counterclockwise is a left turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::Counterclockwise,
            Orientation::Counterclockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn from_sign<T: Coord>(det: &T) -> Self {
        if det.is_positive() {
            Orientation::Counterclockwise
        } else if det.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

fn cross<T: Coord>(ax: &T, ay: &T, bx: &T, by: &T) -> T {
    ax.clone() * by.clone() - ay.clone() * bx.clone()
}

/// Sign of the determinant of `(q - p, r - p)`.
pub fn orientation<T: Coord>(p: &ExactPoint<T>, q: &ExactPoint<T>, r: &ExactPoint<T>) -> Orientation {
    let det = cross(
        &(q.x.clone() - p.x.clone()),
        &(q.y.clone() - p.y.clone()),
        &(r.x.clone() - p.x.clone()),
        &(r.y.clone() - p.y.clone()),
    );
    Orientation::from_sign(&det)
}

/// True iff `p` lies strictly inside triangle `abc`.
pub fn in_triangle<T: Coord>(a: &ExactPoint<T>, b: &ExactPoint<T>, c: &ExactPoint<T>, p: &ExactPoint<T>) -> bool {
    let o1 = orientation(a, b, p);
    o1 != Orientation::Collinear && o1 == orientation(b, c, p) && o1 == orientation(c, a, p)
}

/// Returns some collinear triple (as indices, ascending) if one exists.
///
/// Runs in O(n² log n): around each point the directions to all other points
/// are folded onto a half-plane and sorted by angle, so parallel directions
/// end up adjacent.
pub fn find_collinear_triple<T: Coord>(points: &[ExactPoint<T>]) -> Option<[usize; 3]> {
    let n = points.len();
    if n < 3 {
        return None;
    }
    for i in 0..n {
        let mut dirs: Vec<(T, T, usize)> = Vec::with_capacity(n - 1);
        for (j, q) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut dx = q.x.clone() - points[i].x.clone();
            let mut dy = q.y.clone() - points[i].y.clone();
            if dx.is_zero() && dy.is_zero() {
                let k = (0..n).find(|&k| k != i && k != j).expect("n >= 3");
                return Some(sorted3(i, j, k));
            }
            if dy.is_negative() || (dy.is_zero() && dx.is_negative()) {
                dx = -dx;
                dy = -dy;
            }
            dirs.push((dx, dy, j));
        }
        dirs.sort_by(|a, b| {
            let c = cross(&a.0, &a.1, &b.0, &b.1);
            if c.is_positive() {
                Ordering::Less
            } else if c.is_negative() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        });
        for w in dirs.windows(2) {
            if cross(&w[0].0, &w[0].1, &w[1].0, &w[1].1).is_zero() {
                return Some(sorted3(i, w[0].2, w[1].2));
            }
        }
    }
    None
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// True iff no three points are collinear. Vacuously true below three points.
pub fn is_general_position<T: Coord>(points: &[ExactPoint<T>]) -> bool {
    find_collinear_triple(points).is_none()
}

/// Convex hull in counterclockwise order, starting from the lowest-x
/// (then lowest-y) point. Points on the hull boundary but not at a corner are
/// dropped; duplicates collapse.
pub fn convex_hull<T: Coord>(points: &[ExactPoint<T>]) -> Vec<ExactPoint<T>> {
    let mut pts: Vec<&ExactPoint<T>> = points.iter().collect();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts.into_iter().cloned().collect();
    }
    let mut lower: Vec<&ExactPoint<T>> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2
            && orientation(lower[lower.len() - 2], lower[lower.len() - 1], p) != Orientation::Counterclockwise
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&ExactPoint<T>> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2
            && orientation(upper[upper.len() - 2], upper[upper.len() - 1], p) != Orientation::Counterclockwise
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower.into_iter().cloned().collect()
}

/// True iff every point is a vertex of the convex hull.
pub fn is_convex_position<T: Coord>(points: &[ExactPoint<T>]) -> Result<bool, GeometryError> {
    if let Some(triple) = find_collinear_triple(points) {
        return Err(GeometryError::GeneralPositionViolated(triple));
    }
    Ok(convex_hull(points).len() == points.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CupCap {
    /// Every consecutive triple turns left; the hull is bounded above by one edge.
    Cup,
    /// Every consecutive triple turns right; the hull is bounded below by one edge.
    Cap,
    Neither,
}

impl Display for CupCap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CupCap::Cup => "cup",
            CupCap::Cap => "cap",
            CupCap::Neither => "neither",
        })
    }
}

fn check_x_sorted<T: Coord>(points: &[ExactPoint<T>]) -> Result<(), GeometryError> {
    for (i, w) in points.windows(2).enumerate() {
        if w[0].x >= w[1].x {
            return Err(GeometryError::BadInput(format!(
                "x-coordinates not strictly increasing at index {}",
                i + 1
            )));
        }
    }
    Ok(())
}

pub fn classify_cup_cap<T: Coord>(points: &[ExactPoint<T>]) -> Result<CupCap, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::BadInput(format!(
            "cup/cap classification needs at least 3 points, got {}",
            points.len()
        )));
    }
    check_x_sorted(points)?;
    let first = orientation(&points[0], &points[1], &points[2]);
    let uniform = points.windows(3).all(|w| orientation(&w[0], &w[1], &w[2]) == first);
    Ok(match (uniform, first) {
        (true, Orientation::Counterclockwise) => CupCap::Cup,
        (true, Orientation::Clockwise) => CupCap::Cap,
        _ => CupCap::Neither,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sheared<T> {
    pub points: Vec<ExactPoint<T>>,
    /// The shear factor `s` in `(x, y) -> (x + s*y, y)`.
    pub factor: u64,
}

/// Applies the smallest integer shear `(x, y) -> (x + s*y, y)`, `s >= 0`,
/// that makes all x-coordinates distinct. The shear has determinant 1, so
/// every orientation is preserved.
pub fn shear_to_distinct_x<T: Coord>(points: &[ExactPoint<T>]) -> Result<Sheared<T>, GeometryError> {
    // Each pair of distinct points rules out at most one shear factor, so
    // some s <= C(n, 2) works.
    let n = points.len() as u64;
    let limit = n * n.saturating_sub(1) / 2;
    for s in 0..=limit {
        let factor = T::from_u64(s).expect("scalar holds u64 shear factor");
        let sheared: Vec<ExactPoint<T>> = points
            .iter()
            .map(|p| ExactPoint::new(p.x.clone() + factor.clone() * p.y.clone(), p.y.clone()))
            .collect();
        let mut xs: Vec<&T> = sheared.iter().map(|p| &p.x).collect();
        xs.sort();
        if xs.windows(2).all(|w| w[0] != w[1]) {
            return Ok(Sheared {
                points: sheared,
                factor: s,
            });
        }
    }
    Err(GeometryError::DuplicatePoints)
}

/// An x-sorted point sequence in general position. Vertex `i` of any coloring
/// over this configuration is the `i`-th point from the left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointConfig<T> {
    points: Vec<ExactPoint<T>>,
}

impl<T: Coord> PointConfig<T> {
    pub fn new(points: Vec<ExactPoint<T>>) -> Result<Self, GeometryError> {
        check_x_sorted(&points)?;
        if let Some(triple) = find_collinear_triple(&points) {
            return Err(GeometryError::GeneralPositionViolated(triple));
        }
        Ok(PointConfig { points })
    }

    /// Sorts by x before validating. Returns the configuration and, for each
    /// new index, the index the point had in the input.
    pub fn from_unsorted(points: Vec<ExactPoint<T>>) -> Result<(Self, Vec<usize>), GeometryError> {
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].x.cmp(&points[b].x));
        let sorted = order.iter().map(|&i| points[i].clone()).collect();
        Ok((Self::new(sorted)?, order))
    }

    pub fn points(&self) -> &[ExactPoint<T>] {
        &self.points
    }

    pub fn into_points(self) -> Vec<ExactPoint<T>> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &ExactPoint<T> {
        &self.points[i]
    }

    pub fn orientation(&self, i: usize, j: usize, k: usize) -> Orientation {
        orientation(&self.points[i], &self.points[j], &self.points[k])
    }

    pub fn subset(&self, indices: &[usize]) -> Vec<ExactPoint<T>> {
        indices.iter().map(|&i| self.points[i].clone()).collect()
    }
}

/// Source of triple orientation signs over vertex indices.
pub trait OrientationOracle {
    /// +1 counterclockwise, -1 clockwise, 0 collinear or repeated index.
    fn sign(&self, i: usize, j: usize, k: usize) -> i8;

    fn orientation_of(&self, i: usize, j: usize, k: usize) -> Orientation {
        match self.sign(i, j, k) {
            1 => Orientation::Counterclockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        }
    }

    /// Strict point-in-triangle test on indices.
    #[inline]
    fn in_triangle(&self, a: usize, b: usize, c: usize, p: usize) -> bool {
        let s = self.sign(a, b, p);
        s != 0 && s == self.sign(b, c, p) && s == self.sign(c, a, p)
    }

    /// Whether `v` can join the convex-position set `set` and keep it in
    /// convex position. Assumes general position.
    fn extends_convex(&self, set: &[usize], v: usize) -> bool {
        let k = set.len();
        for a in 0..k {
            for b in (a + 1)..k {
                for c in (b + 1)..k {
                    if self.in_triangle(set[a], set[b], set[c], v) {
                        return false;
                    }
                }
            }
        }
        for p in 0..k {
            for a in 0..k {
                if a == p {
                    continue;
                }
                for b in (a + 1)..k {
                    if b != p && self.in_triangle(set[a], set[b], v, set[p]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Convex position by Carathéodory: no point inside a triangle of three
    /// others. Assumes general position.
    fn is_convex(&self, set: &[usize]) -> bool {
        (1..set.len()).all(|k| self.extends_convex(&set[..k], set[k]))
    }
}

impl<T: Coord> OrientationOracle for PointConfig<T> {
    fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        match self.orientation(i, j, k) {
            Orientation::Counterclockwise => 1,
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
        }
    }
}

/// Dense table of all triple orientations of a small point set.
#[derive(Debug, Clone)]
pub struct OrientationTable {
    n: usize,
    signs: Vec<i8>,
}

impl OrientationTable {
    pub fn new<T: Coord>(points: &[ExactPoint<T>]) -> Self {
        let n = points.len();
        let mut signs = vec![0i8; n * n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let s: i8 = match orientation(&points[i], &points[j], &points[k]) {
                        Orientation::Counterclockwise => 1,
                        Orientation::Clockwise => -1,
                        Orientation::Collinear => 0,
                    };
                    // Even permutations keep the sign, odd ones flip it.
                    for (a, b, c, sign) in [
                        (i, j, k, s),
                        (j, k, i, s),
                        (k, i, j, s),
                        (j, i, k, -s),
                        (i, k, j, -s),
                        (k, j, i, -s),
                    ] {
                        signs[(a * n + b) * n + c] = sign;
                    }
                }
            }
        }
        OrientationTable { n, signs }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

impl OrientationOracle for OrientationTable {
    #[inline]
    fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }
}
