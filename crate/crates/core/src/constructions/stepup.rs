use crate::coloring::{Color, EdgeColoring, HyperColoring};
use crate::error::ConstructionError;
use crate::geometry::{Coord, ExactPoint, PointConfig};
use crate::verify::verify_stepup_constraints;

use super::place_above_right;

pub const MAX_STEPUP_LEVEL: u32 = 12;

/// Largest base size the lazy triple coloring accepts (`2^M` labels).
pub const MAX_STEPUP_COLORING_LEVEL: u32 = 30;

/// The recursive set `P_t`: `2^t` x-sorted points where label `i` is the
/// `i`-th point from the left. Every aligned block of `2^s` labels is a copy
/// of `P_s` whose left half lies below all lines of its right half and whose
/// right half lies above all lines of its left half.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteppingUpSet<T> {
    level: u32,
    config: PointConfig<T>,
}

impl<T: Coord> SteppingUpSet<T> {
    /// Wraps an existing configuration of `2^t` points, `t >= 1`. The nested
    /// line conditions are not checked here; use
    /// [`verify_stepup_constraints`].
    pub fn from_config(config: PointConfig<T>) -> Result<Self, ConstructionError> {
        let n = config.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(ConstructionError::BadParams(format!(
                "a stepping-up set has 2^t points with t >= 1, got {n}"
            )));
        }
        Ok(SteppingUpSet {
            level: n.trailing_zeros(),
            config,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn config(&self) -> &PointConfig<T> {
        &self.config
    }

    pub fn points(&self) -> &[ExactPoint<T>] {
        self.config.points()
    }

    pub fn len(&self) -> usize {
        self.config.len()
    }

    pub fn is_empty(&self) -> bool {
        self.config.is_empty()
    }

    pub fn delta(&self, a: usize, b: usize) -> Result<u32, ConstructionError> {
        delta(a, b, self.level)
    }
}

/// Deepest level `s` such that labels `a < b` share a copy of `P_s` with `a`
/// in its left half and `b` in its right half: the 1-based position of the
/// highest bit where `a` and `b` differ.
pub fn delta(a: usize, b: usize, t: u32) -> Result<u32, ConstructionError> {
    let bad = ConstructionError::BadLabels { a, b, t };
    if a >= b || t >= usize::BITS || (b >> t) != 0 {
        return Err(bad);
    }
    Ok(usize::BITS - (a ^ b).leading_zeros())
}

#[inline]
fn delta_unchecked(a: usize, b: usize) -> u32 {
    usize::BITS - (a ^ b).leading_zeros()
}

pub fn gen_stepup_points<T: Coord>(t: u32) -> Result<SteppingUpSet<T>, ConstructionError> {
    if t == 0 || t > MAX_STEPUP_LEVEL {
        return Err(ConstructionError::LevelTooLarge {
            level: t,
            max: MAX_STEPUP_LEVEL,
        });
    }
    let mut points = vec![ExactPoint::from_i64(0, 0), ExactPoint::from_i64(1, 0)];
    for _ in 1..t {
        let right = place_above_right(&points, &points);
        points.extend(right);
    }
    let set = SteppingUpSet::from_config(PointConfig::new(points)?)?;
    let cert = verify_stepup_constraints(&set);
    if !cert.passed() {
        return Err(ConstructionError::CertificationFailed(cert.to_string()));
    }
    Ok(set)
}

/// Triple coloring of the labels of `P_M` lifted from a two-coloring of the
/// pairs of `M` levels: `(i, j, k)` gets the color of the level pair
/// `(δ(i, j), δ(j, k))`. Colors are computed on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteppingUpColoring {
    base: EdgeColoring,
}

impl SteppingUpColoring {
    pub fn base(&self) -> &EdgeColoring {
        &self.base
    }

    pub fn levels(&self) -> u32 {
        self.base.vertex_count() as u32
    }

    /// Dense copy; only sensible for small `M`.
    pub fn materialize(&self) -> Result<EdgeColoring, ConstructionError> {
        Ok(EdgeColoring::materialize(self)?)
    }
}

impl HyperColoring for SteppingUpColoring {
    fn arity(&self) -> usize {
        3
    }
    fn color_count(&self) -> u32 {
        2
    }
    fn vertex_count(&self) -> usize {
        1usize << self.base.vertex_count()
    }
    #[inline]
    fn color(&self, s: &[usize]) -> Color {
        let d1 = delta_unchecked(s[0], s[1]);
        let d2 = delta_unchecked(s[1], s[2]);
        // Levels are 1-based, base vertices 0-based; d1 != d2 always.
        self.base.pair(d1 as usize - 1, d2 as usize - 1)
    }
}

pub fn gen_stepup_coloring(pair_coloring: &EdgeColoring) -> Result<SteppingUpColoring, ConstructionError> {
    if pair_coloring.arity() != 2 {
        return Err(ConstructionError::BadBase(format!(
            "base must color pairs, got arity {}",
            pair_coloring.arity()
        )));
    }
    if pair_coloring.color_count() != 2 {
        return Err(ConstructionError::BadBase(format!(
            "base must be two-colored, got {} colors",
            pair_coloring.color_count()
        )));
    }
    let m = pair_coloring.vertex_count() as u32;
    if m == 0 || m > MAX_STEPUP_COLORING_LEVEL {
        return Err(ConstructionError::BadBase(format!(
            "base size {m} outside 1..={MAX_STEPUP_COLORING_LEVEL}"
        )));
    }
    Ok(SteppingUpColoring {
        base: pair_coloring.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::pentagon_coloring;
    use num_bigint::BigInt;

    #[test]
    fn delta_examples() {
        assert_eq!(delta(0, 1, 3).unwrap(), 1);
        assert_eq!(delta(3, 4, 3).unwrap(), 3);
        assert_eq!(delta(4, 6, 3).unwrap(), 2);
        assert!(delta(4, 4, 3).is_err());
        assert!(delta(5, 4, 3).is_err());
        assert!(delta(3, 8, 3).is_err());
    }

    #[test]
    fn stepup_points_levels() {
        let p1 = gen_stepup_points::<BigInt>(1).unwrap();
        assert_eq!(p1.len(), 2);
        assert!(p1.points()[0].x < p1.points()[1].x);
        let p2 = gen_stepup_points::<BigInt>(2).unwrap();
        assert_eq!(p2.len(), 4);
        assert_eq!(gen_stepup_points::<BigInt>(5).unwrap().len(), 32);
        assert!(matches!(
            gen_stepup_points::<BigInt>(13),
            Err(ConstructionError::LevelTooLarge { level: 13, max: 12 })
        ));
        assert!(gen_stepup_points::<BigInt>(0).is_err());
    }

    #[test]
    fn stepup_coloring_examples() {
        let single = EdgeColoring::uniform(2, 2, 2, 0).unwrap();
        let c = gen_stepup_coloring(&single).unwrap();
        assert_eq!(c.vertex_count(), 4);
        let m = c.materialize().unwrap();
        assert_eq!(m.colors_used(), vec![0]);

        let c = gen_stepup_coloring(&pentagon_coloring()).unwrap();
        assert_eq!(c.vertex_count(), 32);
        // δ(0,1)=1, δ(1,2)=2: base pair (1,2) at circular distance 1.
        assert_eq!(c.color(&[0, 1, 2]), 0);
        // δ(3,4)=3, δ(4,16)=5: base pair (3,5) at circular distance 2.
        assert_eq!(c.color(&[3, 4, 16]), 1);
    }

    #[test]
    fn stepup_coloring_rejects_bad_bases() {
        let three = EdgeColoring::uniform(2, 3, 5, 0).unwrap();
        assert!(matches!(
            gen_stepup_coloring(&three),
            Err(ConstructionError::BadBase(_))
        ));
        let triples = EdgeColoring::uniform(3, 2, 5, 0).unwrap();
        assert!(matches!(
            gen_stepup_coloring(&triples),
            Err(ConstructionError::BadBase(_))
        ));
    }

    #[test]
    fn from_config_requires_power_of_two() {
        let three = PointConfig::new(vec![
            ExactPoint::<i64>::from_i64(0, 0),
            ExactPoint::from_i64(1, 2),
            ExactPoint::from_i64(2, 1),
        ])
        .unwrap();
        assert!(SteppingUpSet::from_config(three).is_err());
    }
}
