use crate::error::ConstructionError;
use crate::geometry::{Coord, ExactPoint, PointConfig};
use crate::verify::{max_convex_subset_size, verify_cupcap_free};

use super::place_above_right;

/// Sets up to this size are re-certified by exhaustive search after
/// generation.
const CERTIFY_LIMIT: usize = 40;

fn cupcap_free_points<T: Coord>(k: u32, l: u32) -> Vec<ExactPoint<T>> {
    if k == 0 || l == 0 {
        return vec![ExactPoint::from_i64(0, 0)];
    }
    // `left` has no (k+1)-cup and no (l+2)-cap, `right` no (k+2)-cup and no
    // (l+1)-cap. After placement every triple with two points on the left is
    // a cup and every triple with two on the right is a cap, so a cup takes
    // at most one point from the right and a cap at most one from the left.
    let left = cupcap_free_points::<T>(k - 1, l);
    let right = cupcap_free_points::<T>(k, l - 1);
    let placed = place_above_right(&left, &right);
    left.into_iter().chain(placed).collect()
}

/// `C(k + l, k)` points with no `(k+2)`-cup and no `(l+2)`-cap.
pub fn gen_cupcap_free<T: Coord>(k: u32, l: u32) -> Result<PointConfig<T>, ConstructionError> {
    let config = PointConfig::new(cupcap_free_points(k, l))?;
    if config.len() <= CERTIFY_LIMIT {
        let cert = verify_cupcap_free(&config, k, l);
        if !cert.passed() {
            return Err(ConstructionError::CertificationFailed(cert.to_string()));
        }
    }
    Ok(config)
}

/// `2^(n-2)` points with no `n` in convex position.
///
/// Blocks `T_i = gen_cupcap_free(i, n-2-i)` are chained left to right, each
/// new block above every line of everything placed so far and with all
/// earlier points below its own lines. A convex subset then takes a cup from
/// its first block, a cap from its last, and at most one point from each
/// block in between, which caps it at `n - 1` points.
pub fn gen_no_convex<T: Coord>(n: u32) -> Result<PointConfig<T>, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::BadParams(format!("no-convex needs n >= 3, got {n}")));
    }
    let mut points: Vec<ExactPoint<T>> = Vec::new();
    for i in 0..=(n - 2) {
        let block = cupcap_free_points::<T>(i, n - 2 - i);
        if points.is_empty() {
            points = block;
        } else {
            let placed = place_above_right(&points, &block);
            points.extend(placed);
        }
    }
    let config = PointConfig::new(points)?;
    if config.len() <= CERTIFY_LIMIT {
        let largest = max_convex_subset_size(&config);
        if largest >= n as usize {
            return Err(ConstructionError::CertificationFailed(format!(
                "no-convex({n}) has {largest} points in convex position"
            )));
        }
    }
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::binomial;
    use num_bigint::BigInt;

    #[test]
    fn cupcap_free_sizes() {
        for k in 0..=6u32 {
            for l in 0..=(6 - k) {
                let c = gen_cupcap_free::<BigInt>(k, l).unwrap();
                assert_eq!(
                    c.len() as u128,
                    binomial(u128::from(k + l), u128::from(k)),
                    "k={k} l={l}"
                );
            }
        }
    }

    #[test]
    fn cupcap_free_small_examples() {
        assert_eq!(gen_cupcap_free::<BigInt>(0, 0).unwrap().len(), 1);
        assert_eq!(gen_cupcap_free::<BigInt>(1, 1).unwrap().len(), 2);
        let c = gen_cupcap_free::<BigInt>(2, 2).unwrap();
        assert_eq!(c.len(), 6);
        assert!(verify_cupcap_free(&c, 2, 2).passed());
        // Tight: one fewer on either side is violated.
        assert!(!verify_cupcap_free(&c, 1, 2).passed());
        assert!(!verify_cupcap_free(&c, 2, 1).passed());
    }

    #[test]
    fn no_convex_sizes() {
        assert!(gen_no_convex::<BigInt>(2).is_err());
        assert_eq!(gen_no_convex::<BigInt>(3).unwrap().len(), 2);
        let four = gen_no_convex::<BigInt>(4).unwrap();
        assert_eq!(four.len(), 4);
        assert_eq!(max_convex_subset_size(&four), 3);
        let five = gen_no_convex::<BigInt>(5).unwrap();
        assert_eq!(five.len(), 8);
        assert_eq!(max_convex_subset_size(&five), 4);
        let six = gen_no_convex::<BigInt>(6).unwrap();
        assert_eq!(max_convex_subset_size(&six), 5);
    }

    #[test]
    fn machine_scalar_agrees() {
        let big = gen_no_convex::<BigInt>(5).unwrap();
        let small = gen_no_convex::<i64>(5).unwrap();
        for (a, b) in big.points().iter().zip(small.points()) {
            assert_eq!(a.x, BigInt::from(b.x));
            assert_eq!(a.y, BigInt::from(b.y));
        }
    }
}
