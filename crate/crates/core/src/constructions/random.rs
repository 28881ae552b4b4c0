use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::EdgeColoring;
use crate::error::ConstructionError;
use crate::geometry::{Coord, ExactPoint, PointConfig};

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Smallest prime `p >= 16 n` (at least 17).
pub fn modulus_for(n: usize) -> u64 {
    let mut p = (16 * n as u64).max(17);
    while !is_prime(p) {
        p += 1;
    }
    p
}

/// `n` seeded points on the modular parabola `y = x^2 mod p`, with `x` drawn
/// without replacement from `0..p`. No three points of that curve are
/// collinear, so the result is always in general position with distinct x.
pub fn random_general_position<T: Coord>(n: usize, seed: u64) -> Result<PointConfig<T>, ConstructionError> {
    let p = modulus_for(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs: Vec<u64> = sample(&mut rng, p as usize, n).into_iter().map(|x| x as u64).collect();
    xs.sort_unstable();
    let points = xs
        .into_iter()
        .map(|x| {
            let y = x * x % p;
            ExactPoint::new(
                T::from_u64(x).expect("coordinate fits the scalar"),
                T::from_u64(y).expect("coordinate fits the scalar"),
            )
        })
        .collect();
    Ok(PointConfig::new(points)?)
}

/// Uniformly random `q`-coloring of the `arity`-subsets of `0..n`, drawn in
/// lexicographic subset order.
pub fn random_coloring(arity: usize, q: u32, n: usize, seed: u64) -> Result<EdgeColoring, ConstructionError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(EdgeColoring::from_fn(arity, q, n, |_| rng.gen_range(0..q))?)
}

/// Seeded random instance: `random_general_position(n, seed)` with a pair
/// coloring drawn from a stream derived from the same seed.
pub fn random_instance<T: Coord>(
    n: usize,
    q: u32,
    seed: u64,
) -> Result<(PointConfig<T>, EdgeColoring), ConstructionError> {
    let config = random_general_position(n, seed)?;
    let coloring = random_coloring(2, q, n, seed ^ COLOR_STREAM)?;
    Ok((config, coloring))
}

/// Mixed into the seed for coloring streams.
pub const COLOR_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::is_general_position;

    #[test]
    fn primes() {
        assert_eq!(modulus_for(1), 17);
        assert_eq!(modulus_for(2), 37);
        assert!(is_prime(modulus_for(1000)));
    }

    #[test]
    fn seeded_and_valid() {
        let a = random_general_position::<i64>(60, 5).unwrap();
        let b = random_general_position::<i64>(60, 5).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_general_position::<i64>(60, 6).unwrap());
        assert!(is_general_position(a.points()));
        let c = random_coloring(2, 3, 10, 1).unwrap();
        assert_eq!(c, random_coloring(2, 3, 10, 1).unwrap());
        assert!(c.colors_used().iter().all(|&x| x < 3));
    }
}
