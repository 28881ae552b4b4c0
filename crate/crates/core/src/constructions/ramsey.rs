use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coloring::{Color, EdgeColoring, HyperColoring};

/// Two-coloring of the pairs of a 5-cycle: color 0 on cycle edges (circular
/// distance 1), color 1 on the diagonals. No monochromatic triangle.
pub fn pentagon_coloring() -> EdgeColoring {
    EdgeColoring::from_fn(2, 2, 5, |s| {
        let d = (s[1] - s[0]) % 5;
        Color::from(!(d == 1 || d == 4))
    })
    .expect("valid pentagon coloring")
}

/// Paley coloring on `Z_p`: color 0 iff the difference is a nonzero
/// quadratic residue. `p` must be a prime with `p % 4 == 1` for the relation
/// to be symmetric; `p = 17` has no monochromatic `K_4`.
pub fn paley_coloring(p: usize) -> EdgeColoring {
    let mut residue = vec![false; p];
    for x in 1..p {
        residue[x * x % p] = true;
    }
    EdgeColoring::from_fn(2, 2, p, |s| Color::from(!residue[(s[1] - s[0]) % p])).expect("valid Paley coloring")
}

/// Lexicographically least monochromatic `n`-clique, if any.
pub fn find_mono_clique(coloring: &EdgeColoring, n: usize) -> Option<Vec<usize>> {
    let m = coloring.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut stack = Vec::with_capacity(n);
    fn grow(c: &EdgeColoring, m: usize, n: usize, color: Option<Color>, stack: &mut Vec<usize>) -> bool {
        if stack.len() == n {
            return true;
        }
        let start = stack.last().map_or(0, |&v| v + 1);
        for v in start..m {
            if m - v < n - stack.len() {
                break;
            }
            let mut col = color;
            let ok = stack.iter().all(|&u| {
                let k = c.pair(u, v);
                match col {
                    None => {
                        col = Some(k);
                        true
                    }
                    Some(want) => want == k,
                }
            });
            if ok {
                stack.push(v);
                if grow(c, m, n, col, stack) {
                    return true;
                }
                stack.pop();
            }
        }
        false
    }
    grow(coloring, m, n, None, &mut stack).then_some(stack)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RamseySearch {
    pub seed: u64,
    /// Independent random starts; start `i` uses seed `seed + i`.
    pub restarts: u64,
    /// Recoloring moves per start.
    pub flips: u32,
}

impl Default for RamseySearch {
    fn default() -> Self {
        RamseySearch {
            seed: 0,
            restarts: 64,
            flips: 2000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSource {
    /// A built-in coloring, possibly restricted to its first `M` vertices.
    BuiltIn(&'static str),
    /// Found by local search from the given start seed.
    Search { seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamseyWitness {
    pub coloring: EdgeColoring,
    pub source: WitnessSource,
}

fn restrict(c: &EdgeColoring, m: usize) -> EdgeColoring {
    EdgeColoring::from_fn(2, 2, m, |s| c.pair(s[0], s[1])).expect("restriction of a valid coloring")
}

/// A two-coloring of the pairs of `0..m` with no monochromatic `K_n`, or
/// `None` if neither the built-in witnesses nor the search budget produced
/// one. `None` does not prove that no witness exists.
pub fn find_ramsey_witness(m: usize, n: usize, search: &RamseySearch) -> Option<RamseyWitness> {
    if n <= 1 || (n == 2 && m >= 2) {
        return None;
    }
    let builtins: [(&'static str, usize, EdgeColoring); 2] =
        [("pentagon", 3, pentagon_coloring()), ("paley17", 4, paley_coloring(17))];
    if m < n {
        let c = EdgeColoring::uniform(2, 2, m, 0).expect("valid uniform coloring");
        return Some(RamseyWitness {
            coloring: c,
            source: WitnessSource::BuiltIn("uniform"),
        });
    }
    for (name, clique, coloring) in &builtins {
        if n >= *clique && m <= coloring.vertex_count() {
            let c = restrict(coloring, m);
            if find_mono_clique(&c, n).is_none() {
                return Some(RamseyWitness {
                    coloring: c,
                    source: WitnessSource::BuiltIn(name),
                });
            }
        }
    }
    // `find_map_first` keeps the lowest successful start regardless of
    // scheduling.
    (0..search.restarts).into_par_iter().find_map_first(|i| {
        let seed = search.seed.wrapping_add(i);
        local_search(m, n, seed, search.flips).map(|coloring| RamseyWitness {
            coloring,
            source: WitnessSource::Search { seed },
        })
    })
}

fn local_search(m: usize, n: usize, seed: u64, flips: u32) -> Option<EdgeColoring> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = EdgeColoring::from_fn(2, 2, m, |_| rng.gen_range(0..2)).ok()?;
    for _ in 0..=flips {
        let clique = match find_mono_clique(&c, n) {
            None => return Some(c),
            Some(k) => k,
        };
        let a = rng.gen_range(0..clique.len());
        let mut b = rng.gen_range(0..clique.len() - 1);
        if b >= a {
            b += 1;
        }
        let (u, v) = (clique[a].min(clique[b]), clique[a].max(clique[b]));
        let flipped = 1 - c.pair(u, v);
        c.set(&[u, v], flipped).ok()?;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::binomial;
    use itertools::Itertools;

    fn brute_mono_clique_exists(c: &EdgeColoring, n: usize) -> bool {
        (0..c.vertex_count()).combinations(n).any(|s| {
            let first = c.pair(s[0], s[1]);
            s.iter().tuple_combinations().all(|(&a, &b)| c.pair(a, b) == first)
        })
    }

    #[test]
    fn pentagon_has_no_mono_triangle() {
        let c = pentagon_coloring();
        let mut bichromatic = 0;
        for t in (0..5).combinations(3) {
            let cs = [c.pair(t[0], t[1]), c.pair(t[0], t[2]), c.pair(t[1], t[2])];
            assert!(cs.iter().any(|&x| x != cs[0]));
            bichromatic += 1;
        }
        assert_eq!(bichromatic, binomial(5, 3));
    }

    #[test]
    fn paley17_has_no_mono_k4() {
        let c = paley_coloring(17);
        assert!(!brute_mono_clique_exists(&c, 4));
        assert_eq!(find_mono_clique(&c, 4), None);
        assert!(find_mono_clique(&c, 3).is_some());
    }

    #[test]
    fn clique_finder_agrees_with_brute_force() {
        for seed in 0..20 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = EdgeColoring::from_fn(2, 2, 9, |_| rng.gen_range(0..2)).unwrap();
            for n in 3..=5 {
                assert_eq!(find_mono_clique(&c, n).is_some(), brute_mono_clique_exists(&c, n));
            }
        }
    }

    #[test]
    fn witness_examples() {
        let w = find_ramsey_witness(5, 3, &RamseySearch::default()).unwrap();
        assert_eq!(w.source, WitnessSource::BuiltIn("pentagon"));
        assert_eq!(w.coloring, pentagon_coloring());
        assert_eq!(find_ramsey_witness(2, 2, &RamseySearch::default()), None);
        let w = find_ramsey_witness(17, 4, &RamseySearch::default()).unwrap();
        assert_eq!(w.source, WitnessSource::BuiltIn("paley17"));
        assert!(!brute_mono_clique_exists(&w.coloring, 4));
    }

    #[test]
    fn impossible_case_is_not_found() {
        // r(3,3) = 6
        let search = RamseySearch {
            seed: 1,
            restarts: 4,
            flips: 50,
        };
        assert_eq!(find_ramsey_witness(6, 3, &search), None);
    }

    #[test]
    fn search_is_deterministic() {
        let search = RamseySearch {
            seed: 7,
            restarts: 16,
            flips: 500,
        };
        let a = find_ramsey_witness(20, 5, &search).unwrap();
        let b = find_ramsey_witness(20, 5, &search).unwrap();
        assert_eq!(a, b);
        assert!(matches!(a.source, WitnessSource::Search { .. }));
        assert_eq!(find_mono_clique(&a.coloring, 5), None);
        let direct = local_search(10, 4, 11, 500).unwrap();
        assert_eq!(Some(direct), local_search(10, 4, 11, 500));
    }

    #[test]
    fn search_beyond_builtins() {
        let search = RamseySearch {
            seed: 3,
            restarts: 32,
            flips: 4000,
        };
        let w = find_ramsey_witness(18, 5, &search).unwrap();
        assert_eq!(find_mono_clique(&w.coloring, 5), None);
        let w = find_ramsey_witness(9, 4, &RamseySearch::default()).unwrap();
        assert_eq!(w.source, WitnessSource::BuiltIn("paley17"));
    }
}
