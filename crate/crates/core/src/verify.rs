//! Brute-force oracles. Every construction and every extracted witness is
//! checked against these.

use itertools::Itertools;

use crate::certificate::Certificate;
use crate::coloring::{is_monochromatic, Color, EdgeColoring, HyperColoring};
use crate::constructions::SteppingUpSet;
use crate::error::VerifyError;
use crate::geometry::{
    is_convex_position, orientation, Coord, Orientation, OrientationOracle, OrientationTable, PointConfig,
};

/// Default cap on enumerated subsets.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Configurations up to this size get a precomputed orientation table.
const TABLE_LIMIT: usize = 256;

fn check_sizes<T: Coord>(config: &PointConfig<T>, coloring: &impl HyperColoring) -> Result<(), VerifyError> {
    if coloring.vertex_count() != config.len() {
        return Err(VerifyError::Mismatch(format!(
            "coloring has {} vertices, configuration has {} points",
            coloring.vertex_count(),
            config.len()
        )));
    }
    Ok(())
}

fn found(property: &str, examined: u64, witness: Vec<usize>, color: Color) -> Certificate {
    Certificate::pass(property, examined)
        .with_witness(witness)
        .with_note("color", color)
}

/// Searches for an `n`-subset in convex position all of whose ℓ-subsets have
/// one color.
///
/// A passing certificate carries the lexicographically least such subset; a
/// failing one means none exists. Partial subsets are abandoned as soon as
/// they stop being monochromatic or convex, both of which are hereditary.
/// `examined` counts partial and complete subsets visited.
pub fn has_mono_convex_subset<T: Coord>(
    config: &PointConfig<T>,
    coloring: &impl HyperColoring,
    n: usize,
    budget: u64,
) -> Result<Certificate, VerifyError> {
    check_sizes(config, coloring)?;
    if config.len() <= TABLE_LIMIT {
        let table = OrientationTable::new(config.points());
        MonoConvexSearch::new(&table, coloring, n, budget).run()
    } else {
        MonoConvexSearch::new(config, coloring, n, budget).run()
    }
}

struct MonoConvexSearch<'a, O, C> {
    oracle: &'a O,
    coloring: &'a C,
    n: usize,
    budget: u64,
    examined: u64,
    stack: Vec<usize>,
    scratch: Vec<usize>,
}

impl<'a, O: OrientationOracle, C: HyperColoring> MonoConvexSearch<'a, O, C> {
    fn new(oracle: &'a O, coloring: &'a C, n: usize, budget: u64) -> Self {
        MonoConvexSearch {
            oracle,
            coloring,
            n,
            budget,
            examined: 0,
            stack: Vec::with_capacity(n),
            scratch: Vec::with_capacity(coloring.arity()),
        }
    }

    fn run(mut self) -> Result<Certificate, VerifyError> {
        const PROPERTY: &str = "mono-convex";
        let total = self.coloring.vertex_count();
        if self.n > total {
            return Ok(Certificate::not_found(PROPERTY, 0));
        }
        match self.grow(None)? {
            Some(color) => Ok(found(PROPERTY, self.examined, self.stack, color)),
            None => Ok(Certificate::not_found(PROPERTY, self.examined)),
        }
    }

    /// Color of every ℓ-subset that contains `v` and ℓ-1 stack members, if
    /// they agree with each other and with `color`.
    fn new_subsets_agree(&mut self, v: usize, color: Option<Color>) -> Option<Option<Color>> {
        let arity = self.coloring.arity();
        if self.stack.len() + 1 < arity {
            return Some(color);
        }
        let mut current = color;
        let mut ok = true;
        for combo in self.stack.iter().copied().combinations(arity - 1) {
            self.scratch.clear();
            self.scratch.extend(combo);
            self.scratch.push(v);
            let c = self.coloring.color(&self.scratch);
            match current {
                None => current = Some(c),
                Some(want) if want != c => {
                    ok = false;
                    break;
                }
                _ => {}
            }
        }
        ok.then_some(current)
    }

    fn grow(&mut self, color: Option<Color>) -> Result<Option<Color>, VerifyError> {
        if self.stack.len() == self.n {
            return Ok(Some(color.unwrap_or(0)));
        }
        let total = self.coloring.vertex_count();
        let start = self.stack.last().map_or(0, |&v| v + 1);
        let remaining = self.n - self.stack.len();
        for v in start..total {
            if total - v < remaining {
                break;
            }
            self.examined += 1;
            if self.examined > self.budget {
                return Err(VerifyError::BudgetExceeded {
                    examined: self.examined - 1,
                });
            }
            let Some(next_color) = self.new_subsets_agree(v, color) else {
                continue;
            };
            if !self.oracle.extends_convex(&self.stack, v) {
                continue;
            }
            self.stack.push(v);
            if let Some(c) = self.grow(next_color)? {
                return Ok(Some(c));
            }
            self.stack.pop();
        }
        Ok(None)
    }
}

/// Plain enumeration of every `n`-subset in lexicographic order, testing
/// each for monochromaticity and convex position. Reference for
/// [`has_mono_convex_subset`].
pub fn has_mono_convex_subset_unpruned<T: Coord>(
    config: &PointConfig<T>,
    coloring: &impl HyperColoring,
    n: usize,
    budget: u64,
) -> Result<Certificate, VerifyError> {
    check_sizes(config, coloring)?;
    const PROPERTY: &str = "mono-convex";
    let table = OrientationTable::new(config.points());
    let mut examined = 0u64;
    for subset in (0..config.len()).combinations(n) {
        examined += 1;
        if examined > budget {
            return Err(VerifyError::BudgetExceeded { examined: examined - 1 });
        }
        if let Some(color) = is_monochromatic(coloring, &subset) {
            if table.is_convex(&subset) {
                return Ok(found(PROPERTY, examined, subset, color));
            }
        }
    }
    Ok(Certificate::not_found(PROPERTY, examined))
}

/// Largest number of points in convex position.
///
/// For each anchor taken as the leftmost vertex of the polygon, the points to
/// its right are sorted by angle and the longest counterclockwise convex
/// chain that closes back at the anchor is found by dynamic programming over
/// its last two vertices. O(N⁴) overall.
pub fn max_convex_subset_size<T: Coord>(config: &PointConfig<T>) -> usize {
    let n = config.len();
    if n < 3 {
        return n;
    }
    let table = OrientationTable::new(config.points());
    let mut best_overall = 2;
    for anchor in 0..n {
        let mut fan: Vec<usize> = ((anchor + 1)..n).collect();
        if fan.len() < 2 {
            continue;
        }
        fan.sort_by(|&b, &c| match table.sign(anchor, b, c) {
            1 => std::cmp::Ordering::Less,
            -1 => std::cmp::Ordering::Greater,
            _ => std::cmp::Ordering::Equal,
        });
        let m = fan.len();
        // chain[i * m + j]: most vertices on a convex chain anchor, ..., fan[i], fan[j]
        let mut chain = vec![0usize; m * m];
        for j in 0..m {
            for i in 0..j {
                let mut best = 3;
                for h in 0..i {
                    if chain[h * m + i] + 1 > best && table.sign(fan[h], fan[i], fan[j]) == 1 {
                        best = chain[h * m + i] + 1;
                    }
                }
                chain[i * m + j] = best;
                if best > best_overall && table.sign(fan[i], fan[j], anchor) == 1 {
                    best_overall = best;
                }
            }
        }
    }
    best_overall
}

/// Largest convex subset by trying every subset from the largest size down.
/// Exponential; meant as an independent reference on small inputs.
pub fn max_convex_subset_size_exhaustive<T: Coord>(config: &PointConfig<T>) -> usize {
    let n = config.len();
    for size in (3..=n).rev() {
        for subset in (0..n).combinations(size) {
            if is_convex_position(&config.subset(&subset)).unwrap_or(false) {
                return size;
            }
        }
    }
    n.min(2)
}

/// Passes iff there is no `(k+2)`-cup and no `(l+2)`-cap. Chains of length
/// at most two count as both a cup and a cap.
pub fn verify_cupcap_free<T: Coord>(config: &PointConfig<T>, k: u32, l: u32) -> Certificate {
    const PROPERTY: &str = "cupcap-free";
    let mut examined = 0u64;
    for (kind, turn, target) in [
        ("cup", Orientation::Counterclockwise, k as usize + 2),
        ("cap", Orientation::Clockwise, l as usize + 2),
    ] {
        let mut stack = Vec::with_capacity(target);
        if longest_chain_search(config, turn, target, &mut stack, &mut examined) {
            return Certificate::fail(PROPERTY, examined, stack).with_note("kind", kind);
        }
    }
    Certificate::pass(PROPERTY, examined)
}

/// Depth-first search for a chain of `target` x-sorted points whose
/// consecutive triples all turn `turn`. Leaves the first one found in
/// lexicographic order on `stack`.
fn longest_chain_search<T: Coord>(
    config: &PointConfig<T>,
    turn: Orientation,
    target: usize,
    stack: &mut Vec<usize>,
    examined: &mut u64,
) -> bool {
    if stack.len() == target {
        return true;
    }
    let start = stack.last().map_or(0, |&v| v + 1);
    for v in start..config.len() {
        if config.len() - v < target - stack.len() {
            break;
        }
        *examined += 1;
        let fits = match stack.len() {
            0 | 1 => true,
            s => config.orientation(stack[s - 2], stack[s - 1], v) == turn,
        };
        if fits {
            stack.push(v);
            if longest_chain_search(config, turn, target, stack, examined) {
                return true;
            }
            stack.pop();
        }
    }
    false
}

/// Checks every aligned block of `2^s` labels (`s = 1..=t`) with halves `L`
/// and `R`: each line through two points of `L` passes strictly below every
/// point of `R`, and each line through two points of `R` passes strictly
/// above every point of `L`.
///
/// Seen from a point to the right of `L`, the points of `L` span less than a
/// half-turn, so "every line through two of them passes below" holds iff
/// the x-order of `L` is also its counterclockwise angular order; that needs
/// only x-consecutive pairs. The symmetric statement holds for `R`. A
/// violation reports the offending line pair together with the point.
pub fn verify_stepup_constraints<T: Coord>(set: &SteppingUpSet<T>) -> Certificate {
    const PROPERTY: &str = "stepup";
    let config = set.config();
    let mut examined = 0u64;
    for level in 1..=set.level() {
        let size = 1usize << level;
        let half = size / 2;
        for start in (0..set.len()).step_by(size) {
            let left = start..start + half;
            let right = start + half..start + size;
            for r in right.clone() {
                for a in left.start..left.end - 1 {
                    examined += 1;
                    if config.orientation(a, a + 1, r) != Orientation::Counterclockwise {
                        return Certificate::fail(PROPERTY, examined, vec![a, a + 1, r])
                            .with_note("level", level)
                            .with_note("rule", "left-line-below-right");
                    }
                }
            }
            for l in left.clone() {
                for b in right.start..right.end - 1 {
                    examined += 1;
                    if config.orientation(b, b + 1, l) != Orientation::Clockwise {
                        return Certificate::fail(PROPERTY, examined, vec![l, b, b + 1])
                            .with_note("level", level)
                            .with_note("rule", "right-line-above-left");
                    }
                }
            }
        }
    }
    Certificate::pass(PROPERTY, examined)
}

/// Same verdict as [`verify_stepup_constraints`], testing every pair of each
/// half against every point of the other half.
pub fn verify_stepup_constraints_exhaustive<T: Coord>(set: &SteppingUpSet<T>) -> Certificate {
    const PROPERTY: &str = "stepup";
    let pts = set.points();
    let mut examined = 0u64;
    for level in 1..=set.level() {
        let size = 1usize << level;
        let half = size / 2;
        for start in (0..set.len()).step_by(size) {
            for a in start..start + half {
                for b in (a + 1)..start + half {
                    for r in start + half..start + size {
                        examined += 1;
                        if orientation(&pts[a], &pts[b], &pts[r]) != Orientation::Counterclockwise {
                            return Certificate::fail(PROPERTY, examined, vec![a, b, r]).with_note("level", level);
                        }
                    }
                }
            }
            for a in start + half..start + size {
                for b in (a + 1)..start + size {
                    for l in start..start + half {
                        examined += 1;
                        if orientation(&pts[a], &pts[b], &pts[l]) != Orientation::Clockwise {
                            return Certificate::fail(PROPERTY, examined, vec![l, a, b]).with_note("level", level);
                        }
                    }
                }
            }
        }
    }
    Certificate::pass(PROPERTY, examined)
}

/// Consecutive δ values of an ascending label sequence.
pub fn delta_sequence(labels: &[usize]) -> Vec<u32> {
    labels
        .windows(2)
        .map(|w| usize::BITS - (w[0] ^ w[1]).leading_zeros())
        .collect()
}

/// First interior index `i` with `d[i-1] > d[i] < d[i+1]`.
pub fn local_minimum(deltas: &[u32]) -> Option<usize> {
    (1..deltas.len().saturating_sub(1)).find(|&i| deltas[i - 1] > deltas[i] && deltas[i] < deltas[i + 1])
}

/// Scans every `m`-subset of `set` in convex position and passes iff none
/// has a local minimum in its consecutive δ sequence. `examined` counts the
/// convex subsets checked.
pub fn check_delta_local_minimum_exclusion<T: Coord>(set: &SteppingUpSet<T>, m: usize) -> Certificate {
    const PROPERTY: &str = "delta-local-min";
    let table = OrientationTable::new(set.points());
    let mut examined = 0u64;
    let mut stack = Vec::with_capacity(m);
    let violation = convex_subsets(&table, set.len(), m, &mut stack, &mut |subset| {
        examined += 1;
        local_minimum(&delta_sequence(subset)).is_some()
    });
    match violation {
        true => {
            let at = local_minimum(&delta_sequence(&stack)).expect("violation recorded");
            Certificate::fail(PROPERTY, examined, stack).with_note("local_min_at", at)
        }
        false => Certificate::pass(PROPERTY, examined).with_note("m", m),
    }
}

/// Visits convex `m`-subsets in lexicographic order until `visit` returns
/// true; the stopping subset is left on `stack`.
fn convex_subsets(
    table: &OrientationTable,
    n: usize,
    m: usize,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if stack.len() == m {
        return visit(stack);
    }
    let start = stack.last().map_or(0, |&v| v + 1);
    for v in start..n {
        if n - v < m - stack.len() {
            break;
        }
        if table.extends_convex(stack, v) {
            stack.push(v);
            if convex_subsets(table, n, m, stack, visit) {
                return true;
            }
            stack.pop();
        }
    }
    false
}

/// Passes iff the lifted triple coloring has no monochromatic convex
/// `2n`-subset. When one is found, the certificate records which branch of
/// the case split it falls into: a monotone run of `n` consecutive δ values
/// (and whether those levels form a monochromatic clique in the base), or a
/// δ local minimum.
pub fn check_monotone_case_bound<T: Coord>(
    set: &SteppingUpSet<T>,
    pair_coloring: &EdgeColoring,
    triple_coloring: &impl HyperColoring,
    n: usize,
    budget: u64,
) -> Result<Certificate, VerifyError> {
    const PROPERTY: &str = "monotone-case-bound";
    let search = has_mono_convex_subset(set.config(), triple_coloring, 2 * n, budget)?;
    let Some(witness) = search.witness.clone().filter(|_| search.passed()) else {
        return Ok(Certificate::pass(PROPERTY, search.examined).with_note("size", 2 * n));
    };
    let deltas = delta_sequence(&witness);
    let mut cert = Certificate::fail(PROPERTY, search.examined, witness);
    let run = (0..deltas.len().saturating_sub(n.saturating_sub(1))).find(|&j| {
        let window = &deltas[j..j + n];
        window.windows(2).all(|w| w[0] > w[1]) || window.windows(2).all(|w| w[0] < w[1])
    });
    if let Some(j) = run.filter(|_| n >= 1) {
        let levels: Vec<usize> = deltas[j..j + n].iter().map(|&d| d as usize - 1).sorted().collect();
        let mono = pair_coloring.vertex_count() > *levels.last().unwrap_or(&0)
            && is_monochromatic(pair_coloring, &levels).is_some();
        cert = cert
            .with_note("case", "monotone")
            .with_note("run_start", j)
            .with_note("base_mono_clique", mono);
    } else if let Some(i) = local_minimum(&deltas) {
        cert = cert.with_note("case", "local-minimum").with_note("local_min_at", i);
    } else {
        cert = cert.with_note("case", "none");
    }
    Ok(cert)
}
