//! The constructive upper-bound pipeline for pair colorings: grow a
//! separated sequence, pigeonhole its vertex colors, and pull an n-cup or
//! n-cap out of the monochromatic part.

mod augment;

pub use augment::{nonconvex_augmented_coloring, orientation_augmented_coloring};

use std::collections::BTreeMap;
use std::fmt;

use crate::certificate::Certificate;
use crate::coloring::{is_monochromatic, Color, EdgeColoring, HyperColoring};
use crate::error::ExtractionError;
use crate::geometry::{classify_cup_cap, is_convex_position, Coord, CupCap, Orientation, PointConfig};

/// Vertices `p_1..p_t` (indices into the configuration) and the survivor set
/// `S_t`.
///
/// Each `p_i` sees one color on every pair to a later sequence vertex or a
/// survivor (`vertex_colors[i]`; `None` when nothing came after it). Each
/// pair `p_i, p_j` sees every later vertex on the same side of its line.
/// Survivors lie to the right of `p_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatedSequence {
    pub sequence: Vec<usize>,
    pub survivors: Vec<usize>,
    pub vertex_colors: Vec<Option<Color>>,
    /// `|S_t|` after each step, starting with `|S_0| = N`.
    pub survivor_counts: Vec<usize>,
}

impl SeparatedSequence {
    pub fn steps(&self) -> usize {
        self.sequence.len()
    }
}

fn check_pair_coloring<T: Coord>(config: &PointConfig<T>, coloring: &EdgeColoring) -> Result<(), ExtractionError> {
    if coloring.arity() != 2 {
        return Err(ExtractionError::Mismatch(format!(
            "expected a pair coloring, got arity {}",
            coloring.arity()
        )));
    }
    if coloring.vertex_count() != config.len() {
        return Err(ExtractionError::Mismatch(format!(
            "coloring has {} vertices, configuration has {} points",
            coloring.vertex_count(),
            config.len()
        )));
    }
    Ok(())
}

/// Runs up to `steps` rounds. Each round takes the leftmost survivor as the
/// next sequence vertex, keeps the largest cell of the arrangement of lines
/// through it and the earlier sequence vertices (cells are identified by the
/// vector of orientations against those lines), then keeps the largest color
/// class of pairs to the new vertex. Ties go to the lexicographically least
/// signature and the lowest color.
pub fn build_separated_sequence<T: Coord>(
    config: &PointConfig<T>,
    coloring: &EdgeColoring,
    steps: usize,
) -> Result<SeparatedSequence, ExtractionError> {
    if config.is_empty() {
        return Err(ExtractionError::EmptyInput);
    }
    check_pair_coloring(config, coloring)?;
    let mut seq = SeparatedSequence {
        sequence: Vec::new(),
        survivors: (0..config.len()).collect(),
        vertex_colors: Vec::new(),
        survivor_counts: vec![config.len()],
    };
    while seq.sequence.len() < steps && !seq.survivors.is_empty() {
        let next = seq.survivors[0];
        let rest = &seq.survivors[1..];
        let mut cells: BTreeMap<Vec<Orientation>, Vec<usize>> = BTreeMap::new();
        for &s in rest {
            let signature = seq.sequence.iter().map(|&p| config.orientation(p, next, s)).collect();
            cells.entry(signature).or_default().push(s);
        }
        // BTreeMap iterates signatures in ascending order; max_by_key keeps
        // the last maximum, so compare on (size, Reverse(position)).
        let cell = cells
            .into_values()
            .enumerate()
            .max_by_key(|(i, c)| (c.len(), std::cmp::Reverse(*i)))
            .map(|(_, c)| c)
            .unwrap_or_default();
        let mut classes: BTreeMap<Color, Vec<usize>> = BTreeMap::new();
        for s in cell {
            classes.entry(coloring.pair(next, s)).or_default().push(s);
        }
        let chosen = classes
            .into_iter()
            .max_by_key(|(c, members)| (members.len(), std::cmp::Reverse(*c)));
        let (color, survivors) = match chosen {
            Some((c, members)) => (Some(c), members),
            None => (None, Vec::new()),
        };
        seq.sequence.push(next);
        seq.vertex_colors.push(color);
        seq.survivors = survivors;
        seq.survivor_counts.push(seq.survivors.len());
    }
    Ok(seq)
}

/// The guaranteed survivor count `N / (q^t t!) - t` after `t` steps.
pub fn survivor_lower_bound(n: usize, q: u32, t: usize) -> f64 {
    let mut denom = 1.0f64;
    for i in 1..=t {
        denom *= f64::from(q) * i as f64;
    }
    n as f64 / denom - t as f64
}

/// Exhaustively re-checks the sequence conditions. Every violating tuple is
/// collected; the certificate shows the lexicographically least one and
/// reports the survivor count against its guaranteed lower bound.
pub fn check_sequence_invariants<T: Coord>(
    seq: &SeparatedSequence,
    config: &PointConfig<T>,
    coloring: &EdgeColoring,
) -> Certificate {
    const PROPERTY: &str = "separated-sequence";
    let mut violations: Vec<(Vec<usize>, u8)> = Vec::new();
    let mut examined = 0u64;
    let t = seq.sequence.len();
    let later = |i: usize| seq.sequence[i + 1..].iter().chain(&seq.survivors).copied();

    for (i, &p) in seq.sequence.iter().enumerate() {
        let mut expected = seq.vertex_colors.get(i).copied().flatten();
        for v in later(i) {
            examined += 1;
            let c = coloring.pair(p, v);
            match expected {
                None => expected = Some(c),
                Some(e) if e != c => violations.push((vec![p, v], 1)),
                _ => {}
            }
        }
    }
    for i in 0..t {
        for j in (i + 1)..t {
            let (a, b) = (seq.sequence[i], seq.sequence[j]);
            let mut side: Option<(Orientation, usize)> = None;
            for v in later(j) {
                examined += 1;
                let o = config.orientation(a, b, v);
                match side {
                    None => side = Some((o, v)),
                    Some((s, first)) if s != o || o == Orientation::Collinear => {
                        violations.push((vec![a, b, first, v], 2));
                    }
                    _ => {}
                }
            }
        }
    }
    if let Some(&last) = seq.sequence.last() {
        for &s in &seq.survivors {
            examined += 1;
            if config.point(s).x <= config.point(last).x {
                violations.push((vec![last, s], 3));
            }
        }
    }
    violations.sort();
    let q = coloring.color_count();
    let bound = survivor_lower_bound(config.len(), q, t);
    let mut cert = match violations.first() {
        None => Certificate::pass(PROPERTY, examined),
        Some((w, cond)) => Certificate::fail(PROPERTY, examined, w.clone())
            .with_note("condition", cond)
            .with_note("violations", violations.len()),
    };
    cert = cert
        .with_note("steps", t)
        .with_note("survivors", seq.survivors.len())
        .with_note("survivor_bound", format!("{bound:.3}"));
    cert
}

/// The largest class of sequence vertices by vertex color (ties: lowest
/// color), in sequence order. A trailing vertex with no recorded color fits
/// any class and is appended.
pub fn pigeonhole_monochromatic(seq: &SeparatedSequence, q: u32) -> Vec<usize> {
    let mut counts = vec![0usize; q.max(1) as usize];
    for c in seq.vertex_colors.iter().flatten() {
        if let Some(slot) = counts.get_mut(*c as usize) {
            *slot += 1;
        }
    }
    let best = counts
        .iter()
        .enumerate()
        .max_by_key(|(c, n)| (**n, std::cmp::Reverse(*c)))
        .map(|(c, _)| c as Color)
        .unwrap_or(0);
    seq.sequence
        .iter()
        .zip(&seq.vertex_colors)
        .filter(|(_, c)| c.is_none_or(|c| c == best))
        .map(|(&p, _)| p)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainWitness {
    pub kind: CupCap,
    /// Configuration indices in x-order.
    pub vertices: Vec<usize>,
}

/// The two partial orders on an x-sorted subset: `above[i][j]` (`i < j`)
/// holds when every subset point after position `j` lies above the line
/// through positions `i` and `j`; `below` likewise.
#[derive(Debug, Clone)]
pub struct ChainOrders {
    m: usize,
    above: Vec<bool>,
    below: Vec<bool>,
}

impl ChainOrders {
    pub fn new<T: Coord>(subset: &[usize], config: &PointConfig<T>) -> Result<Self, ExtractionError> {
        let m = subset.len();
        let mut above = vec![false; m * m];
        let mut below = vec![false; m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                let (mut up, mut down) = (true, true);
                for &k in &subset[j + 1..] {
                    match config.orientation(subset[i], subset[j], k) {
                        Orientation::Counterclockwise => down = false,
                        Orientation::Clockwise => up = false,
                        Orientation::Collinear => {
                            up = false;
                            down = false;
                        }
                    }
                }
                if !up && !down {
                    return Err(ExtractionError::IncomparablePair(subset[i], subset[j]));
                }
                above[i * m + j] = up;
                below[i * m + j] = down;
            }
        }
        Ok(ChainOrders { m, above, below })
    }

    /// Positions `i < j` related in the "later points above" order.
    pub fn above(&self, i: usize, j: usize) -> bool {
        i < j && self.above[i * self.m + j]
    }

    pub fn below(&self, i: usize, j: usize) -> bool {
        i < j && self.below[i * self.m + j]
    }

    /// Longest chain in one order, as subset positions.
    pub fn longest_chain(&self, upward: bool) -> Vec<usize> {
        let m = self.m;
        let rel = |i: usize, j: usize| if upward { self.above(i, j) } else { self.below(i, j) };
        let mut len = vec![1usize; m];
        let mut prev = vec![usize::MAX; m];
        for j in 0..m {
            for i in 0..j {
                if rel(i, j) && len[i] + 1 > len[j] {
                    len[j] = len[i] + 1;
                    prev[j] = i;
                }
            }
        }
        let Some(end) = (0..m).max_by_key(|&j| (len[j], std::cmp::Reverse(j))) else {
            return Vec::new();
        };
        let mut chain = vec![end];
        while prev[*chain.last().expect("non-empty")] != usize::MAX {
            chain.push(prev[*chain.last().expect("non-empty")]);
        }
        chain.reverse();
        chain
    }
}

/// Longest chain under either order, by dynamic programming over x-order. A
/// chain in the "above" order is a cup, in the "below" order a cap; ties and
/// chains shorter than three are reported as cups.
pub fn find_cup_or_cap_chain<T: Coord>(
    subset: &[usize],
    config: &PointConfig<T>,
) -> Result<ChainWitness, ExtractionError> {
    if subset.is_empty() {
        return Err(ExtractionError::EmptyInput);
    }
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    let orders = ChainOrders::new(&sorted, config)?;
    let cup = orders.longest_chain(true);
    let cap = orders.longest_chain(false);
    let (kind, positions) = if cap.len() > cup.len() && cap.len() >= 3 {
        (CupCap::Cap, cap)
    } else {
        (CupCap::Cup, cup)
    };
    let vertices: Vec<usize> = positions.into_iter().map(|p| sorted[p]).collect();
    if vertices.len() >= 3 {
        debug_assert_eq!(classify_cup_cap(&config.subset(&vertices)).ok(), Some(kind));
    }
    Ok(ChainWitness { kind, vertices })
}

/// How far each stage of the pipeline got against its quota.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub n: usize,
    pub q: u32,
    pub points: usize,
    pub steps_quota: usize,
    pub steps_achieved: usize,
    pub survivors: usize,
    pub pigeonhole_quota: usize,
    pub pigeonhole_size: usize,
    pub chain_quota: usize,
    pub chain_length: usize,
}

impl fmt::Display for StageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "q={}", self.q)?;
        writeln!(f, "points={}", self.points)?;
        writeln!(f, "steps_quota={}", self.steps_quota)?;
        writeln!(f, "steps_achieved={}", self.steps_achieved)?;
        writeln!(f, "survivors={}", self.survivors)?;
        writeln!(f, "pigeonhole_quota={}", self.pigeonhole_quota)?;
        writeln!(f, "pigeonhole_size={}", self.pigeonhole_size)?;
        writeln!(f, "chain_quota={}", self.chain_quota)?;
        write!(f, "chain_length={}", self.chain_length)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extraction {
    Found {
        witness: ChainWitness,
        color: Color,
        report: StageReport,
    },
    NotFound {
        report: StageReport,
    },
}

impl Extraction {
    pub fn report(&self) -> &StageReport {
        match self {
            Extraction::Found { report, .. } | Extraction::NotFound { report } => report,
        }
    }
}

/// Full pipeline with the `q n²` step quota.
pub fn extract_mono_convex<T: Coord>(
    config: &PointConfig<T>,
    coloring: &EdgeColoring,
    n: usize,
) -> Result<Extraction, ExtractionError> {
    let q = coloring.color_count() as usize;
    extract_mono_convex_with_steps(config, coloring, n, q * n * n)
}

/// Pipeline with an explicit step quota. Below the guaranteed size the
/// stages run as far as the input allows; the result is `Found` whenever the
/// final chain reaches `n`, and the witness is always re-checked by the
/// oracle (monochromatic and in convex position) before it is returned.
pub fn extract_mono_convex_with_steps<T: Coord>(
    config: &PointConfig<T>,
    coloring: &EdgeColoring,
    n: usize,
    steps: usize,
) -> Result<Extraction, ExtractionError> {
    let seq = build_separated_sequence(config, coloring, steps)?;
    let q = coloring.color_count();
    let mono = pigeonhole_monochromatic(&seq, q);
    let chain = find_cup_or_cap_chain(&mono, config)?;
    let report = StageReport {
        n,
        q,
        points: config.len(),
        steps_quota: steps,
        steps_achieved: seq.steps(),
        survivors: seq.survivors.len(),
        pigeonhole_quota: n * n,
        pigeonhole_size: mono.len(),
        chain_quota: n,
        chain_length: chain.vertices.len(),
    };
    if chain.vertices.len() < n || n == 0 {
        return Ok(Extraction::NotFound { report });
    }
    let vertices: Vec<usize> = chain.vertices[..n].to_vec();
    let color = is_monochromatic(coloring, &vertices);
    let convex = is_convex_position(&config.subset(&vertices)).unwrap_or(false);
    let (Some(color), true) = (color, convex) else {
        return Err(ExtractionError::OracleRejected(vertices));
    };
    Ok(Extraction::Found {
        witness: ChainWitness {
            kind: chain.kind,
            vertices,
        },
        color,
        report,
    })
}
