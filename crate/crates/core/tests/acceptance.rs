//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints its own line; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use geo_ramsey::constructions::{
    gen_blowup_coloring, gen_cupcap_free, gen_no_convex, gen_stepup_coloring, gen_stepup_points, paley_coloring,
    pentagon_coloring, random_general_position, random_instance,
};
use geo_ramsey::extraction::{
    build_separated_sequence, check_sequence_invariants, extract_mono_convex, pigeonhole_monochromatic, ChainOrders,
    Extraction,
};
use geo_ramsey::verify::{
    check_delta_local_minimum_exclusion, has_mono_convex_subset, has_mono_convex_subset_unpruned,
    max_convex_subset_size, max_convex_subset_size_exhaustive,
};
use geo_ramsey::{
    classify_cup_cap, is_convex_position, orientation, Config, Config64, CupCap, EdgeColoring, HyperColoring,
    Orientation, Point64,
};
use itertools::Itertools;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    check(took <= limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

/// Most significant differing bit, 1-based, by scanning from the top.
fn msb_delta(a: usize, b: usize) -> u32 {
    (1..=usize::BITS)
        .rev()
        .find(|&s| (a ^ b) >> (s - 1) & 1 == 1)
        .unwrap_or(0)
}

/// Deepest aligned block of `2^s` labels holding `a` in its left half and
/// `b` in its right half.
fn containment_delta(a: usize, b: usize, t: u32) -> u32 {
    (1..=t)
        .rev()
        .find(|&s| {
            let half = 1usize << (s - 1);
            let block = a / (2 * half);
            b / (2 * half) == block && a % (2 * half) < half && b % (2 * half) >= half
        })
        .unwrap_or(0)
}

fn has_mono_triangle(c: &EdgeColoring) -> bool {
    (0..c.vertex_count())
        .tuple_combinations()
        .any(|(a, b, d)| c.pair(a, b) == c.pair(a, d) && c.pair(a, b) == c.pair(b, d))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let base = pentagon_coloring();
    check(!has_mono_triangle(&base), || {
        "pentagon base has a monochromatic triangle".into()
    })?;
    let triples = (0..5).combinations(3).count();
    check(triples == 10, || format!("{triples} base triples"))?;

    let set = gen_stepup_points::<num_bigint::BigInt>(5).map_err(|e| e.to_string())?;
    let lifted = gen_stepup_coloring(&base).map_err(|e| e.to_string())?;
    let chi = |s: &[usize]| base.pair(msb_delta(s[0], s[1]) as usize - 1, msb_delta(s[1], s[2]) as usize - 1);

    let mut subsets = 0u64;
    let mut mono = 0u64;
    for s in (0..32).combinations(6) {
        subsets += 1;
        let c0 = chi(&s[..3]);
        if s.iter().copied().combinations(3).all(|t| chi(&t) == c0) {
            mono += 1;
            let convex = is_convex_position(&set.config().subset(&s)).map_err(|e| e.to_string())?;
            check(!convex, || format!("monochromatic convex 6-subset {s:?}"))?;
        }
        debug_assert_eq!(lifted.color(&s[..3]), c0);
    }
    check(subsets == 906_192, || format!("{subsets} subsets"))?;

    let plain = has_mono_convex_subset_unpruned(set.config(), &lifted, 6, u64::MAX).map_err(|e| e.to_string())?;
    check(!plain.passed() && plain.examined == 906_192, || {
        format!("library scan: {plain}")
    })?;
    let pruned = has_mono_convex_subset(set.config(), &lifted, 6, u64::MAX).map_err(|e| e.to_string())?;
    check(!pruned.passed(), || format!("pruned search: {pruned}"))?;
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "906192 six-subsets of P_5, {mono} monochromatic, none convex ({took:.2?})"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut a_checked = 0u64;
    for t in 1..=8u32 {
        let n = 1usize << t;
        for (i, j, k) in (0..n).tuple_combinations() {
            a_checked += 1;
            check(msb_delta(i, j) != msb_delta(j, k), || {
                format!("Property A fails at t={t}: {i},{j},{k}")
            })?;
        }
    }
    let mut b_checked = 0u64;
    for t in 1..=6u32 {
        let n = 1usize << t;
        for len in 2..=4 {
            for tuple in (0..n).combinations(len) {
                b_checked += 1;
                let span = msb_delta(tuple[0], tuple[len - 1]);
                let max = tuple.windows(2).map(|w| msb_delta(w[0], w[1])).max().unwrap_or(0);
                check(span == max, || format!("Property B fails at t={t}: {tuple:?}"))?;
            }
        }
    }
    for t in 1..=6u32 {
        let set = gen_stepup_points::<i64>(t).map_err(|e| e.to_string())?;
        for (a, b) in (0..set.len()).tuple_combinations() {
            let lib = set.delta(a, b).map_err(|e| e.to_string())?;
            check(lib == containment_delta(a, b, t) && lib == msb_delta(a, b), || {
                format!("delta mismatch at t={t}: ({a},{b})")
            })?;
        }
    }
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "Property A on {a_checked} triples, Property B on {b_checked} tuples, delta oracles agree ({took:.2?})"
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let set = gen_stepup_points::<i64>(5).map_err(|e| e.to_string())?;
    let mut convex = 0u64;
    for m in 3..=6 {
        let cert = check_delta_local_minimum_exclusion(&set, m);
        check(cert.passed(), || format!("m={m}: {cert}"))?;
        convex += cert.examined;
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{convex} convex subsets of P_5 (sizes 3..=6), no local minimum ({took:.2?})"
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let b = gen_blowup_coloring::<num_bigint::BigInt>(4, 2).map_err(|e| e.to_string())?;
    check(b.config.len() == 16, || format!("{} points", b.config.len()))?;
    check(b.coloring.colors_used() == vec![0, 1], || "not a 2-coloring".into())?;
    let cert = has_mono_convex_subset_unpruned(&b.config, &b.coloring, 4, u64::MAX).map_err(|e| e.to_string())?;
    check(!cert.passed() && cert.examined == 1820, || format!("(4,2): {cert}"))?;

    let b = gen_blowup_coloring::<num_bigint::BigInt>(5, 1).map_err(|e| e.to_string())?;
    check(b.config.len() == 8, || format!("{} points", b.config.len()))?;
    let cert = has_mono_convex_subset_unpruned(&b.config, &b.coloring, 5, u64::MAX).map_err(|e| e.to_string())?;
    check(!cert.passed() && cert.examined == 56, || format!("(5,1): {cert}"))?;
    let took = within(start, Duration::from_secs(1))?;
    Ok(format!(
        "blowup(4,2): 1820 subsets, blowup(5,1): 56 subsets, no witness ({took:.2?})"
    ))
}

fn criterion_5() -> Outcome {
    let config: Config = gen_cupcap_free(2, 2).map_err(|e| e.to_string())?;
    check(config.len() == 6, || format!("{} points", config.len()))?;
    let mut quads = 0;
    for s in (0..6).combinations(4) {
        quads += 1;
        let kind = classify_cup_cap(&config.subset(&s)).map_err(|e| e.to_string())?;
        check(kind == CupCap::Neither, || format!("4-{kind} at {s:?}"))?;
    }
    check(quads == 15, || format!("{quads} quadruples"))?;
    let nc: Config = gen_no_convex(5).map_err(|e| e.to_string())?;
    check(nc.len() == 8, || format!("no_convex(5) has {} points", nc.len()))?;
    let dp = max_convex_subset_size(&nc);
    let brute = max_convex_subset_size_exhaustive(&nc);
    check(dp == 4 && brute == 4, || {
        format!("max convex: dp {dp}, brute force {brute}")
    })?;
    Ok("cupcap_free(2,2): 6 points, 15 quadruples, no 4-cup or 4-cap; no_convex(5): 8 points, max convex 4".into())
}

/// Longest subset (of at most 12 positions) whose pairs all satisfy `rel`.
fn brute_longest_chain(m: usize, rel: impl Fn(usize, usize) -> bool) -> usize {
    let m = m.min(12);
    (0u32..1 << m)
        .filter(|mask| {
            let v: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            v.iter().tuple_combinations().all(|(&a, &b)| rel(a, b))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let n = 4;
    let mut found = 0;
    let mut chains = 0;
    for seed in 0..100u64 {
        let size = 100 + (seed as usize * 379) % 901;
        let q = 1 + (seed % 3) as u32;
        let (config, coloring) = random_instance::<i64>(size, q, seed).map_err(|e| e.to_string())?;
        let steps = q as usize * n * n;
        let seq = build_separated_sequence(&config, &coloring, steps).map_err(|e| e.to_string())?;
        let cert = check_sequence_invariants(&seq, &config, &coloring);
        check(cert.passed(), || format!("seed {seed}: {cert}"))?;

        let mono = pigeonhole_monochromatic(&seq, q);
        // Every pair of the pigeonhole set must be comparable.
        ChainOrders::new(&mono, &config).map_err(|e| format!("seed {seed}: {e}"))?;
        let head = mono.len().min(12);
        let sub = ChainOrders::new(&mono[..head], &config).map_err(|e| format!("seed {seed}: {e}"))?;
        for upward in [true, false] {
            let dp = sub.longest_chain(upward).len();
            let brute = brute_longest_chain(head, |a, b| if upward { sub.above(a, b) } else { sub.below(a, b) });
            check(dp == brute, || {
                format!("seed {seed}: chain dp {dp} vs brute force {brute}")
            })?;
            chains += 1;
        }

        match extract_mono_convex(&config, &coloring, n).map_err(|e| format!("seed {seed}: {e}"))? {
            Extraction::Found { witness, color, .. } => {
                found += 1;
                let pts = config.subset(&witness.vertices);
                let one_color = witness
                    .vertices
                    .iter()
                    .tuple_combinations()
                    .all(|(&a, &b)| coloring.pair(a, b) == color);
                let convex = is_convex_position(&pts).map_err(|e| e.to_string())?;
                check(one_color && convex, || {
                    format!("seed {seed}: bad witness {:?}", witness.vertices)
                })?;
            }
            Extraction::NotFound { .. } => {}
        }
    }
    let took = within(start, Duration::from_secs(300))?;
    Ok(format!(
        "100 instances: invariants hold, {chains} chain DP checks agree, {found} witnesses oracle-checked ({took:.2?})"
    ))
}

fn criterion_7() -> Outcome {
    let mut uniform = 0u64;
    for seed in 0..20u64 {
        let config: Config64 = random_general_position(10, 1000 + seed).map_err(|e| e.to_string())?;
        for size in 3..=8 {
            for s in (0..10).combinations(size) {
                let pts: Vec<&Point64> = s.iter().map(|&i| config.point(i)).collect();
                let mut turns = pts.iter().tuple_combinations().map(|(a, b, c)| orientation(a, b, c));
                let first = turns.next().expect("at least one triple");
                if first != Orientation::Collinear && turns.all(|o| o == first) {
                    uniform += 1;
                    let convex = is_convex_position(&config.subset(&s)).map_err(|e| e.to_string())?;
                    check(convex, || {
                        format!("seed {seed}: {s:?} uniformly oriented but not convex")
                    })?;
                }
            }
        }
    }
    Ok(format!(
        "20 ten-point configs, {uniform} uniformly oriented subsets, all convex"
    ))
}

fn criterion_8() -> Outcome {
    let tri = Config64::new(vec![
        Point64::from_i64(0, 0),
        Point64::from_i64(3, 9),
        Point64::from_i64(4, 4),
        Point64::from_i64(9, 3),
    ])
    .map_err(|e| e.to_string())?;
    // (4,4) is the centroid of the other three.
    check(max_convex_subset_size(&tri) == 3, || "triangle with centroid".into())?;
    let mut least = usize::MAX;
    for seed in 0..50u64 {
        let config: Config64 = random_general_position(9, 5000 + seed).map_err(|e| e.to_string())?;
        let size = max_convex_subset_size(&config);
        check(size == max_convex_subset_size_exhaustive(&config), || {
            format!("seed {seed}: dp disagrees")
        })?;
        least = least.min(size);
    }
    check(least >= 5, || format!("a 9-point config has max convex {least}"))?;
    let paley = paley_coloring(17);
    let mut quads = 0;
    for s in (0..17).combinations(4) {
        quads += 1;
        let c0 = paley.pair(s[0], s[1]);
        let mono = s.iter().tuple_combinations().all(|(&a, &b)| paley.pair(a, b) == c0);
        check(!mono, || format!("Paley-17 monochromatic K4 {s:?}"))?;
    }
    check(quads == 2380, || format!("{quads} quadruples"))?;
    Ok(format!(
        "centroid gives 3; 50 nine-point configs, min {least}; Paley-17 clean over 2380 quadruples"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("stepping-up certification", criterion_1),
        ("delta properties A and B", criterion_2),
        ("local-minimum exclusion", criterion_3),
        ("blow-up certification", criterion_4),
        ("cup/cap-free tightness", criterion_5),
        ("extraction pipeline", criterion_6),
        ("uniform orientation implies convex", criterion_7),
        ("known small values", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
