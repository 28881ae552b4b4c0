use crate::coloring::{EdgeColoring, HyperColoring};
use crate::error::ConstructionError;
use crate::geometry::{find_collinear_triple, orientation, Coord, ExactPoint, PointConfig};

use super::gen_no_convex;

/// Shrink attempts per level before giving up; each attempt halves the copy
/// relative to the spacing of the host vertices.
const MAX_SHRINK_STEPS: u32 = 256;

/// Shears `y += s x` of the copy tried at each scale. A shear keeps the
/// copy's orientations but moves its directions off host directions.
const MAX_COPY_SHEAR: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupInstance<T> {
    pub config: PointConfig<T>,
    pub coloring: EdgeColoring,
    /// For each added color, the `k` such that the copies were placed at
    /// scale `1 / 2^k` relative to the host instance.
    pub shrink_exponents: Vec<u32>,
    /// For each added color, the shear applied to the copies.
    pub copy_shears: Vec<u32>,
}

/// `2^(q(n-2))` points with a `q`-coloring of pairs and no monochromatic
/// convex `n`-subset.
///
/// Color `0` is the all-pairs coloring of `gen_no_convex(n)`. Each further
/// color `c` replaces every vertex of the current instance by a small copy
/// of `gen_no_convex(n)` whose internal pairs get color `c`; pairs across
/// copies inherit the color of the host pair.
pub fn gen_blowup_coloring<T: Coord>(n: u32, q: u32) -> Result<BlowupInstance<T>, ConstructionError> {
    if n < 4 || q < 1 {
        return Err(ConstructionError::BadParams(format!(
            "blowup needs n >= 4 and q >= 1, got n={n} q={q}"
        )));
    }
    let base = gen_no_convex::<T>(n)?;
    let mut config = base.clone();
    let mut coloring = EdgeColoring::uniform(2, 1, base.len(), 0)?;
    let mut shrink_exponents = Vec::new();
    let mut copy_shears = Vec::new();
    for color in 1..q {
        let (next_config, next_coloring, k, s) = blow_up_once(&config, &coloring, &base, color)?;
        config = next_config;
        coloring = next_coloring;
        shrink_exponents.push(k);
        copy_shears.push(s);
    }
    Ok(BlowupInstance {
        config,
        coloring,
        shrink_exponents,
        copy_shears,
    })
}

fn blow_up_once<T: Coord>(
    host: &PointConfig<T>,
    host_coloring: &EdgeColoring,
    copy: &PointConfig<T>,
    new_color: u32,
) -> Result<(PointConfig<T>, EdgeColoring, u32, u32), ConstructionError> {
    let mut scale = T::one();
    let two = T::one() + T::one();
    let shears: Vec<Vec<ExactPoint<T>>> = (0..=MAX_COPY_SHEAR)
        .map(|s| {
            let s = T::from_u32(s).expect("small shear fits the scalar");
            copy.points()
                .iter()
                .map(|g| ExactPoint::new(g.x.clone(), g.y.clone() + s.clone() * g.x.clone()))
                .collect()
        })
        .collect();
    for k in 0..MAX_SHRINK_STEPS {
        for (s, copy) in shears.iter().enumerate() {
            // Scaling the host up by 2^k is the integer form of shrinking the
            // copies by 2^-k.
            let points: Vec<(ExactPoint<T>, usize)> = host
                .points()
                .iter()
                .enumerate()
                .flat_map(|(i, v)| {
                    let anchor = v.scaled(&scale);
                    copy.iter()
                        .map(move |g| (g.translated(&anchor.x, &anchor.y), i))
                        .collect::<Vec<_>>()
                })
                .collect();
            if !placement_is_faithful(host, copy.len(), &points) {
                continue;
            }
            let mut order: Vec<usize> = (0..points.len()).collect();
            order.sort_by(|&a, &b| points[a].0.x.cmp(&points[b].0.x));
            let sorted: Vec<ExactPoint<T>> = order.iter().map(|&i| points[i].0.clone()).collect();
            let owner: Vec<usize> = order.iter().map(|&i| points[i].1).collect();
            let config = PointConfig::new(sorted)?;
            let coloring = EdgeColoring::from_fn(2, new_color + 1, config.len(), |s| {
                let (a, b) = (owner[s[0]], owner[s[1]]);
                if a == b {
                    new_color
                } else {
                    host_coloring.color(&[a.min(b), a.max(b)])
                }
            })?;
            return Ok((config, coloring, k, s as u32));
        }
        scale = scale * two.clone();
    }
    Err(ConstructionError::CertificationFailed(format!(
        "no faithful placement within {MAX_SHRINK_STEPS} halvings and {MAX_COPY_SHEAR} shears"
    )))
}

/// Distinct x, general position, and every triple drawn from three different
/// copies turns the same way as the corresponding host triple.
fn placement_is_faithful<T: Coord>(host: &PointConfig<T>, copy_len: usize, points: &[(ExactPoint<T>, usize)]) -> bool {
    let mut xs: Vec<&T> = points.iter().map(|(p, _)| &p.x).collect();
    xs.sort();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let plain: Vec<ExactPoint<T>> = points.iter().map(|(p, _)| p.clone()).collect();
    if find_collinear_triple(&plain).is_some() {
        return false;
    }
    let block = |i: usize| &plain[i * copy_len..(i + 1) * copy_len];
    let h = host.len();
    for i in 0..h {
        for j in (i + 1)..h {
            for k in (j + 1)..h {
                let want = host.orientation(i, j, k);
                for a in block(i) {
                    for b in block(j) {
                        for c in block(k) {
                            if orientation(a, b, c) != want {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}
