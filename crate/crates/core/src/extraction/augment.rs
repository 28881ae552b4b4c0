//! Recolorings that force monochromatic cliques into convex position.

use crate::coloring::{EdgeColoring, HyperColoring};
use crate::error::ExtractionError;
use crate::geometry::{is_convex_position, Coord, Orientation, PointConfig};

fn check_sizes<T: Coord>(config: &PointConfig<T>, coloring: &EdgeColoring) -> Result<(), ExtractionError> {
    if coloring.vertex_count() != config.len() {
        return Err(ExtractionError::Mismatch(format!(
            "coloring has {} vertices, configuration has {} points",
            coloring.vertex_count(),
            config.len()
        )));
    }
    Ok(())
}

/// Triple coloring with `2q` colors: `old * 2 + 1` for counterclockwise
/// triples, `old * 2` for clockwise ones. A monochromatic clique of the
/// result has all triples oriented alike, so it is in convex position.
pub fn orientation_augmented_coloring<T: Coord>(
    config: &PointConfig<T>,
    coloring: &EdgeColoring,
) -> Result<EdgeColoring, ExtractionError> {
    check_sizes(config, coloring)?;
    if coloring.arity() != 3 {
        return Err(ExtractionError::Mismatch(format!(
            "expected a triple coloring, got arity {}",
            coloring.arity()
        )));
    }
    let q = coloring.color_count();
    Ok(EdgeColoring::from_fn(3, 2 * q, config.len(), |s| {
        let bit = u32::from(config.orientation(s[0], s[1], s[2]) == Orientation::Counterclockwise);
        coloring.color(s) * 2 + bit
    })?)
}

/// For arity `ℓ ≥ 4`: every `ℓ`-subset not in convex position gets the new
/// color `q`; the rest keep theirs.
pub fn nonconvex_augmented_coloring<T: Coord>(
    config: &PointConfig<T>,
    coloring: &EdgeColoring,
) -> Result<EdgeColoring, ExtractionError> {
    check_sizes(config, coloring)?;
    if coloring.arity() < 4 {
        return Err(ExtractionError::Mismatch(format!(
            "expected arity at least 4, got {}",
            coloring.arity()
        )));
    }
    let q = coloring.color_count();
    Ok(EdgeColoring::from_fn(coloring.arity(), q + 1, config.len(), |s| {
        // PointConfig guarantees general position, so this cannot error.
        if is_convex_position(&config.subset(s)).unwrap_or(false) {
            coloring.color(s)
        } else {
            q
        }
    })?)
}
