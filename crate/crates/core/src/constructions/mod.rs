//! Lower-bound point sets and colorings.

mod blowup;
mod cupcap;
mod ramsey;
mod random;
mod stepup;

pub use blowup::{gen_blowup_coloring, BlowupInstance};
pub use cupcap::{gen_cupcap_free, gen_no_convex};
pub use ramsey::{
    find_mono_clique, find_ramsey_witness, paley_coloring, pentagon_coloring, RamseySearch, RamseyWitness,
    WitnessSource,
};
pub use random::{modulus_for, random_coloring, random_general_position, random_instance, COLOR_STREAM};
pub use stepup::{
    delta, gen_stepup_coloring, gen_stepup_points, SteppingUpColoring, SteppingUpSet, MAX_STEPUP_COLORING_LEVEL,
    MAX_STEPUP_LEVEL,
};

use crate::geometry::{Coord, ExactPoint};

/// Largest absolute slope over all pairs of an x-sorted set, as `(num, den)`
/// with `den > 0`. The maximum is always attained by x-adjacent points.
fn max_abs_slope<T: Coord>(points: &[ExactPoint<T>]) -> (T, T) {
    let mut best = (T::zero(), T::one());
    for w in points.windows(2) {
        let num = (w[1].y.clone() - w[0].y.clone()).abs();
        let den = w[1].x.clone() - w[0].x.clone();
        if num.clone() * best.1.clone() > best.0.clone() * den.clone() {
            best = (num, den);
        }
    }
    best
}

/// Translates `right` so that it lies strictly to the right of `left`, every
/// line through two points of `left` passes strictly below every translated
/// point, and every line through two translated points passes strictly above
/// every point of `left`.
///
/// Both inputs must be non-empty and x-sorted with distinct x. The vertical
/// offset is the least integer that the slope bound certifies.
pub(crate) fn place_above_right<T: Coord>(left: &[ExactPoint<T>], right: &[ExactPoint<T>]) -> Vec<ExactPoint<T>> {
    let dx = left.last().expect("non-empty").x.clone() - right[0].x.clone() + T::one();
    let span = right.last().expect("non-empty").x.clone() + dx.clone() - left[0].x.clone();
    let (ln, ld) = max_abs_slope(left);
    let (rn, rd) = max_abs_slope(right);
    let (num, den) = if ln.clone() * rd.clone() >= rn.clone() * ld.clone() {
        (ln, ld)
    } else {
        (rn, rd)
    };
    let max_left = left.iter().map(|p| &p.y).max().expect("non-empty").clone();
    let min_right = right.iter().map(|p| &p.y).min().expect("non-empty").clone();
    let rise = if num.is_zero() {
        T::zero()
    } else {
        (num * span).div_floor(&den)
    };
    let dy = max_left - min_right + rise + T::one();
    right.iter().map(|p| p.translated(&dx, &dy)).collect()
}
