//! Monochromatic convex sets in colored complete geometric hypergraphs.
//!
//! Points have exact integer coordinates and every geometric predicate is an
//! exact sign test. The core is generic over the scalar; [`Point`] and
//! [`Config`] fix it to arbitrary precision, [`Point64`] and [`Config64`] to
//! `i64` for small fast runs.

pub mod certificate;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod extraction;
pub mod geometry;
pub mod io;
pub mod verify;

use num_bigint::BigInt;

pub use certificate::{Certificate, Verdict};
pub use coloring::{is_monochromatic, Color, EdgeColoring, HyperColoring};
pub use error::{ColoringError, ConstructionError, ExtractionError, GeometryError, ParseError, VerifyError};
pub use geometry::{
    classify_cup_cap, convex_hull, is_convex_position, is_general_position, orientation, Coord, CupCap, ExactPoint,
    Orientation, OrientationOracle, OrientationTable, PointConfig,
};

pub type Point = ExactPoint<BigInt>;
pub type Config = PointConfig<BigInt>;
pub type SteppingUpSet = constructions::SteppingUpSet<BigInt>;

pub type Point64 = ExactPoint<i64>;
pub type Config64 = PointConfig<i64>;
pub type SteppingUpSet64 = constructions::SteppingUpSet<i64>;
