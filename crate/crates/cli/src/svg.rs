//! Deterministic SVG drawings of point sets.

use std::fmt::Write as _;

use geo_ramsey::{Color, EdgeColoring, HyperColoring, Point};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

/// y-spread ratio above which the vertical axis is log-compressed.
pub const LOG_THRESHOLD: f64 = 1e6;

const PALETTE: [&str; 8] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Natural log of a non-negative integer that may not fit in an `f64`.
fn ln_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 53;
    let top: BigInt = v >> shift;
    top.to_f64().unwrap_or(1.0).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `(max - min) / smallest gap` between distinct y values, as a natural log
/// so that huge spreads stay finite. Zero for fewer than two distinct values.
pub fn ln_y_spread(points: &[Point]) -> f64 {
    let mut ys: Vec<&BigInt> = points.iter().map(|p| &p.y).collect();
    ys.sort();
    ys.dedup();
    if ys.len() < 2 {
        return 0.0;
    }
    let gap = ys.windows(2).map(|w| w[1] - w[0]).min().expect("two values");
    ln_big(&(ys[ys.len() - 1] - ys[0])) - ln_big(&gap)
}

/// Maps `v - min` in `[0, range]` to `[0, 1]`; `log` compresses with `ln(1 + t)`.
fn unit(v: &BigInt, min: &BigInt, range: &BigInt, log: bool) -> f64 {
    if range.is_zero() {
        return 0.5;
    }
    let off = v - min;
    if log {
        let one = BigInt::from(1);
        ln_big(&(off + &one)) / ln_big(&(range + &one))
    } else {
        // Divide in exact arithmetic first so huge ranges do not overflow.
        let scale = BigInt::from(1u64 << 40);
        let scaled: BigInt = off * &scale / range;
        scaled.to_f64().unwrap_or(0.0) / (1u64 << 40) as f64
    }
}

pub fn render(points: &[Point], coloring: Option<&EdgeColoring>, highlight: &[usize]) -> String {
    let spread = ln_y_spread(points);
    let log_y = spread > LOG_THRESHOLD.ln();
    let bounds = |f: fn(&Point) -> &BigInt| {
        let min = points.iter().map(f).min().cloned().unwrap_or_default();
        let max = points.iter().map(f).max().cloned().unwrap_or_default();
        let range = &max - &min;
        (min, range)
    };
    let (xmin, xrange) = bounds(|p| &p.x);
    let (ymin, yrange) = bounds(|p| &p.y);
    let inner = SIZE - 2.0 * MARGIN;
    let screen: Vec<(f64, f64)> = points
        .iter()
        .map(|p| {
            let x = MARGIN + inner * unit(&p.x, &xmin, &xrange, false);
            let y = SIZE - MARGIN - inner * unit(&p.y, &ymin, &yrange, log_y);
            (x, y)
        })
        .collect();

    let mut title = format!("points={}", points.len());
    if let Some(c) = coloring {
        let _ = write!(title, " arity={} colors={}", c.arity(), c.color_count());
    }
    if log_y {
        let _ = write!(
            title,
            " y=log-compressed spread=1e{:.1}",
            spread / std::f64::consts::LN_10
        );
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" width=\"{SIZE}\" height=\"{SIZE}\">"
    );
    let _ = writeln!(out, "<title>{title}</title>");
    let _ = writeln!(out, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");

    if let Some(c) = coloring.filter(|c| c.arity() == 2 && c.vertex_count() == points.len()) {
        let _ = writeln!(out, "<g stroke-width=\"0.6\" stroke-opacity=\"0.5\">");
        for (pair, color) in c.entries() {
            let ((x1, y1), (x2, y2)) = (screen[pair[0]], screen[pair[1]]);
            let _ = writeln!(
                out,
                "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{}\" class=\"c{color}\"/>",
                stroke(color)
            );
        }
        let _ = writeln!(out, "</g>");
    }

    if highlight.len() >= 2 {
        let mut ring: Vec<(f64, f64)> = highlight.iter().filter_map(|&i| screen.get(i).copied()).collect();
        let (cx, cy) = ring.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
            (a + x / ring.len() as f64, b + y / ring.len() as f64)
        });
        ring.sort_by(|p, q| {
            let ap = (p.1 - cy).atan2(p.0 - cx);
            let aq = (q.1 - cy).atan2(q.0 - cx);
            ap.total_cmp(&aq)
        });
        let path: Vec<String> = ring.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(
            out,
            "<polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>",
            path.join(" ")
        );
    }

    for (i, (x, y)) in screen.iter().enumerate() {
        let (r, fill) = if highlight.contains(&i) {
            (6.0, "black")
        } else {
            (3.5, "#444444")
        };
        let _ = writeln!(out, "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r}\" fill=\"{fill}\"/>");
    }
    out.push_str("</svg>\n");
    out
}

fn stroke(color: Color) -> &'static str {
    PALETTE[color as usize % PALETTE.len()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_i64(x, y)).collect()
    }

    #[test]
    fn square() {
        let svg = render(&pts(&[(0, 0), (1, 5), (2, -3), (3, 1)]), None, &[]);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert!(!svg.contains("log-compressed"));
        assert_eq!(svg, render(&pts(&[(0, 0), (1, 5), (2, -3), (3, 1)]), None, &[]));
    }

    #[test]
    fn spread_and_big_values() {
        assert_eq!(ln_y_spread(&pts(&[(0, 0)])), 0.0);
        let s = ln_y_spread(&pts(&[(0, 0), (1, 1), (2, 10)]));
        assert!((s - 10f64.ln()).abs() < 1e-12);
        let huge = BigInt::from(1) << 3000u32;
        assert!((ln_big(&huge) - 3000.0 * std::f64::consts::LN_2).abs() < 1e-6);
        let points = vec![
            Point::from_i64(0, 0),
            Point::from_i64(1, 1),
            Point::new(BigInt::from(2), huge),
        ];
        assert!(render(&points, None, &[1]).contains("log-compressed"));
    }

    #[test]
    fn edges_by_class() {
        let c = EdgeColoring::from_fn(2, 2, 3, |s| u32::from(s[0] == 0)).unwrap();
        let svg = render(&pts(&[(0, 0), (1, 5), (2, 1)]), Some(&c), &[0, 1, 2]);
        assert_eq!(svg.matches("<line").count(), 3);
        assert_eq!(svg.matches("class=\"c1\"").count(), 2);
        assert!(svg.contains("<polygon"));
    }

    #[test]
    fn negative_offsets_are_ordered() {
        let p = pts(&[(-5, -7), (0, 0), (9, 2)]);
        assert!(p[0].y.is_negative());
        let svg = render(&p, None, &[]);
        assert!(svg.contains("cx=\"40.00\""));
        assert!(svg.contains("cx=\"760.00\""));
    }
}
