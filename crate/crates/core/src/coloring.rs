//! Colorings of the ℓ-subsets of a vertex range.

use itertools::Itertools;

use crate::error::ColoringError;

pub type Color = u32;

/// Largest number of subsets a dense coloring will store.
pub const MAX_DENSE_SUBSETS: u128 = 1 << 28;

/// A total coloring of the `arity`-subsets of `0..vertex_count()`.
///
/// `color` is only defined on strictly increasing tuples of in-range vertices.
pub trait HyperColoring {
    fn arity(&self) -> usize;
    fn color_count(&self) -> u32;
    fn vertex_count(&self) -> usize;
    fn color(&self, subset: &[usize]) -> Color;
}

impl<C: HyperColoring + ?Sized> HyperColoring for &C {
    fn arity(&self) -> usize {
        (**self).arity()
    }
    fn color_count(&self) -> u32 {
        (**self).color_count()
    }
    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
    fn color(&self, subset: &[usize]) -> Color {
        (**self).color(subset)
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dense coloring stored in colex rank order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    arity: usize,
    colors: u32,
    vertices: usize,
    // binom[v * (arity + 1) + k] = C(v, k)
    binom: Vec<usize>,
    data: Vec<Color>,
}

impl EdgeColoring {
    /// Builds a coloring by evaluating `f` on every subset.
    pub fn from_fn(
        arity: usize,
        colors: u32,
        vertices: usize,
        mut f: impl FnMut(&[usize]) -> Color,
    ) -> Result<Self, ColoringError> {
        let mut c = Self::uniform(arity, colors, vertices, 0)?;
        for subset in (0..vertices).combinations(arity) {
            let color = f(&subset);
            if color >= colors {
                return Err(ColoringError::ColorOutOfRange { color, colors });
            }
            let r = c.rank(&subset);
            c.data[r] = color;
        }
        Ok(c)
    }

    pub fn uniform(arity: usize, colors: u32, vertices: usize, color: Color) -> Result<Self, ColoringError> {
        if arity < 2 {
            return Err(ColoringError::BadArity { arity, vertices });
        }
        if colors == 0 {
            return Err(ColoringError::NoColors);
        }
        if color >= colors {
            return Err(ColoringError::ColorOutOfRange { color, colors });
        }
        let total = binomial(vertices as u128, arity as u128);
        if total > MAX_DENSE_SUBSETS {
            return Err(ColoringError::TooLarge { arity, subsets: total });
        }
        let mut binom = vec![0usize; (vertices + 1) * (arity + 1)];
        for v in 0..=vertices {
            for k in 0..=arity {
                binom[v * (arity + 1) + k] = binomial(v as u128, k as u128).min(usize::MAX as u128) as usize;
            }
        }
        Ok(EdgeColoring {
            arity,
            colors,
            vertices,
            binom,
            data: vec![color; total as usize],
        })
    }

    /// Copies any coloring into dense storage.
    pub fn materialize(source: &impl HyperColoring) -> Result<Self, ColoringError> {
        Self::from_fn(source.arity(), source.color_count(), source.vertex_count(), |s| {
            source.color(s)
        })
    }

    /// Number of subsets, i.e. `C(vertices, arity)`.
    pub fn subset_count(&self) -> usize {
        self.data.len()
    }

    #[inline]
    fn rank(&self, subset: &[usize]) -> usize {
        let w = self.arity + 1;
        subset.iter().enumerate().map(|(j, &v)| self.binom[v * w + j + 1]).sum()
    }

    fn check_subset(&self, subset: &[usize]) -> Result<(), ColoringError> {
        let ok = subset.len() == self.arity
            && subset.windows(2).all(|w| w[0] < w[1])
            && subset.last().is_none_or(|&v| v < self.vertices);
        if ok {
            Ok(())
        } else {
            Err(ColoringError::BadSubset(subset.to_vec()))
        }
    }

    pub fn try_color(&self, subset: &[usize]) -> Result<Color, ColoringError> {
        self.check_subset(subset)?;
        Ok(self.data[self.rank(subset)])
    }

    pub fn set(&mut self, subset: &[usize], color: Color) -> Result<(), ColoringError> {
        self.check_subset(subset)?;
        if color >= self.colors {
            return Err(ColoringError::ColorOutOfRange {
                color,
                colors: self.colors,
            });
        }
        let r = self.rank(subset);
        self.data[r] = color;
        Ok(())
    }

    /// Color of the pair `{i, j}` in either order. Only valid for arity 2.
    #[inline]
    pub fn pair(&self, i: usize, j: usize) -> Color {
        debug_assert_eq!(self.arity, 2);
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        self.data[b * (b - 1) / 2 + a]
    }

    /// Subsets with their colors, in lexicographic subset order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, Color)> + '_ {
        (0..self.vertices).combinations(self.arity).map(move |s| {
            let c = self.data[self.rank(&s)];
            (s, c)
        })
    }

    /// Sorted list of colors that actually occur.
    pub fn colors_used(&self) -> Vec<Color> {
        let mut seen = vec![false; self.colors as usize];
        for &c in &self.data {
            seen[c as usize] = true;
        }
        (0..self.colors).filter(|&c| seen[c as usize]).collect()
    }

    /// Reindexes vertices: new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self, ColoringError> {
        if order.len() != self.vertices {
            return Err(ColoringError::NotTotal {
                expected: self.vertices,
                got: order.len(),
            });
        }
        let mut buf = vec![0usize; self.arity];
        Self::from_fn(self.arity, self.colors, self.vertices, |s| {
            for (slot, &v) in buf.iter_mut().zip(s) {
                *slot = order[v];
            }
            buf.sort_unstable();
            self.data[self.rank(&buf)]
        })
    }
}

impl HyperColoring for EdgeColoring {
    fn arity(&self) -> usize {
        self.arity
    }
    fn color_count(&self) -> u32 {
        self.colors
    }
    fn vertex_count(&self) -> usize {
        self.vertices
    }
    #[inline]
    fn color(&self, subset: &[usize]) -> Color {
        self.data[self.rank(subset)]
    }
}

/// Whether all `arity`-subsets of `vertices` (given ascending) share one color.
pub fn is_monochromatic(coloring: &impl HyperColoring, vertices: &[usize]) -> Option<Color> {
    let mut it = vertices.iter().copied().combinations(coloring.arity());
    let first = match it.next() {
        Some(s) => coloring.color(&s),
        None => return Some(0),
    };
    it.all(|s| coloring.color(&s) == first).then_some(first)
}
