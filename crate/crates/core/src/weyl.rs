//! Breadth-first enumeration of a finite Weyl group.
//!
//! Elements are integer matrices acting on fundamental-weight coordinates
//! (column `j` is the image of `x_j`). The search multiplies on the right by
//! simple reflections, so the first word found for an element is reduced and
//! its BFS depth is the Coxeter length.

use std::collections::HashMap;

use crate::demazure::OperatorContext;
use crate::error::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    /// Row-major `n x n`.
    pub matrix: Vec<i64>,
    pub word: Vec<usize>,
    pub length: usize,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        Self {
            matrix,
            word: Vec::new(),
            length: 0,
        }
    }

    pub fn rank(&self) -> usize {
        (self.matrix.len() as f64).sqrt() as usize
    }

    /// Column `j` (1-based): image of `x_j`.
    pub fn column(&self, j: usize) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|r| self.matrix[r * n + (j - 1)]).collect()
    }
}

/// Matrix of `s_i`: the identity with column `i` replaced by `y_i`.
pub fn reflection_matrix(ctx: &OperatorContext, i: usize) -> Vec<i64> {
    let n = ctx.nvars();
    let mut m = WeylElement::identity(n).matrix;
    let row = ctx.cartan().row(i);
    for r in 0..n {
        let y_coeff = if r + 1 == i { 1 - row[r] } else { -row[r] };
        m[r * n + (i - 1)] = y_coeff;
    }
    m
}

pub fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

/// Elements grouped by length.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub elements: Vec<WeylElement>,
    level_starts: Vec<usize>,
    index: HashMap<Vec<i64>, usize>,
    /// True when the enumeration was not truncated by a length limit.
    pub complete: bool,
}

impl WeylGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_length(&self) -> usize {
        self.level_starts.len().saturating_sub(2)
    }

    pub fn of_length(&self, d: usize) -> &[WeylElement] {
        if d + 1 >= self.level_starts.len() {
            return &[];
        }
        &self.elements[self.level_starts[d]..self.level_starts[d + 1]]
    }

    pub fn find(&self, matrix: &[i64]) -> Option<&WeylElement> {
        self.index.get(matrix).map(|&k| &self.elements[k])
    }

    /// The longest element, when the enumeration is complete.
    pub fn longest(&self) -> Option<&WeylElement> {
        let top = self.of_length(self.max_length());
        (self.complete && top.len() == 1).then(|| &top[0])
    }
}

/// BFS closure under right multiplication by the simple reflections,
/// stopping at `max_length` if given.
pub fn enumerate(
    ctx: &OperatorContext,
    max_length: Option<usize>,
    cap: usize,
) -> Result<WeylGroup> {
    let n = ctx.nvars();
    let gens: Vec<Vec<i64>> = (1..=n).map(|i| reflection_matrix(ctx, i)).collect();
    let identity = WeylElement::identity(n);
    let mut index = HashMap::from([(identity.matrix.clone(), 0usize)]);
    let mut elements = vec![identity];
    let mut level_starts = vec![0, 1];
    let complete = loop {
        let depth = level_starts.len() - 2;
        let (lo, hi) = (level_starts[depth], level_starts[depth + 1]);
        if max_length.is_some_and(|m| depth >= m) {
            let grows = (lo..hi).any(|k| {
                gens.iter()
                    .any(|s| !index.contains_key(&mat_mul(&elements[k].matrix, s, n)))
            });
            break !grows;
        }
        for k in lo..hi {
            for (g, s) in gens.iter().enumerate() {
                let m = mat_mul(&elements[k].matrix, s, n);
                if index.contains_key(&m) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::ResourceCap { cap });
                }
                let mut word = elements[k].word.clone();
                word.push(g + 1);
                index.insert(m.clone(), elements.len());
                elements.push(WeylElement {
                    matrix: m,
                    word,
                    length: depth + 1,
                });
            }
        }
        if elements.len() == hi {
            break true;
        }
        level_starts.push(elements.len());
    };
    Ok(WeylGroup {
        elements,
        level_starts,
        index,
        complete,
    })
}

pub fn elements_of_length(ctx: &OperatorContext, d: usize, cap: usize) -> Result<Vec<WeylElement>> {
    Ok(enumerate(ctx, Some(d), cap)?.of_length(d).to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::Polynomial;
    use crate::root_system::{DynkinDiagram, SimpleType};

    fn ctx(t: &str) -> OperatorContext {
        OperatorContext::new(DynkinDiagram::simple(t.parse::<SimpleType>().unwrap()).cartan())
    }

    #[test]
    fn group_orders() {
        for (t, order) in [
            ("A1", 2),
            ("A3", 24),
            ("B3", 48),
            ("C3", 48),
            ("G2", 12),
            ("D4", 192),
            ("B4", 384),
            ("F4", 1152),
        ] {
            let g = enumerate(&ctx(t), None, DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(g.len(), order, "{t}");
            let ty: SimpleType = t.parse().unwrap();
            assert_eq!(g.len() as u128, ty.weyl_order());
            let w0 = g.longest().expect("unique longest element");
            assert_eq!(w0.length, ty.positive_root_count());
        }
    }

    #[test]
    fn by_length() {
        let c = ctx("C3");
        assert_eq!(elements_of_length(&c, 9, DEFAULT_GROUP_CAP).unwrap().len(), 1);
        assert_eq!(elements_of_length(&c, 10, DEFAULT_GROUP_CAP).unwrap().len(), 0);
        let e = elements_of_length(&c, 0, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(e, vec![WeylElement::identity(3)]);
        let a1 = enumerate(&ctx("A1"), None, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(a1.elements[1].word, vec![1]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = enumerate(&ctx("E6"), None, 1000).unwrap_err();
        assert_eq!(err, Error::ResourceCap { cap: 1000 });
    }

    #[test]
    fn truncated_enumeration_is_not_complete() {
        let g = enumerate(&ctx("C3"), Some(4), DEFAULT_GROUP_CAP).unwrap();
        assert!(!g.complete);
        assert!(g.longest().is_none());
        let g = enumerate(&ctx("C3"), Some(9), DEFAULT_GROUP_CAP).unwrap();
        assert!(g.complete);
        assert_eq!(g.len(), 48);
    }

    #[test]
    fn words_reproduce_matrices() {
        let c = ctx("B3");
        let g = enumerate(&c, None, DEFAULT_GROUP_CAP).unwrap();
        for w in &g.elements {
            for j in 1..=3 {
                let img = c.reflect_word(&w.word, &Polynomial::var(3, j)).unwrap();
                assert_eq!(img, Polynomial::linear(&w.column(j)));
            }
        }
    }

    #[test]
    fn lengths_are_inversion_invariant_and_step_by_one() {
        let c = ctx("C3");
        let g = enumerate(&c, None, DEFAULT_GROUP_CAP).unwrap();
        let gens: Vec<_> = (1..=3).map(|i| reflection_matrix(&c, i)).collect();
        for w in &g.elements {
            let inv_word: Vec<usize> = w.word.iter().rev().copied().collect();
            let mut inv = WeylElement::identity(3).matrix;
            for &i in &inv_word {
                inv = mat_mul(&inv, &gens[i - 1], 3);
            }
            assert_eq!(mat_mul(&w.matrix, &inv, 3), WeylElement::identity(3).matrix);
            assert_eq!(g.find(&inv).unwrap().length, w.length);
            for s in &gens {
                let l = g.find(&mat_mul(&w.matrix, s, 3)).unwrap().length;
                assert!(l + 1 == w.length || l == w.length + 1);
            }
        }
    }
}
