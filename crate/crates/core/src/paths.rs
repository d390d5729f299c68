//! An independent type-A crystal model: Kirillov-Reshetikhin crystals `B^{r,s}` as
//! rectangular semistandard tableaux, tensor products by the signature rule, and
//! enumeration-based counting.
//!
//! Conventions: a tableau's reading word runs through its rows from bottom to top, each
//! row left to right; a path's word is the concatenation of its factors' words in displayed
//! order. For color `a`, letter `a` reads `+` and `a+1` reads `-`; adjacent `-+` pairs
//! cancel, `f_a` changes the rightmost uncancelled `+` and `e_a` the leftmost uncancelled
//! `-`. On `(B^{1,1})^{3}` of type `A_2` this gives `121 -1-> 221` and `121 -2-> 131`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::Weight;
use crate::config::MultiplicityArray;
use crate::crystal::{generate, Crystal, CrystalGraph};
use crate::error::{Error, Result};
use crate::typea::TypeATuple;

/// An `r x s` semistandard tableau; rows weakly increase, columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct RectTableau {
    rows: Vec<Vec<usize>>,
}

impl RectTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || width == 0 || rows.iter().any(|r| r.len() != width) {
            return Err(Error::InvalidTableau(format!("{rows:?} is not a nonempty rectangle")));
        }
        let rows_ok = rows.iter().all(|r| r[0] >= 1 && r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = rows.windows(2).all(|p| p[0].iter().zip(&p[1]).all(|(x, y)| x < y));
        if !rows_ok || !cols_ok {
            return Err(Error::InvalidTableau(format!("{rows:?} is not semistandard")));
        }
        Ok(RectTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].len()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Cell `(row, col)` of reading-word position `k`.
    fn cell(&self, k: usize) -> (usize, usize) {
        let w = self.width();
        (self.height() - 1 - k / w, k % w)
    }
}

impl TryFrom<Vec<Vec<usize>>> for RectTableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(rows)
    }
}

impl From<RectTableau> for Vec<Vec<usize>> {
    fn from(t: RectTableau) -> Self {
        t.rows
    }
}

impl fmt::Display for RectTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() > 9;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

/// All `r x s` semistandard tableaux with entries at most `n`, in increasing order.
pub fn kr_vertices(r: usize, s: usize, n: usize) -> Result<Vec<RectTableau>> {
    if r == 0 || r >= n || s == 0 {
        return Err(Error::IndexOutOfRange(format!("B^{{{r},{s}}} for n = {n}")));
    }
    fn rows_above(s: usize, lo: usize, hi: usize, below: Option<&[usize]>) -> Vec<Vec<usize>> {
        // weakly increasing rows in [lo, hi], each entry strictly above `below`'s entry
        fn rec(
            s: usize,
            hi: usize,
            below: Option<&[usize]>,
            min: usize,
            row: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            let j = row.len();
            if j == s {
                out.push(row.clone());
                return;
            }
            let floor = below.map_or(min, |b| min.max(b[j] + 1));
            for x in floor..=hi {
                row.push(x);
                rec(s, hi, below, x, row, out);
                row.pop();
            }
        }
        let mut out = Vec::new();
        rec(s, hi, below, lo, &mut Vec::new(), &mut out);
        out
    }
    let mut partial: Vec<Vec<Vec<usize>>> = rows_above(s, 1, n, None).into_iter().map(|r| vec![r]).collect();
    for _ in 1..r {
        let mut next = Vec::new();
        for t in &partial {
            for row in rows_above(s, 1, n, t.last().map(Vec::as_slice)) {
                let mut t2 = t.clone();
                t2.push(row);
                next.push(t2);
            }
        }
        partial = next;
    }
    let mut out: Vec<RectTableau> = partial.into_iter().map(|rows| RectTableau { rows }).collect();
    out.sort();
    Ok(out)
}

/// Number of semistandard tableaux of `shape` with entries at most `n`, counted cell by
/// cell.
pub fn ssyt_count(shape: &[usize], n: usize) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fn rec(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let up = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let mut total = 0;
        for x in left.max(up)..=n {
            grid[i][j] = x;
            total += rec(k + 1, cells, grid, n);
        }
        total
    }
    rec(0, &cells, &mut grid, n)
}

/// An element `b_k (x) ... (x) b_1` of a tensor product, factors in displayed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TensorPath(pub Vec<RectTableau>);

impl TensorPath {
    pub fn factors(&self) -> &[RectTableau] {
        &self.0
    }

    pub fn word(&self) -> Vec<usize> {
        self.0.iter().flat_map(RectTableau::reading_word).collect()
    }

    /// Letter counts `(#1, ..., #n)`.
    pub fn content(&self, n: usize) -> TypeATuple {
        let mut c = vec![0; n];
        for x in self.word() {
            c[x - 1] += 1;
        }
        TypeATuple::new(c)
    }
}

/// Factors separated by spaces; `121` style when every factor is a single box.
impl fmt::Display for TensorPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.0.iter().all(|t| t.height() == 1 && t.width() == 1 && t.max_entry() < 10);
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(if single { "" } else { " " }))
    }
}

/// Positions of the uncancelled `+` and `-` letters for color `a`.
fn signature(word: &[usize], a: usize) -> (Vec<usize>, Vec<usize>) {
    let mut minus_stack: Vec<usize> = Vec::new();
    let mut plus = Vec::new();
    for (k, &x) in word.iter().enumerate() {
        if x == a + 1 {
            minus_stack.push(k);
        } else if x == a && minus_stack.pop().is_none() {
            plus.push(k);
        }
    }
    (plus, minus_stack)
}

/// A tensor product of type-`A_{n-1}` Kirillov-Reshetikhin crystals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSpace {
    n: usize,
    /// `(r, s)` per factor, in displayed order.
    shapes: Vec<(usize, usize)>,
}

impl PathSpace {
    pub fn new(n: usize, shapes: Vec<(usize, usize)>) -> Result<Self> {
        for &(r, s) in &shapes {
            if r == 0 || r >= n || s == 0 {
                return Err(Error::IndexOutOfRange(format!("B^{{{r},{s}}} for n = {n}")));
            }
        }
        Ok(PathSpace { n, shapes })
    }

    /// One factor `B^{r,s}` per unit of `L_s^{(r)}`, in increasing `(r, s)` order.
    pub fn from_multiplicities(n: usize, l: &MultiplicityArray) -> Result<Self> {
        let shapes = l.iter().flat_map(|(r, s, m)| std::iter::repeat_n((r, s), m)).collect();
        Self::new(n, shapes)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[(usize, usize)] {
        &self.shapes
    }

    pub fn weight(&self, b: &TensorPath) -> Weight {
        b.content(self.n).to_weight()
    }

    fn locate(&self, b: &TensorPath, mut k: usize) -> (usize, usize, usize) {
        for (i, t) in b.0.iter().enumerate() {
            let len = t.height() * t.width();
            if k < len {
                let (r, c) = t.cell(k);
                return (i, r, c);
            }
            k -= len;
        }
        unreachable!("position inside the word")
    }

    fn replace(&self, b: &TensorPath, k: usize, letter: usize) -> TensorPath {
        let (i, r, c) = self.locate(b, k);
        let mut out = b.clone();
        out.0[i].rows[r][c] = letter;
        out
    }

    pub fn path_f(&self, b: &TensorPath, a: usize) -> Option<TensorPath> {
        let (plus, _) = signature(&b.word(), a);
        plus.last().map(|&k| self.replace(b, k, a + 1))
    }

    pub fn path_e(&self, b: &TensorPath, a: usize) -> Option<TensorPath> {
        let (_, minus) = signature(&b.word(), a);
        minus.first().map(|&k| self.replace(b, k, a))
    }

    /// `(phi_a, eps_a)` from the uncancelled letters.
    pub fn bracket_counts(&self, b: &TensorPath, a: usize) -> (usize, usize) {
        let (plus, minus) = signature(&b.word(), a);
        (plus.len(), minus.len())
    }

    /// Every element of the tensor product.
    pub fn all_paths(&self) -> Result<Vec<TensorPath>> {
        let vertex_sets: Vec<Vec<RectTableau>> =
            self.shapes.iter().map(|&(r, s)| kr_vertices(r, s, self.n)).collect::<Result<_>>()?;
        let mut out = vec![TensorPath(Vec::new())];
        for set in &vertex_sets {
            let mut next = Vec::with_capacity(out.len() * set.len());
            for b in &out {
                for t in set {
                    let mut b2 = b.clone();
                    b2.0.push(t.clone());
                    next.push(b2);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// `P(B, lambda)`: the paths with content `lambda`.
    pub fn enumerate_paths(&self, lambda: &TypeATuple) -> Result<Vec<TensorPath>> {
        if lambda.len() != self.n {
            return Err(Error::WeightLength { expected: self.n, got: lambda.len() });
        }
        Ok(self.all_paths()?.into_iter().filter(|b| &b.content(self.n) == lambda).collect())
    }

    pub fn highest_weight_paths(&self) -> Result<Vec<TensorPath>> {
        Ok(self.all_paths()?.into_iter().filter(|b| self.is_highest_weight(b)).collect())
    }

    pub fn generate_component(&self, seed: &TensorPath, cap: usize) -> Result<CrystalGraph<TensorPath>> {
        generate(self, std::slice::from_ref(seed), cap)
    }
}

impl Crystal for PathSpace {
    type Element = TensorPath;

    fn rank(&self) -> usize {
        self.n - 1
    }

    fn f(&self, x: &TensorPath, a: usize) -> Option<TensorPath> {
        self.path_f(x, a)
    }

    fn e(&self, x: &TensorPath, a: usize) -> Option<TensorPath> {
        self.path_e(x, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::DEFAULT_VERTEX_CAP;

    fn single_boxes(word: &[usize]) -> TensorPath {
        TensorPath(word.iter().map(|&x| RectTableau::new(vec![vec![x]]).unwrap()).collect())
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(kr_vertices(1, 1, 3).unwrap().len(), 3);
        assert_eq!(kr_vertices(2, 2, 4).unwrap().len(), 20);
        assert_eq!(kr_vertices(3, 1, 4).unwrap().len(), 4);
        assert!(kr_vertices(3, 1, 3).is_err());
        for (r, s, n) in [(1, 3, 3), (2, 1, 4), (2, 3, 4), (2, 2, 5), (3, 2, 5)] {
            let shape = vec![s; r];
            assert_eq!(kr_vertices(r, s, n).unwrap().len() as u64, ssyt_count(&shape, n));
        }
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_count(&[2, 1], 3), 8);
        assert_eq!(ssyt_count(&[4], 1), 1);
        assert_eq!(ssyt_count(&[2, 2], 4), 20);
        assert_eq!(ssyt_count(&[], 3), 1);
        assert_eq!(ssyt_count(&[1, 1, 1, 1], 3), 0);
    }

    #[test]
    fn tableau_validation() {
        assert!(RectTableau::new(vec![vec![1, 3], vec![4, 4]]).is_ok());
        assert!(RectTableau::new(vec![vec![1, 3], vec![1, 4]]).is_err());
        assert!(RectTableau::new(vec![vec![3, 1]]).is_err());
        assert!(RectTableau::new(vec![vec![1, 2], vec![3]]).is_err());
        let t = RectTableau::new(vec![vec![1, 3], vec![4, 4]]).unwrap();
        assert_eq!(t.reading_word(), vec![4, 4, 1, 3]);
    }

    #[test]
    fn golden_component_edges() {
        let space = PathSpace::new(3, vec![(1, 1); 3]).unwrap();
        let top = single_boxes(&[1, 2, 1]);
        assert!(space.is_highest_weight(&top));
        let g = space.generate_component(&top, DEFAULT_VERTEX_CAP).unwrap();
        let mut edges: Vec<(String, usize, String)> =
            g.edge_triples().map(|(x, a, y)| (x.to_string(), a, y.to_string())).collect();
        edges.sort();
        let mut expected: Vec<(String, usize, String)> = [
            ("121", 1, "221"),
            ("121", 2, "131"),
            ("221", 2, "231"),
            ("231", 2, "331"),
            ("331", 1, "332"),
            ("131", 1, "132"),
            ("132", 1, "232"),
            ("232", 2, "332"),
        ]
        .iter()
        .map(|&(x, a, y)| (x.to_string(), a, y.to_string()))
        .collect();
        expected.sort();
        assert_eq!(edges, expected);
    }

    #[test]
    fn bracket_counts_match_walks() {
        let space = PathSpace::new(3, vec![(1, 2), (2, 1), (1, 1)]).unwrap();
        for b in space.all_paths().unwrap() {
            for a in 1..=2 {
                let (phi, eps) = space.bracket_counts(&b, a);
                assert_eq!(phi, space.phi_by_walk(&b, a));
                assert_eq!(eps, space.eps_by_walk(&b, a));
                if let Some(y) = space.path_f(&b, a) {
                    assert_eq!(space.path_e(&y, a).as_ref(), Some(&b));
                }
            }
        }
    }

    #[test]
    fn enumerate_paths_examples() {
        let space = PathSpace::new(3, vec![(1, 1); 3]).unwrap();
        assert_eq!(space.enumerate_paths(&TypeATuple::new(vec![1, 1, 1])).unwrap().len(), 6);
        let b22 = PathSpace::new(4, vec![(2, 2)]).unwrap();
        let paths = b22.enumerate_paths(&TypeATuple::new(vec![1, 0, 1, 2])).unwrap();
        let target = TensorPath(vec![RectTableau::new(vec![vec![1, 3], vec![4, 4]]).unwrap()]);
        assert!(paths.contains(&target));
    }

    #[test]
    fn serde_rows() {
        let t = RectTableau::new(vec![vec![1, 3], vec![4, 4]]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[[1,3],[4,4]]");
        assert!(serde_json::from_str::<RectTableau>("[[3,1]]").is_err());
    }
}
