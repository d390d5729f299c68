//! Type-A specifics: the weight tuple `lambda`, the lower-bound tableaux `A(lambda')`,
//! extended rigged configurations and the fermionic formula for `M(L, lambda)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{Family, Weight};
use crate::config::{bounded_decreasing_tuples, Configuration, Shape};
use crate::crystal::RcSet;
use crate::error::{Error, Result};
use crate::laurent::{q_binomial, LaurentPolynomial};
use crate::rigged::RiggedConfiguration;
use crate::space::{riggings_from_blocks, RcSpace};

/// Above this many lower-bound tableaux the fermionic formula logs a cost warning.
pub const DEFAULT_TABLEAU_WARNING: usize = 64;

/// Largest `|A(lambda')|` accepted by the literal subset sum.
pub const LITERAL_SUBSET_LIMIT: usize = 20;

/// `lambda = (lambda_1, ..., lambda_n)` for type `A_{n-1}`, with
/// `Lambda = sum_a (lambda_a - lambda_{a+1}) Lambda_a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TypeATuple(pub Vec<usize>);

impl TypeATuple {
    pub fn new(parts: Vec<usize>) -> Self {
        TypeATuple(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `n`, one more than the rank.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn to_weight(&self) -> Weight {
        Weight(self.0.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect())
    }

    /// The unique tuple with `|lambda| = boxes` mapping to `weight`, if it is nonnegative.
    pub fn from_weight(weight: &Weight, boxes: usize) -> Result<Self> {
        let n = weight.len() + 1;
        // lambda_a = lambda_n + sum_{k >= a} Lambda_k, so |lambda| = n lambda_n + sum_k k Lambda_k
        let graded: i64 = weight.coords().iter().enumerate().map(|(k, &c)| (k as i64 + 1) * c).sum();
        let rest = boxes as i64 - graded;
        if rest % n as i64 != 0 {
            return Err(Error::WeightMismatch(format!("no {n}-tuple of size {boxes} has weight {weight}")));
        }
        let mut parts = vec![rest / n as i64; n];
        for a in (0..n - 1).rev() {
            parts[a] = parts[a + 1] + weight.coords()[a];
        }
        if parts.iter().any(|&x| x < 0) {
            return Err(Error::WeightMismatch(format!(
                "weight {weight} with {boxes} boxes needs negative entries"
            )));
        }
        Ok(TypeATuple(parts.into_iter().map(|x| x as usize).collect()))
    }

    /// Column lengths `c_0, c_1, ..., c_{n-1}` of `lambda'`, where
    /// `c_k = lambda_{k+1} + ... + lambda_n` for `k >= 1` and `c_0 = c_1`.
    pub fn column_lengths(&self) -> Vec<usize> {
        let n = self.len();
        let mut c: Vec<usize> = (0..n).map(|k| if k == 0 { 0 } else { self.0[k..].iter().sum() }).collect();
        if n > 1 {
            c[0] = c[1];
        }
        c
    }

    /// `(lambda_n, lambda_1, ..., lambda_{n-1})`.
    pub fn rotate(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_right(1);
        TypeATuple(v)
    }

    pub fn rotate_inverse(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_left(1);
        TypeATuple(v)
    }
}

impl fmt::Display for TypeATuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// An element of `A(lambda')`: columns `1..n-1`, each strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LowerBoundTableau {
    columns: Vec<Vec<usize>>,
}

impl LowerBoundTableau {
    /// Checks strict decrease and positivity only; membership in a particular
    /// `A(lambda')` is checked by [`LowerBoundTableau::fits`].
    pub fn new(columns: Vec<Vec<usize>>) -> Result<Self> {
        for (k, col) in columns.iter().enumerate() {
            if col.contains(&0) || col.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "column {} is not a strictly decreasing positive column: {col:?}",
                    k + 1
                )));
            }
        }
        Ok(LowerBoundTableau { columns })
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column `k` (1-based); empty beyond the last column.
    pub fn column(&self, k: usize) -> &[usize] {
        self.columns.get(k - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `true` iff the tableau lies in `A(lambda')`.
    pub fn fits(&self, lambda: &TypeATuple) -> bool {
        let c = lambda.column_lengths();
        self.columns.len() + 1 == lambda.len()
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(k, col)| col.len() == c[k + 1] && col.iter().all(|&x| x <= c[k]))
    }

    /// `M_i^{(a)}(t) = -#{entries of column a that are <= i} + #{entries of column a+1
    /// that are <= i}`, for `1 <= a <= n-1` and `i >= 1`.
    pub fn lower_bound(&self, a: usize, i: usize) -> Result<i64> {
        if a == 0 || a > self.columns.len() || i == 0 {
            return Err(Error::IndexOutOfRange(format!(
                "lower bound M_{i}^({a}) of a tableau with {} columns",
                self.columns.len()
            )));
        }
        let below = |col: &[usize]| col.iter().filter(|&&x| x <= i).count() as i64;
        Ok(below(self.column(a + 1)) - below(self.column(a)))
    }

    fn bound(&self, a: usize, i: usize) -> i64 {
        self.lower_bound(a, i).expect("index checked by caller")
    }

    /// `t_{j,k}`, 1-based.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.columns.get(col - 1)?.get(row - 1).copied()
    }

    pub fn rows_weakly_decreasing(&self) -> bool {
        self.columns.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(right, left)| right <= left))
    }

    /// `M_{j+1}^{(a)} = M_j^{(a)} - [j+1 in column a] + [j+1 in column a+1]` for all
    /// `1 <= j < limit`.
    pub fn satisfies_recurrence(&self, limit: usize) -> bool {
        (1..=self.columns.len()).all(|a| {
            (1..limit).all(|j| {
                let step =
                    self.column(a + 1).contains(&(j + 1)) as i64 - self.column(a).contains(&(j + 1)) as i64;
                self.bound(a, j + 1) == self.bound(a, j) + step
            })
        })
    }
}

/// Rows top to bottom separated by `/`.
impl fmt::Display for LowerBoundTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let height = self.columns.first().map_or(0, Vec::len);
        let wide = self.columns.iter().flatten().any(|&x| x > 9);
        let rows: Vec<String> = (0..height)
            .map(|j| {
                let cells: Vec<String> =
                    self.columns.iter().filter_map(|c| c.get(j)).map(|x| x.to_string()).collect();
                cells.join(if wide { "," } else { "" })
            })
            .collect();
        if rows.is_empty() {
            return f.write_str("()");
        }
        f.write_str(&rows.join("/"))
    }
}

/// Strictly decreasing `size`-subsets of `{1..max}`, decreasing lexicographically.
fn decreasing_columns(size: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(size: usize, top: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        let need = size - prefix.len();
        for x in (need..=top).rev() {
            prefix.push(x);
            rec(size, x - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(size, max, &mut Vec::new(), &mut out);
    out
}

/// `A(lambda')`, ordered with the last column varying slowest and each column running
/// through its fillings in decreasing lexicographic order.
pub fn enumerate_lower_bound_tableaux(lambda: &TypeATuple) -> Vec<LowerBoundTableau> {
    let n = lambda.len();
    if n < 2 {
        return vec![LowerBoundTableau { columns: Vec::new() }];
    }
    let c = lambda.column_lengths();
    let choices: Vec<Vec<Vec<usize>>> = (1..n).map(|k| decreasing_columns(c[k], c[k - 1])).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n - 1];
    if choices.iter().any(Vec::is_empty) {
        return out;
    }
    loop {
        out.push(LowerBoundTableau {
            columns: idx.iter().enumerate().map(|(k, &j)| choices[k][j].clone()).collect(),
        });
        let mut k = 0;
        while k < idx.len() && idx[k] + 1 == choices[k].len() {
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            return out;
        }
        idx[k] += 1;
    }
}

/// `M <= mu_m <= ... <= mu_1 <= p` with `m` parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasipartitionSpec {
    pub lower: i64,
    pub upper: i64,
    pub parts: usize,
}

impl QuasipartitionSpec {
    pub fn is_empty(&self) -> bool {
        self.parts > 0 && self.upper < self.lower
    }

    pub fn contains(&self, labels: &[i64]) -> bool {
        labels.len() == self.parts
            && labels.windows(2).all(|w| w[0] >= w[1])
            && labels.iter().all(|&x| self.lower <= x && x <= self.upper)
    }

    pub fn enumerate(&self) -> Vec<Vec<i64>> {
        bounded_decreasing_tuples(self.parts, self.lower, self.upper)
    }

    /// `sum_mu q^{|mu|} = q^{m M} [m + p - M choose m]`.
    pub fn generating_function(&self) -> LaurentPolynomial {
        q_binomial(self.parts, self.upper - self.lower).shift(self.parts as i64 * self.lower)
    }
}

/// A rigged-configuration space of type `A_{n-1}`.
#[derive(Clone, Debug)]
pub struct TypeASpace {
    space: RcSpace,
}

impl TypeASpace {
    pub fn new(space: RcSpace) -> Result<Self> {
        if space.algebra().family() != Family::A {
            return Err(Error::NotTypeA(space.algebra().to_string()));
        }
        Ok(TypeASpace { space })
    }

    pub fn space(&self) -> &RcSpace {
        &self.space
    }

    /// `n` for type `A_{n-1}`.
    pub fn n(&self) -> usize {
        self.space.rank() + 1
    }

    /// Number of boxes of the paths, `sum r s L_s^{(r)}`.
    pub fn boxes(&self) -> usize {
        self.space.multiplicities().iter().map(|(a, i, m)| a * i * m).sum()
    }

    /// The tuple of weight `weight` normalized to `|lambda| = boxes()`.
    pub fn tuple_for(&self, weight: &Weight) -> Result<TypeATuple> {
        TypeATuple::from_weight(weight, self.boxes())
    }

    /// Checks that `lambda` has the right length and returns its weight.
    pub fn check_tuple(&self, lambda: &TypeATuple) -> Result<Weight> {
        if lambda.len() != self.n() {
            return Err(Error::WeightLength { expected: self.n(), got: lambda.len() });
        }
        Ok(lambda.to_weight())
    }

    /// As [`TypeASpace::check_tuple`], additionally requiring `|lambda| = boxes()`.
    pub fn check_normalized(&self, lambda: &TypeATuple) -> Result<Weight> {
        let weight = self.check_tuple(lambda)?;
        if lambda.total() != self.boxes() {
            return Err(Error::WeightMismatch(format!(
                "lambda = {lambda} has {} boxes but the paths have {}",
                lambda.total(),
                self.boxes()
            )));
        }
        Ok(weight)
    }

    /// Every string of `rc` as `(node, length, label, vacancy)`.
    fn strings_with_vacancies(&self, rc: &RiggedConfiguration) -> Vec<(usize, usize, i64, i64)> {
        let mut out = Vec::new();
        for a in self.space.algebra().nodes() {
            for s in rc.strings(a) {
                out.push((a, s.length, s.label, self.space.vacancy(rc, a, s.length)));
            }
        }
        out
    }

    /// Witnesses `t in A(lambda')` with `M_i^{(a)}(t) <= x <= p_i^{(a)}` for every string,
    /// in enumeration order.
    pub fn extended_witnesses(
        &self,
        lambda: &TypeATuple,
        rc: &RiggedConfiguration,
    ) -> Result<Vec<LowerBoundTableau>> {
        let weight = self.check_tuple(lambda)?;
        if rc.rank() != self.space.rank() || !rc.is_canonical() {
            return Err(Error::ShapeMismatch { expected: self.space.rank(), got: rc.rank() });
        }
        if self.space.weight(rc) != weight {
            return Err(Error::WeightMismatch(format!(
                "configuration has weight {}, not {weight}",
                self.space.weight(rc)
            )));
        }
        let strings = self.strings_with_vacancies(rc);
        if strings.iter().any(|&(_, _, x, p)| x > p) {
            return Ok(Vec::new());
        }
        Ok(enumerate_lower_bound_tableaux(lambda)
            .into_iter()
            .filter(|t| strings.iter().all(|&(a, i, x, _)| t.bound(a, i) <= x))
            .collect())
    }

    /// Membership in the extended set, with the first witness tableau.
    pub fn is_extended_rc(
        &self,
        lambda: &TypeATuple,
        rc: &RiggedConfiguration,
    ) -> Result<Option<LowerBoundTableau>> {
        Ok(self.extended_witnesses(lambda, rc)?.into_iter().next())
    }

    /// The extended set for `lambda`, enumerated directly from the lower bounds.
    pub fn extended_rcs(&self, lambda: &TypeATuple) -> Result<BTreeSet<RiggedConfiguration>> {
        let weight = self.check_tuple(lambda)?;
        let tableaux = enumerate_lower_bound_tableaux(lambda);
        let mut out = BTreeSet::new();
        for nu in self.space.enumerate_configs(&weight)? {
            for t in &tableaux {
                let mut blocks = Vec::new();
                for a in self.space.algebra().nodes() {
                    for (i, m) in nu.part_counts(a).into_iter().rev() {
                        let spec = QuasipartitionSpec {
                            lower: t.bound(a, i),
                            upper: self.space.vacancy(&nu, a, i),
                            parts: m,
                        };
                        blocks.push((a, i, spec.enumerate()));
                    }
                }
                out.extend(riggings_from_blocks(self.space.rank(), &blocks));
            }
        }
        Ok(out)
    }

    /// Lower-bound vector of `t`, indexed by `(a - 1) * width + (i - 1)` for
    /// `i <= width`, beyond which bounds are constant.
    fn bound_vector(t: &LowerBoundTableau, rank: usize, width: usize) -> Vec<i64> {
        let mut v = Vec::with_capacity(rank * width);
        for a in 1..=rank {
            for i in 1..=width {
                v.push(t.bound(a, i));
            }
        }
        v
    }

    /// Sum over `nu in C(L, lambda)` of the fermionic summand for fixed lower bounds.
    fn summand(&self, configs: &[Configuration], bounds: &[i64], width: usize) -> LaurentPolynomial {
        let mut total = LaurentPolynomial::zero();
        for nu in configs {
            let mut term = LaurentPolynomial::monomial(self.space.config_cocharge(nu), 1);
            for a in self.space.algebra().nodes() {
                for (i, m) in nu.part_counts(a) {
                    let spec = QuasipartitionSpec {
                        lower: bounds[(a - 1) * width + i.min(width) - 1],
                        upper: self.space.vacancy(nu, a, i),
                        parts: m,
                    };
                    term = &term * &spec.generating_function();
                    if term.is_zero() {
                        break;
                    }
                }
            }
            total += &term;
        }
        total
    }

    /// Signed counts `sum (-1)^{|S|+1}` over nonempty `S` subset of `A(lambda')`, grouped by
    /// the entrywise maximum of the bound vectors in `S`.
    fn grouped_maxima(vectors: &[Vec<i64>]) -> BTreeMap<Vec<i64>, i64> {
        let mut weights: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for v in vectors {
            let mut next = weights.clone();
            *next.entry(v.clone()).or_insert(0) += 1;
            for (u, w) in &weights {
                let joined: Vec<i64> = u.iter().zip(v).map(|(x, y)| *x.max(y)).collect();
                *next.entry(joined).or_insert(0) -= w;
            }
            next.retain(|_, w| *w != 0);
            weights = next;
        }
        weights
    }

    /// `M(L, lambda)` by the inclusion-exclusion fermionic formula, with subsets of equal
    /// maximal bounds grouped together.
    pub fn fermionic_m(&self, lambda: &TypeATuple) -> Result<LaurentPolynomial> {
        self.fermionic_m_with_warning(lambda, DEFAULT_TABLEAU_WARNING)
    }

    pub fn fermionic_m_with_warning(
        &self,
        lambda: &TypeATuple,
        warn_above: usize,
    ) -> Result<LaurentPolynomial> {
        let weight = self.check_tuple(lambda)?;
        let tableaux = enumerate_lower_bound_tableaux(lambda);
        if tableaux.len() > warn_above {
            log::warn!(
                "A(lambda') has {} tableaux for lambda = {lambda}; the fermionic sum may be slow",
                tableaux.len()
            );
        }
        let configs = self.space.enumerate_configs(&weight)?;
        let width = lambda.column_lengths()[0].max(1);
        let rank = self.space.rank();
        let vectors: Vec<Vec<i64>> = tableaux.iter().map(|t| Self::bound_vector(t, rank, width)).collect();
        let mut total = LaurentPolynomial::zero();
        for (bounds, sign) in Self::grouped_maxima(&vectors) {
            total += &self.summand(&configs, &bounds, width).scale(sign);
        }
        Ok(total)
    }

    /// The fermionic formula summed literally over all `2^|A| - 1` subsets; a slow
    /// reference for [`TypeASpace::fermionic_m`].
    pub fn fermionic_m_literal(&self, lambda: &TypeATuple) -> Result<LaurentPolynomial> {
        let weight = self.check_tuple(lambda)?;
        let tableaux = enumerate_lower_bound_tableaux(lambda);
        if tableaux.len() > LITERAL_SUBSET_LIMIT {
            return Err(Error::VertexCapExceeded { cap: LITERAL_SUBSET_LIMIT });
        }
        let configs = self.space.enumerate_configs(&weight)?;
        let width = lambda.column_lengths()[0].max(1);
        let rank = self.space.rank();
        let vectors: Vec<Vec<i64>> = tableaux.iter().map(|t| Self::bound_vector(t, rank, width)).collect();
        let mut total = LaurentPolynomial::zero();
        for mask in 1u32..(1u32 << vectors.len()) {
            let mut joined = vec![i64::MIN; rank * width];
            for (k, v) in vectors.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    for (x, y) in joined.iter_mut().zip(v) {
                        *x = (*x).max(*y);
                    }
                }
            }
            let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
            total += &self.summand(&configs, &joined, width).scale(sign);
        }
        Ok(total)
    }

    /// `M(L, lambda) = sum q^{cc}` over the weight fiber of a generated `RC(L)`.
    pub fn direct_m(&self, set: &RcSet, lambda: &TypeATuple) -> Result<LaurentPolynomial> {
        let weight = self.check_tuple(lambda)?;
        let mut total = LaurentPolynomial::zero();
        for &k in set.fibers.get(&weight).map(Vec::as_slice).unwrap_or(&[]) {
            total.add_term(set.cocharges[k], 1);
        }
        Ok(total)
    }

    /// Normalized tuples of every weight occurring in `set`.
    pub fn fiber_tuples(&self, set: &RcSet) -> Result<Vec<TypeATuple>> {
        set.fibers.keys().map(|w| self.tuple_for(w)).collect()
    }
}

/// `prod_k binom(c_{k-1}, c_k)`.
pub fn lower_bound_tableau_count(lambda: &TypeATuple) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        if k > n {
            return 0;
        }
        (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
    }
    let c = lambda.column_lengths();
    (1..lambda.len()).map(|k| binom(c[k - 1], c[k])).product()
}
