//! Multiplicity arrays, configurations and partition enumeration.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One entry `L_s^{(r)} = multiplicity` of a multiplicity array, i.e. `multiplicity`
/// tensor factors `B^{r,s}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KrFactor {
    pub node: usize,
    pub width: usize,
    pub multiplicity: usize,
}

/// The multiplicity array `L = (L_i^{(a)})`, a finitely supported map
/// `(node, width) -> count` with only positive counts stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiplicityArray {
    entries: BTreeMap<(usize, usize), usize>,
}

impl MultiplicityArray {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an array from `(node, width, multiplicity)` triples, summing repeats.
    pub fn from_triples<I>(triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut l = Self::new();
        for (node, width, mult) in triples {
            l.add(node, width, mult)?;
        }
        Ok(l)
    }

    pub fn from_factors(factors: &[KrFactor]) -> Result<Self> {
        Self::from_triples(factors.iter().map(|f| (f.node, f.width, f.multiplicity)))
    }

    pub fn add(&mut self, node: usize, width: usize, mult: usize) -> Result<()> {
        if width == 0 {
            return Err(Error::ZeroWidth { node, width });
        }
        if node == 0 {
            return Err(Error::NodeOutOfRange { node, rank: 0 });
        }
        if mult > 0 {
            *self.entries.entry((node, width)).or_insert(0) += mult;
        }
        Ok(())
    }

    /// `L_i^{(a)}`, zero outside the support.
    pub fn get(&self, a: usize, i: usize) -> usize {
        self.entries.get(&(a, i)).copied().unwrap_or(0)
    }

    /// `(node, width, count)` triples in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.entries.iter().map(|(&(a, i), &m)| (a, i, m))
    }

    /// `(width, count)` pairs at one node.
    pub fn at_node(&self, a: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.range((a, 0)..(a + 1, 0)).map(|(&(_, i), &m)| (i, m))
    }

    pub fn max_node(&self) -> usize {
        self.entries.keys().map(|&(a, _)| a).max().unwrap_or(0)
    }

    pub fn max_width(&self) -> usize {
        self.entries.keys().map(|&(_, i)| i).max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total number of tensor factors.
    pub fn num_factors(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn factors(&self) -> Vec<KrFactor> {
        self.iter().map(|(node, width, multiplicity)| KrFactor { node, width, multiplicity }).collect()
    }
}

impl fmt::Display for MultiplicityArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.iter().map(|(a, i, m)| format!("L_{i}^({a})={m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Read access to the underlying sequence of partitions of a configuration or a rigged
/// configuration. Nodes are 1-based.
pub trait Shape {
    fn rank(&self) -> usize;

    /// `(length, multiplicity)` pairs of the partition at node `a`, multiplicities positive.
    fn part_counts(&self, a: usize) -> Vec<(usize, usize)>;

    /// `m_i^{(a)}`.
    fn multiplicity(&self, a: usize, i: usize) -> usize {
        self.part_counts(a).into_iter().find(|&(len, _)| len == i).map_or(0, |(_, m)| m)
    }

    /// `|nu^{(a)}|`.
    fn size(&self, a: usize) -> usize {
        self.part_counts(a).into_iter().map(|(len, m)| len * m).sum()
    }

    fn largest_part(&self, a: usize) -> usize {
        self.part_counts(a).into_iter().map(|(len, _)| len).max().unwrap_or(0)
    }

    fn max_part(&self) -> usize {
        (1..=self.rank()).map(|a| self.largest_part(a)).max().unwrap_or(0)
    }
}

/// A sequence of partitions `nu = (nu^{(a)})`, stored as multiplicity maps
/// `length -> m_length^{(a)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    mults: Vec<BTreeMap<usize, usize>>,
}

impl Configuration {
    pub fn empty(rank: usize) -> Self {
        Configuration { mults: vec![BTreeMap::new(); rank] }
    }

    /// Builds a configuration from one list of parts per node (any order).
    pub fn from_partitions(parts: &[Vec<usize>]) -> Result<Self> {
        let mut c = Self::empty(parts.len());
        for (k, p) in parts.iter().enumerate() {
            for &len in p {
                if len == 0 {
                    return Err(Error::ZeroLengthString);
                }
                *c.mults[k].entry(len).or_insert(0) += 1;
            }
        }
        Ok(c)
    }

    /// Parts of `nu^{(a)}` in weakly decreasing order.
    pub fn partition(&self, a: usize) -> Vec<usize> {
        let mut parts = Vec::new();
        for (&len, &m) in self.mults[a - 1].iter().rev() {
            parts.extend(std::iter::repeat_n(len, m));
        }
        parts
    }
}

impl Shape for Configuration {
    fn rank(&self) -> usize {
        self.mults.len()
    }

    fn part_counts(&self, a: usize) -> Vec<(usize, usize)> {
        self.mults[a - 1].iter().map(|(&len, &m)| (len, m)).collect()
    }

    fn multiplicity(&self, a: usize, i: usize) -> usize {
        self.mults[a - 1].get(&i).copied().unwrap_or(0)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = (1..=self.rank())
            .map(|a| {
                let p = self.partition(a);
                if p.is_empty() {
                    "()".to_string()
                } else {
                    let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                    format!("({})", s.join(","))
                }
            })
            .collect();
        write!(f, "{}", nodes.join(" | "))
    }
}

/// All partitions of `n` as weakly decreasing vectors, in decreasing lexicographic order
/// (`(3), (2,1), (1,1,1)`).
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All weakly decreasing integer tuples `upper >= x_1 >= ... >= x_m >= lower`, in
/// decreasing lexicographic order. Empty when `m > 0` and `upper < lower`; a single empty
/// tuple when `m == 0`.
pub fn bounded_decreasing_tuples(m: usize, lower: i64, upper: i64) -> Vec<Vec<i64>> {
    fn rec(m: usize, lower: i64, upper: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        let cap = prefix.last().copied().unwrap_or(upper).min(upper);
        let mut x = cap;
        while x >= lower {
            prefix.push(x);
            rec(m, lower, upper, prefix, out);
            prefix.pop();
            x -= 1;
        }
    }
    let mut out = Vec::new();
    if m > 0 && upper < lower {
        return out;
    }
    rec(m, lower, upper, &mut Vec::new(), &mut out);
    out
}
