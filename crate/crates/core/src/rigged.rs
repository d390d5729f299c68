//! Rigged configurations: per node a multiset of strings `(length, label)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::config::{Configuration, Shape};
use crate::error::{Error, Result};

/// A string `(i, x)` of a rigged partition: a part of length `i` carrying label `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, i64)", into = "(usize, i64)")]
pub struct RiggedString {
    pub length: usize,
    pub label: i64,
}

impl RiggedString {
    pub fn new(length: usize, label: i64) -> Self {
        RiggedString { length, label }
    }
}

impl From<(usize, i64)> for RiggedString {
    fn from((length, label): (usize, i64)) -> Self {
        RiggedString { length, label }
    }
}

impl From<RiggedString> for (usize, i64) {
    fn from(s: RiggedString) -> Self {
        (s.length, s.label)
    }
}

/// A rigged configuration `(nu, J)` in canonical form: the strings of every node are
/// sorted by length descending, then label descending. Two rigged configurations are equal
/// exactly when their canonical forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<RiggedString>>", into = "Vec<Vec<RiggedString>>")]
pub struct RiggedConfiguration {
    nodes: Vec<Vec<RiggedString>>,
}

impl RiggedConfiguration {
    pub fn empty(rank: usize) -> Self {
        RiggedConfiguration { nodes: vec![Vec::new(); rank] }
    }

    /// Builds a rigged configuration from per-node `(length, label)` lists in any order.
    pub fn new(nodes: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        Self::from_strings(
            nodes.into_iter().map(|p| p.into_iter().map(RiggedString::from).collect()).collect(),
        )
    }

    pub fn from_strings(mut nodes: Vec<Vec<RiggedString>>) -> Result<Self> {
        if nodes.iter().flatten().any(|s| s.length == 0) {
            return Err(Error::ZeroLengthString);
        }
        for p in nodes.iter_mut() {
            canonicalize(p);
        }
        Ok(RiggedConfiguration { nodes })
    }

    /// Strings of node `a` (1-based) in canonical order.
    pub fn strings(&self, a: usize) -> &[RiggedString] {
        &self.nodes[a - 1]
    }

    pub fn nodes(&self) -> &[Vec<RiggedString>] {
        &self.nodes
    }

    pub fn into_nodes(self) -> Vec<Vec<RiggedString>> {
        self.nodes
    }

    pub fn configuration(&self) -> Configuration {
        let parts: Vec<Vec<usize>> =
            self.nodes.iter().map(|p| p.iter().map(|s| s.length).collect()).collect();
        Configuration::from_partitions(&parts).expect("lengths are positive")
    }

    /// Smallest label at node `a`, if the rigged partition is nonempty.
    pub fn min_label(&self, a: usize) -> Option<i64> {
        self.nodes[a - 1].iter().map(|s| s.label).min()
    }

    /// `sum |J^{(a,i)}|`, the sum of all labels.
    pub fn label_sum(&self) -> i64 {
        self.nodes.iter().flatten().map(|s| s.label).sum()
    }

    /// Appends an empty rigged partition (used when embedding into a larger rank).
    pub fn with_extra_node(&self) -> Self {
        let mut nodes = self.nodes.clone();
        nodes.push(Vec::new());
        RiggedConfiguration { nodes }
    }

    /// Drops the last rigged partition; fails if it is not empty.
    pub fn without_last_node(&self) -> Option<Self> {
        let (last, rest) = self.nodes.split_last()?;
        last.is_empty().then(|| RiggedConfiguration { nodes: rest.to_vec() })
    }

    pub(crate) fn from_canonical_parts(nodes: Vec<Vec<RiggedString>>) -> Self {
        let mut rc = RiggedConfiguration { nodes };
        for p in rc.nodes.iter_mut() {
            canonicalize(p);
        }
        rc
    }

    pub fn is_canonical(&self) -> bool {
        self.nodes.iter().all(|p| p.windows(2).all(|w| w[0] >= w[1]))
    }
}

fn canonicalize(p: &mut [RiggedString]) {
    p.sort_by(|x, y| y.cmp(x));
}

impl TryFrom<Vec<Vec<RiggedString>>> for RiggedConfiguration {
    type Error = Error;

    fn try_from(nodes: Vec<Vec<RiggedString>>) -> Result<Self> {
        Self::from_strings(nodes)
    }
}

impl From<RiggedConfiguration> for Vec<Vec<RiggedString>> {
    fn from(rc: RiggedConfiguration) -> Self {
        rc.nodes
    }
}

impl Shape for RiggedConfiguration {
    fn rank(&self) -> usize {
        self.nodes.len()
    }

    fn part_counts(&self, a: usize) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in self.nodes[a - 1].iter().rev() {
            match out.last_mut() {
                Some((len, m)) if *len == s.length => *m += 1,
                _ => out.push((s.length, 1)),
            }
        }
        out
    }

    fn multiplicity(&self, a: usize, i: usize) -> usize {
        self.nodes[a - 1].iter().filter(|s| s.length == i).count()
    }

    fn size(&self, a: usize) -> usize {
        self.nodes[a - 1].iter().map(|s| s.length).sum()
    }

    fn largest_part(&self, a: usize) -> usize {
        self.nodes[a - 1].first().map_or(0, |s| s.length)
    }
}

/// Compact one-line form, e.g. `(2,-1)(1,-1) | (3,-2)`; empty partitions print as `()`.
impl fmt::Display for RiggedConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.nodes.iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            if p.is_empty() {
                write!(f, "()")?;
            }
            for s in p {
                write!(f, "({},{})", s.length, s.label)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_equality() {
        let x = RiggedConfiguration::new(vec![vec![(1, -1), (2, -1), (1, 0)], vec![]]).unwrap();
        let y = RiggedConfiguration::new(vec![vec![(1, 0), (1, -1), (2, -1)], vec![]]).unwrap();
        assert_eq!(x, y);
        assert!(x.is_canonical());
        assert_eq!(x.to_string(), "(2,-1)(1,0)(1,-1) | ()");
        assert_eq!(x.part_counts(1), vec![(1, 2), (2, 1)]);
        assert_eq!(x.min_label(1), Some(-1));
        assert_eq!(x.min_label(2), None);
    }

    #[test]
    fn rejects_zero_length() {
        assert_eq!(RiggedConfiguration::new(vec![vec![(0, 0)]]), Err(Error::ZeroLengthString));
    }

    #[test]
    fn json_form_is_nested_pairs() {
        let x = RiggedConfiguration::new(vec![vec![(2, -1), (1, -1)], vec![(3, -2)]]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[[[2,-1],[1,-1]],[[3,-2]]]");
        let back: RiggedConfiguration = serde_json::from_str("[[[1,-1],[2,-1]],[[3,-2]]]").unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<RiggedConfiguration>("[[[0,1]]]").is_err());
    }

    #[test]
    fn extra_node_round_trip() {
        let x = RiggedConfiguration::new(vec![vec![(1, 0)]]).unwrap();
        let y = x.with_extra_node();
        assert_eq!(y.rank(), 2);
        assert_eq!(y.without_last_node(), Some(x));
    }
}
