//! Edge-colored directed graphs and their JSON and DOT file formats.
//!
//! JSON:
//!
//! ```text
//! {"algebra":{"family":"A","rank":2},
//!  "vertices":["(1,0) | ()", ...],
//!  "edges":[{"source":0,"color":1,"target":1}, ...]}
//! ```
//!
//! DOT (the subset written by [`GraphFile::to_dot`] and read back by
//! [`GraphFile::from_dot`]):
//!
//! ```text
//! digraph crystal {
//!   algebra="A_2";
//!   v0 [label="(1,0) | ()"];
//!   v0 -> v1 [label="1"];
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::cartan::{AlgebraData, AlgebraSpec, Family};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Edge {
    pub source: usize,
    pub color: usize,
    pub target: usize,
}

/// A finite directed graph with edges colored by Dynkin nodes `1..=rank`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoredGraph {
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl ColoredGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>) -> Self {
        ColoredGraph { vertices, edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Rejects edges with endpoints outside the vertex range or colors outside `1..=rank`.
    pub fn check_structure(&self, rank: usize) -> Result<()> {
        let n = self.vertices.len();
        for e in &self.edges {
            if e.source >= n || e.target >= n {
                return Err(Error::Graph(format!(
                    "dangling edge {} -{}-> {} in a graph with {n} vertices",
                    e.source, e.color, e.target
                )));
            }
            if e.color == 0 || e.color > rank {
                return Err(Error::Graph(format!("edge color {} outside 1..={rank}", e.color)));
            }
        }
        Ok(())
    }

    /// Vertices of each weakly connected component, each sorted, components ordered by
    /// smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        for e in &self.edges {
            let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// Vertices without incoming edges.
    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.vertices.len()];
        for e in &self.edges {
            has_in[e.target] = true;
        }
        (0..self.vertices.len()).filter(|&v| !has_in[v]).collect()
    }

    /// Subgraph induced on `vertices` (given in the new vertex order).
    pub fn induced(&self, vertices: &[usize]) -> ColoredGraph {
        let mut index = vec![usize::MAX; self.vertices.len()];
        for (k, &v) in vertices.iter().enumerate() {
            index[v] = k;
        }
        let labels = vertices.iter().map(|&v| self.vertices[v].clone()).collect();
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| index[e.source] != usize::MAX && index[e.target] != usize::MAX)
            .map(|e| Edge { source: index[e.source], color: e.color, target: index[e.target] })
            .collect();
        edges.sort();
        ColoredGraph::new(labels, edges)
    }
}

/// A colored graph together with the algebra whose nodes color its edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub algebra: AlgebraSpec,
    pub vertices: Vec<String>,
    pub edges: Vec<Edge>,
}

impl GraphFile {
    pub fn new(alg: &AlgebraData, graph: &ColoredGraph) -> Self {
        GraphFile { algebra: alg.into(), vertices: graph.vertices.clone(), edges: graph.edges.clone() }
    }

    pub fn algebra(&self) -> Result<AlgebraData> {
        AlgebraData::try_from(self.algebra)
    }

    pub fn graph(&self) -> ColoredGraph {
        ColoredGraph::new(self.vertices.clone(), self.edges.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        out.push_str(&format!("  algebra=\"{}_{}\";\n", self.algebra.family, self.algebra.rank));
        for (k, label) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{k} [label=\"{}\"];\n", escape(label)));
        }
        for e in &self.edges {
            out.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", e.source, e.target, e.color));
        }
        out.push_str("}\n");
        out
    }

    /// Parses the DOT subset produced by [`GraphFile::to_dot`].
    pub fn from_dot(text: &str) -> Result<Self> {
        let err = |line: &str| Error::Parse(format!("unrecognized DOT line: {line}"));
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        match lines.next() {
            Some(l) if l.starts_with("digraph") && l.ends_with('{') => {}
            other => return Err(err(other.unwrap_or(""))),
        }
        let mut algebra = None;
        let mut vertices: Vec<(usize, String)> = Vec::new();
        let mut edges = Vec::new();
        let mut closed = false;
        for line in lines {
            if closed {
                return Err(err(line));
            }
            if line == "}" {
                closed = true;
                continue;
            }
            let body = line.strip_suffix(';').ok_or_else(|| err(line))?;
            if let Some(rest) = body.strip_prefix("algebra=") {
                let name = unquote(rest).ok_or_else(|| err(line))?;
                let (family, rank) = name.split_once('_').ok_or_else(|| err(line))?;
                let family: Family = family.parse()?;
                let rank: usize = rank.parse().map_err(|_| err(line))?;
                algebra = Some(AlgebraSpec { family, rank });
            } else if let Some((head, attrs)) = body.split_once(" [label=") {
                let label = attrs.strip_suffix(']').and_then(unquote).ok_or_else(|| err(line))?;
                if let Some((src, dst)) = head.split_once(" -> ") {
                    let source = vertex_id(src).ok_or_else(|| err(line))?;
                    let target = vertex_id(dst).ok_or_else(|| err(line))?;
                    let color = label.parse().map_err(|_| err(line))?;
                    edges.push(Edge { source, color, target });
                } else {
                    let id = vertex_id(head).ok_or_else(|| err(line))?;
                    vertices.push((id, label));
                }
            } else {
                return Err(err(line));
            }
        }
        if !closed {
            return Err(Error::Parse("missing closing brace".into()));
        }
        let algebra = algebra.ok_or_else(|| Error::Parse("missing algebra attribute".into()))?;
        vertices.sort_by_key(|(id, _)| *id);
        if vertices.iter().enumerate().any(|(k, (id, _))| k != *id) {
            return Err(Error::Parse("vertex ids must be v0..v(n-1)".into()));
        }
        Ok(GraphFile { algebra, vertices: vertices.into_iter().map(|(_, l)| l).collect(), edges })
    }
}

fn vertex_id(s: &str) -> Option<usize> {
    s.trim().strip_prefix('v')?.parse().ok()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn unquote(s: &str) -> Option<String> {
    let inner = s.strip_prefix('"')?.strip_suffix('"')?;
    let mut out = String::with_capacity(inner.len());
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => out.push(chars.next()?),
            '"' => return None,
            c => out.push(c),
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> GraphFile {
        GraphFile {
            algebra: AlgebraSpec { family: Family::A, rank: 2 },
            vertices: vec!["(1,0) | ()".into(), "a \"quoted\" \\ label".into(), "x".into()],
            edges: vec![Edge { source: 0, color: 1, target: 1 }, Edge { source: 0, color: 2, target: 2 }],
        }
    }

    #[test]
    fn dot_round_trip() {
        let g = sample();
        let dot = g.to_dot();
        assert!(dot.contains("v0 -> v1 [label=\"1\"];"));
        assert_eq!(GraphFile::from_dot(&dot).unwrap(), g);
        assert_eq!(GraphFile::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_dot() {
        assert!(GraphFile::from_dot("graph x {\n}\n").is_err());
        assert!(GraphFile::from_dot("digraph c {\n  v0 [label=\"a\"];\n").is_err());
        assert!(GraphFile::from_dot("digraph c {\n  v1 [label=\"a\"];\n  algebra=\"A_1\";\n}\n").is_err());
    }

    #[test]
    fn structure_checks() {
        let g = sample().graph();
        assert!(g.check_structure(2).is_ok());
        assert!(g.check_structure(1).is_err());
        let dangling = ColoredGraph::new(vec!["a".into()], vec![Edge { source: 0, color: 1, target: 3 }]);
        assert!(dangling.check_structure(1).is_err());
        assert_eq!(g.weak_components(), vec![vec![0, 1, 2]]);
        assert_eq!(g.sources(), vec![0]);
    }

    proptest! {
        #[test]
        fn dot_and_json_agree(
            labels in prop::collection::vec("[ -~]{0,12}", 1..6),
            raw_edges in prop::collection::vec((0usize..6, 1usize..4, 0usize..6), 0..10),
        ) {
            let n = labels.len();
            let edges = raw_edges
                .into_iter()
                .map(|(s, c, t)| Edge { source: s % n, color: c, target: t % n })
                .collect();
            let g = GraphFile { algebra: AlgebraSpec { family: Family::A, rank: 3 }, vertices: labels, edges };
            let via_dot = GraphFile::from_dot(&g.to_dot()).unwrap();
            prop_assert_eq!(&via_dot, &g);
            prop_assert_eq!(GraphFile::from_json(&via_dot.to_json()).unwrap(), g);
        }
    }
}
