//! Stembridge's local axioms (P1)-(P6), (P5'), (P6') for simply-laced crystals, checked
//! on an arbitrary edge-colored graph, and isomorphism of connected crystal graphs.
//!
//! All string statistics are read off the graph itself: `eps_i(x)` and `phi_i(x)` are the
//! distances from `x` to the two ends of its `i`-string, `delta_i = -eps_i`, and
//!
//! ```text
//! Delta_i delta_j(x) = delta_j(e_i x) - delta_j(x)   Delta_i phi_j(x) = phi_j(e_i x) - phi_j(x)
//! Nabla_i phi_j(x) = phi_j(x) - phi_j(f_i x)
//! ```

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::cartan::AlgebraData;
use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P5Dual,
    P6Dual,
}

impl Axiom {
    pub const ALL: [Axiom; 8] =
        [Axiom::P1, Axiom::P2, Axiom::P3, Axiom::P4, Axiom::P5, Axiom::P6, Axiom::P5Dual, Axiom::P6Dual];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::P1 => "P1",
            Axiom::P2 => "P2",
            Axiom::P3 => "P3",
            Axiom::P4 => "P4",
            Axiom::P5 => "P5",
            Axiom::P6 => "P6",
            Axiom::P5Dual => "P5'",
            Axiom::P6Dual => "P6'",
        };
        f.write_str(s)
    }
}

/// A concrete failure location: the vertex, the colors involved and the observed values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub vertex: usize,
    pub colors: Vec<usize>,
    pub observed: Vec<(String, i64)>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} colors {:?}: {}", self.vertex, self.colors, self.detail)?;
        for (name, v) in &self.observed {
            write!(f, "; {name}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Pass,
    Fail {
        count: usize,
        witness: Witness,
    },
    /// Not checkable because a prerequisite axiom failed.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub vertices: usize,
    pub results: Vec<(Axiom, Outcome)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|(_, o)| *o == Outcome::Pass)
    }

    pub fn outcome(&self, axiom: Axiom) -> &Outcome {
        &self.results.iter().find(|(a, _)| *a == axiom).expect("every axiom is reported").1
    }

    pub fn failures(&self) -> impl Iterator<Item = (Axiom, &Witness)> + '_ {
        self.results.iter().filter_map(|(a, o)| match o {
            Outcome::Fail { witness, .. } => Some((*a, witness)),
            _ => None,
        })
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (axiom, outcome) in &self.results {
            match outcome {
                Outcome::Pass => writeln!(f, "{axiom}: pass")?,
                Outcome::Fail { count, witness } => {
                    writeln!(f, "{axiom}: FAIL ({count} violations; first at {witness})")?
                }
                Outcome::Skipped(why) => writeln!(f, "{axiom}: skipped ({why})")?,
            }
        }
        Ok(())
    }
}

/// Per-vertex, per-color adjacency. Slots hold the first edge found; (P2) decides whether
/// that is the only one.
struct Adjacency {
    out: Vec<Vec<Option<usize>>>,
    inc: Vec<Vec<Option<usize>>>,
    out_deg: Vec<Vec<usize>>,
    in_deg: Vec<Vec<usize>>,
}

impl Adjacency {
    fn new(graph: &ColoredGraph, rank: usize) -> Self {
        let n = graph.num_vertices();
        let mut adj = Adjacency {
            out: vec![vec![None; rank + 1]; n],
            inc: vec![vec![None; rank + 1]; n],
            out_deg: vec![vec![0; rank + 1]; n],
            in_deg: vec![vec![0; rank + 1]; n],
        };
        for e in &graph.edges {
            adj.out_deg[e.source][e.color] += 1;
            adj.in_deg[e.target][e.color] += 1;
            adj.out[e.source][e.color].get_or_insert(e.target);
            adj.inc[e.target][e.color].get_or_insert(e.source);
        }
        adj
    }
}

/// Checker for A-regularity of one colored graph.
pub struct Verifier<'a> {
    graph: &'a ColoredGraph,
    alg: &'a AlgebraData,
    adj: Adjacency,
    eps: Vec<Vec<i64>>,
    phi: Vec<Vec<i64>>,
}

impl<'a> Verifier<'a> {
    /// Fails on structural errors (dangling edges, colors outside the algebra).
    pub fn new(graph: &'a ColoredGraph, alg: &'a AlgebraData) -> Result<Self> {
        graph.check_structure(alg.rank())?;
        let adj = Adjacency::new(graph, alg.rank());
        let mut v = Verifier { graph, alg, adj, eps: Vec::new(), phi: Vec::new() };
        v.compute_strings();
        Ok(v)
    }

    fn e(&self, x: usize, i: usize) -> Option<usize> {
        self.adj.inc[x][i]
    }

    fn f(&self, x: usize, i: usize) -> Option<usize> {
        self.adj.out[x][i]
    }

    fn delta(&self, x: usize, j: usize) -> i64 {
        -self.eps[x][j]
    }

    /// Runs every axiom and reports pass/fail with the first witness of each failure.
    pub fn verify(&self) -> AxiomReport {
        let mut results = Vec::new();
        let p1 = self.check_p1();
        let p2 = self.check_p2();
        let prerequisites_ok = p1 == Outcome::Pass && p2 == Outcome::Pass;
        results.push((Axiom::P1, p1));
        results.push((Axiom::P2, p2));
        for axiom in [Axiom::P3, Axiom::P4, Axiom::P5, Axiom::P6, Axiom::P5Dual, Axiom::P6Dual] {
            let outcome =
                if prerequisites_ok { self.sweep(axiom) } else { Outcome::Skipped("P1 or P2 failed".into()) };
            results.push((axiom, outcome));
        }
        AxiomReport { vertices: self.graph.num_vertices(), results }
    }

    fn check_p1(&self) -> Outcome {
        let n = self.graph.num_vertices();
        let mut count = 0;
        let mut witness = None;
        for c in 1..=self.alg.rank() {
            let mut indeg: Vec<usize> = (0..n).map(|v| self.adj.in_deg[v][c]).collect();
            let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
            let mut seen = 0;
            while let Some(v) = queue.pop_front() {
                seen += 1;
                for e in self.graph.edges.iter().filter(|e| e.source == v && e.color == c) {
                    indeg[e.target] -= 1;
                    if indeg[e.target] == 0 {
                        queue.push_back(e.target);
                    }
                }
            }
            if seen < n {
                count += n - seen;
                let v = (0..n).find(|&v| indeg[v] > 0).expect("unsorted vertex exists");
                witness.get_or_insert(Witness {
                    vertex: v,
                    colors: vec![c],
                    observed: vec![("unsorted_vertices".into(), (n - seen) as i64)],
                    detail: "vertex lies on or after a monochromatic cycle".into(),
                });
            }
        }
        match witness {
            None => Outcome::Pass,
            Some(witness) => Outcome::Fail { count, witness },
        }
    }

    fn check_p2(&self) -> Outcome {
        let mut count = 0;
        let mut witness = None;
        for v in 0..self.graph.num_vertices() {
            for c in 1..=self.alg.rank() {
                if let Some(w) = self.p2_at(v, c) {
                    count += 1;
                    witness.get_or_insert(w);
                }
            }
        }
        match witness {
            None => Outcome::Pass,
            Some(witness) => Outcome::Fail { count, witness },
        }
    }

    fn p2_at(&self, v: usize, c: usize) -> Option<Witness> {
        let (o, i) = (self.adj.out_deg[v][c], self.adj.in_deg[v][c]);
        (o > 1 || i > 1).then(|| Witness {
            vertex: v,
            colors: vec![c],
            observed: vec![("out_degree".into(), o as i64), ("in_degree".into(), i as i64)],
            detail: "more than one edge of one color at a vertex".into(),
        })
    }

    /// String lengths by walking; walks are cut off after `n` steps so that cycles
    /// (reported by P1) cannot hang the computation.
    fn compute_strings(&mut self) {
        let n = self.graph.num_vertices();
        let r = self.alg.rank();
        self.eps = vec![vec![0; r + 1]; n];
        self.phi = vec![vec![0; r + 1]; n];
        for v in 0..n {
            for c in 1..=r {
                let mut k = 0;
                let mut x = v;
                while let (Some(y), true) = (self.e(x, c), k < n as i64) {
                    x = y;
                    k += 1;
                }
                self.eps[v][c] = k;
                let mut k = 0;
                let mut x = v;
                while let (Some(y), true) = (self.f(x, c), k < n as i64) {
                    x = y;
                    k += 1;
                }
                self.phi[v][c] = k;
            }
        }
    }

    fn sweep(&self, axiom: Axiom) -> Outcome {
        let mut count = 0;
        let mut witness = None;
        for v in 0..self.graph.num_vertices() {
            for i in 1..=self.alg.rank() {
                for j in 1..=self.alg.rank() {
                    if i == j {
                        continue;
                    }
                    if let Some(w) = self.check_at(axiom, v, i, j) {
                        count += 1;
                        witness.get_or_insert(w);
                    }
                }
            }
        }
        match witness {
            None => Outcome::Pass,
            Some(witness) => Outcome::Fail { count, witness },
        }
    }

    fn path(&self, x: usize, ops: &[(bool, usize)]) -> Option<usize> {
        ops.iter().try_fold(x, |y, &(raise, c)| if raise { self.e(y, c) } else { self.f(y, c) })
    }

    /// Re-checks one axiom at one vertex for the ordered color pair `(i, j)`; `None` means
    /// the axiom holds there. Requires (P1) and (P2) to hold globally.
    pub fn check_at(&self, axiom: Axiom, x: usize, i: usize, j: usize) -> Option<Witness> {
        let fail = |detail: &str, observed: Vec<(&str, i64)>| {
            Some(Witness {
                vertex: x,
                colors: vec![i, j],
                observed: observed.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
                detail: detail.to_string(),
            })
        };
        let a_ij = self.alg.cartan(i, j);
        let up_dd = |x: usize, i: usize, j: usize| -> Option<i64> {
            self.e(x, i).map(|y| self.delta(y, j) - self.delta(x, j))
        };
        let up_dp = |x: usize, i: usize, j: usize| -> Option<i64> {
            self.e(x, i).map(|y| self.phi[y][j] - self.phi[x][j])
        };
        let down_dp = |x: usize, i: usize, j: usize| -> Option<i64> {
            self.f(x, i).map(|y| self.phi[x][j] - self.phi[y][j])
        };
        match axiom {
            Axiom::P1 => None,
            Axiom::P2 => self.p2_at(x, i).or_else(|| self.p2_at(x, j)),
            Axiom::P3 | Axiom::P4 => {
                let (dd, dp) = (up_dd(x, i, j)?, up_dp(x, i, j)?);
                let ok = if axiom == Axiom::P3 { dd + dp == a_ij } else { dd <= 0 && dp <= 0 };
                if ok {
                    None
                } else {
                    fail(
                        "string-length changes under e_i out of range",
                        vec![("A_ij", a_ij), ("Delta_i delta_j", dd), ("Delta_i phi_j", dp)],
                    )
                }
            }
            Axiom::P5 => {
                self.e(x, j)?;
                if up_dd(x, i, j)? != 0 {
                    return None;
                }
                let y1 = self.path(x, &[(true, j), (true, i)]);
                let y2 = self.path(x, &[(true, i), (true, j)]);
                match (y1, y2) {
                    (Some(y), Some(z)) if y == z => {
                        let nabla = down_dp(y, j, i).expect("f_j y = e_i x");
                        if nabla == 0 {
                            None
                        } else {
                            fail("Nabla_j phi_i(y) != 0 for y = e_i e_j x", vec![("Nabla_j phi_i", nabla)])
                        }
                    }
                    _ => fail("e_i e_j x != e_j e_i x although Delta_i delta_j(x) = 0", vec![]),
                }
            }
            Axiom::P6 => {
                self.e(x, j)?;
                if up_dd(x, i, j)? != -1 || up_dd(x, j, i)? != -1 {
                    return None;
                }
                let y1 = self.path(x, &[(true, i), (true, j), (true, j), (true, i)]);
                let y2 = self.path(x, &[(true, j), (true, i), (true, i), (true, j)]);
                match (y1, y2) {
                    (Some(y), Some(z)) if y == z => {
                        let (ni, nj) = (
                            down_dp(y, i, j).expect("f_i y exists"),
                            down_dp(y, j, i).expect("f_j y exists"),
                        );
                        if ni == -1 && nj == -1 {
                            None
                        } else {
                            fail(
                                "Nabla values at y = e_i e_j^2 e_i x are not both -1",
                                vec![("Nabla_i phi_j", ni), ("Nabla_j phi_i", nj)],
                            )
                        }
                    }
                    _ => fail("e_i e_j^2 e_i x != e_j e_i^2 e_j x", vec![]),
                }
            }
            Axiom::P5Dual => {
                self.f(x, j)?;
                if down_dp(x, i, j)? != 0 {
                    return None;
                }
                let y1 = self.path(x, &[(false, j), (false, i)]);
                let y2 = self.path(x, &[(false, i), (false, j)]);
                match (y1, y2) {
                    (Some(y), Some(z)) if y == z => {
                        let d = up_dd(y, j, i).expect("e_j y = f_i x");
                        if d == 0 {
                            None
                        } else {
                            fail("Delta_j delta_i(y) != 0 for y = f_i f_j x", vec![("Delta_j delta_i", d)])
                        }
                    }
                    _ => fail("f_i f_j x != f_j f_i x although Nabla_i phi_j(x) = 0", vec![]),
                }
            }
            Axiom::P6Dual => {
                self.f(x, j)?;
                if down_dp(x, i, j)? != -1 || down_dp(x, j, i)? != -1 {
                    return None;
                }
                let y1 = self.path(x, &[(false, i), (false, j), (false, j), (false, i)]);
                let y2 = self.path(x, &[(false, j), (false, i), (false, i), (false, j)]);
                match (y1, y2) {
                    (Some(y), Some(z)) if y == z => {
                        let (di, dj) =
                            (up_dd(y, i, j).expect("e_i y exists"), up_dd(y, j, i).expect("e_j y exists"));
                        if di == -1 && dj == -1 {
                            None
                        } else {
                            fail(
                                "Delta values at y = f_i f_j^2 f_i x are not both -1",
                                vec![("Delta_i delta_j", di), ("Delta_j delta_i", dj)],
                            )
                        }
                    }
                    _ => fail("f_i f_j^2 f_i x != f_j f_i^2 f_j x", vec![]),
                }
            }
        }
    }
}

/// Checks Stembridge's axioms on `graph`, colors being nodes of `alg`.
pub fn verify_regular(graph: &ColoredGraph, alg: &AlgebraData) -> Result<AxiomReport> {
    Ok(Verifier::new(graph, alg)?.verify())
}

/// `true` iff the color-synchronized traversals from the unique sources of `g1` and `g2`
/// match edge for edge.
///
/// Both graphs must be weakly connected, have exactly one source and at most one edge of
/// each color into and out of every vertex.
pub fn isomorphic(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<bool> {
    let rank = g1.edges.iter().chain(&g2.edges).map(|e| e.color).max().unwrap_or(0);
    let s1 = unique_source(g1)?;
    let s2 = unique_source(g2)?;
    if g1.num_vertices() != g2.num_vertices() || g1.edges.len() != g2.edges.len() {
        return Ok(false);
    }
    g1.check_structure(rank)?;
    g2.check_structure(rank)?;
    let (a1, a2) = (Adjacency::new(g1, rank), Adjacency::new(g2, rank));
    for (g, adj) in [(g1, &a1), (g2, &a2)] {
        for v in 0..g.num_vertices() {
            for c in 1..=rank {
                if adj.out_deg[v][c] > 1 || adj.in_deg[v][c] > 1 {
                    return Err(Error::Graph(format!(
                        "vertex {v} has several edges of color {c}; traversal is not deterministic"
                    )));
                }
            }
        }
    }
    let n = g1.num_vertices();
    let mut fwd = vec![None; n];
    let mut bwd = vec![None; n];
    fwd[s1] = Some(s2);
    bwd[s2] = Some(s1);
    let mut stack = vec![(s1, s2)];
    while let Some((u, v)) = stack.pop() {
        for c in 1..=rank {
            for (n1, n2) in [(a1.out[u][c], a2.out[v][c]), (a1.inc[u][c], a2.inc[v][c])] {
                match (n1, n2) {
                    (None, None) => {}
                    (Some(x), Some(y)) => match (fwd[x], bwd[y]) {
                        (None, None) => {
                            fwd[x] = Some(y);
                            bwd[y] = Some(x);
                            stack.push((x, y));
                        }
                        (Some(y2), Some(x2)) if y2 == y && x2 == x => {}
                        _ => return Ok(false),
                    },
                    _ => return Ok(false),
                }
            }
        }
    }
    Ok(fwd.iter().all(Option::is_some))
}

fn unique_source(g: &ColoredGraph) -> Result<usize> {
    if g.num_vertices() == 0 {
        return Err(Error::Graph("empty graph".into()));
    }
    if g.weak_components().len() != 1 {
        return Err(Error::Graph("graph is not connected".into()));
    }
    match g.sources().as_slice() {
        [s] => Ok(*s),
        [] => Err(Error::Graph("graph has no source".into())),
        many => Err(Error::Graph(format!("graph has {} sources", many.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Edge;

    fn a2() -> AlgebraData {
        AlgebraData::type_a(2).unwrap()
    }

    /// The standard crystal of type A_2: 1 -1-> 2 -2-> 3.
    fn standard() -> ColoredGraph {
        ColoredGraph::new(
            vec!["1".into(), "2".into(), "3".into()],
            vec![Edge { source: 0, color: 1, target: 1 }, Edge { source: 1, color: 2, target: 2 }],
        )
    }

    #[test]
    fn single_vertex_passes() {
        let g = ColoredGraph::new(vec!["x".into()], vec![]);
        assert!(verify_regular(&g, &a2()).unwrap().all_pass());
    }

    #[test]
    fn standard_crystal_passes() {
        assert!(verify_regular(&standard(), &a2()).unwrap().all_pass());
    }

    #[test]
    fn recolored_edge_fails() {
        let mut g = standard();
        g.edges[1].color = 1;
        let report = verify_regular(&g, &a2()).unwrap();
        assert!(!report.all_pass());
        // 1 -1-> 2 -1-> 3 with no 2-edges: phi_2 never changes, so Delta_1 values are 0
        // while A_12 = -1
        let (axiom, w) = report.failures().next().unwrap();
        assert_eq!(axiom, Axiom::P3);
        let alg = a2();
        let v = Verifier::new(&g, &alg).unwrap();
        assert!(v.check_at(Axiom::P3, w.vertex, w.colors[0], w.colors[1]).is_some());
    }

    #[test]
    fn doubled_edge_fails_p2_and_skips_rest() {
        let mut g = standard();
        g.edges.push(Edge { source: 0, color: 1, target: 2 });
        let report = verify_regular(&g, &a2()).unwrap();
        assert!(matches!(report.outcome(Axiom::P2), Outcome::Fail { .. }));
        assert!(matches!(report.outcome(Axiom::P5), Outcome::Skipped(_)));
    }

    #[test]
    fn cycle_fails_p1() {
        let g = ColoredGraph::new(
            vec!["a".into(), "b".into()],
            vec![Edge { source: 0, color: 1, target: 1 }, Edge { source: 1, color: 1, target: 0 }],
        );
        let report = verify_regular(&g, &a2()).unwrap();
        assert!(matches!(report.outcome(Axiom::P1), Outcome::Fail { .. }));
    }

    #[test]
    fn dangling_edge_is_structural_error() {
        let g = ColoredGraph::new(vec!["a".into()], vec![Edge { source: 0, color: 1, target: 4 }]);
        assert!(verify_regular(&g, &a2()).is_err());
    }

    #[test]
    fn isomorphism_basics() {
        let g = standard();
        let mut relabeled = ColoredGraph::new(
            vec!["c".into(), "a".into(), "b".into()],
            vec![Edge { source: 1, color: 1, target: 2 }, Edge { source: 2, color: 2, target: 0 }],
        );
        assert!(isomorphic(&g, &relabeled).unwrap());
        relabeled.edges[1].color = 1;
        assert!(!isomorphic(&g, &relabeled).unwrap());
        let small = ColoredGraph::new(vec!["x".into()], vec![]);
        assert!(!isomorphic(&g, &small).unwrap());
        let two_sources = ColoredGraph::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![Edge { source: 0, color: 1, target: 2 }, Edge { source: 1, color: 2, target: 2 }],
        );
        assert!(isomorphic(&g, &two_sources).is_err());
        let disconnected = ColoredGraph::new(vec!["a".into(), "b".into()], vec![]);
        assert!(isomorphic(&disconnected, &disconnected).is_err());
    }
}
