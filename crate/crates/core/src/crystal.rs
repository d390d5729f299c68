//! Kashiwara operators on rigged configurations and generation of crystal graphs.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Display;
use std::hash::Hash;

use crate::cartan::Weight;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Edge};
use crate::rigged::{RiggedConfiguration, RiggedString};
use crate::space::RcSpace;

/// Default bound on the number of vertices a generation run may create.
pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

/// A crystal given by partial operators `e_a`, `f_a` for nodes `a` in `1..=rank`.
pub trait Crystal {
    type Element: Clone + Eq + Hash + Ord + Display;

    fn rank(&self) -> usize;

    fn f(&self, x: &Self::Element, a: usize) -> Option<Self::Element>;

    fn e(&self, x: &Self::Element, a: usize) -> Option<Self::Element>;

    /// `phi_a` by repeated application of `f_a`.
    fn phi_by_walk(&self, x: &Self::Element, a: usize) -> usize {
        let mut n = 0;
        let mut cur = x.clone();
        while let Some(y) = self.f(&cur, a) {
            cur = y;
            n += 1;
        }
        n
    }

    /// `eps_a` by repeated application of `e_a`.
    fn eps_by_walk(&self, x: &Self::Element, a: usize) -> usize {
        let mut n = 0;
        let mut cur = x.clone();
        while let Some(y) = self.e(&cur, a) {
            cur = y;
            n += 1;
        }
        n
    }

    fn is_highest_weight(&self, x: &Self::Element) -> bool {
        (1..=self.rank()).all(|a| self.e(x, a).is_none())
    }
}

/// The graph of a crystal (or of a union of components): vertices in discovery order,
/// an `a`-colored edge `x -> f_a(x)` for every defined `f_a`.
#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    pub elements: Vec<E>,
    index: HashMap<E, usize>,
    pub graph: ColoredGraph,
}

impl<E: Clone + Eq + Hash + Display> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &E) -> bool {
        self.index.contains_key(x)
    }

    /// `(source, color, target)` edges as element pairs.
    pub fn edge_triples(&self) -> impl Iterator<Item = (&E, usize, &E)> + '_ {
        self.graph.edges.iter().map(|e| (&self.elements[e.source], e.color, &self.elements[e.target]))
    }
}

/// Breadth-first closure of `seeds` under every defined `e_a` and `f_a`.
///
/// Fails with [`Error::VertexCapExceeded`] rather than truncating.
pub fn generate<C: Crystal>(
    crystal: &C,
    seeds: &[C::Element],
    cap: usize,
) -> Result<CrystalGraph<C::Element>> {
    let mut elements: Vec<C::Element> = Vec::new();
    let mut index: HashMap<C::Element, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut edges: HashSet<Edge> = HashSet::new();

    let mut intern =
        |x: C::Element, elements: &mut Vec<C::Element>, queue: &mut VecDeque<usize>| -> Result<usize> {
            if let Some(&k) = index.get(&x) {
                return Ok(k);
            }
            if elements.len() >= cap {
                return Err(Error::VertexCapExceeded { cap });
            }
            let k = elements.len();
            index.insert(x.clone(), k);
            elements.push(x);
            queue.push_back(k);
            Ok(k)
        };

    for s in seeds {
        intern(s.clone(), &mut elements, &mut queue)?;
    }
    while let Some(v) = queue.pop_front() {
        for a in 1..=crystal.rank() {
            let x = elements[v].clone();
            if let Some(y) = crystal.f(&x, a) {
                let w = intern(y, &mut elements, &mut queue)?;
                edges.insert(Edge { source: v, color: a, target: w });
            }
            if let Some(y) = crystal.e(&x, a) {
                let w = intern(y, &mut elements, &mut queue)?;
                edges.insert(Edge { source: w, color: a, target: v });
            }
        }
    }
    let mut edges: Vec<Edge> = edges.into_iter().collect();
    edges.sort();
    let labels = elements.iter().map(|x| x.to_string()).collect();
    let index = elements.iter().cloned().enumerate().map(|(k, x)| (x, k)).collect();
    Ok(CrystalGraph { elements, index, graph: ColoredGraph::new(labels, edges) })
}

/// Which string an operator acts on: its position in the canonical order of the node, or
/// a new string of length one for `f_a` when no label is nonpositive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    Existing { position: usize, length: usize },
    NewString,
}

impl Selection {
    /// Length `k` of the selected string before the operator acts (0 for a new string).
    pub fn length(&self) -> usize {
        match *self {
            Selection::Existing { length, .. } => length,
            Selection::NewString => 0,
        }
    }
}

impl RcSpace {
    /// `s = min(0, smallest label at node a)`.
    fn min_nonpositive_label(&self, rc: &RiggedConfiguration, a: usize) -> i64 {
        rc.min_label(a).map_or(0, |m| m.min(0))
    }

    /// `phi_a = p_infinity^{(a)} - s`.
    pub fn phi(&self, rc: &RiggedConfiguration, a: usize) -> i64 {
        self.weight(rc).pairing(a) - self.min_nonpositive_label(rc, a)
    }

    /// `eps_a = -s`.
    pub fn eps(&self, rc: &RiggedConfiguration, a: usize) -> i64 {
        -self.min_nonpositive_label(rc, a)
    }

    /// The string `f_a` lengthens: the longest among those with the smallest nonpositive
    /// label.
    pub fn f_selection(&self, rc: &RiggedConfiguration, a: usize) -> Selection {
        match rc.min_label(a) {
            Some(s) if s <= 0 => {
                // canonical order is length-descending, so the first hit is the longest
                let position = rc.strings(a).iter().position(|x| x.label == s).expect("min exists");
                Selection::Existing { position, length: rc.strings(a)[position].length }
            }
            _ => Selection::NewString,
        }
    }

    /// The string `e_a` shortens: the shortest among those with the smallest negative
    /// label.
    pub fn e_selection(&self, rc: &RiggedConfiguration, a: usize) -> Option<Selection> {
        let s = rc.min_label(a).filter(|&s| s < 0)?;
        let position = rc.strings(a).iter().rposition(|x| x.label == s).expect("min exists");
        Some(Selection::Existing { position, length: rc.strings(a)[position].length })
    }

    /// Lengthens the `f_a` selection and relabels so that all other colabels are kept,
    /// using the vacancy change `p_i^{(b)} -> p_i^{(b)} - A_ab chi(i > k)`. Does not check
    /// that the result is valid.
    pub fn apply_f_raw(&self, rc: &RiggedConfiguration, a: usize) -> RiggedConfiguration {
        let sel = self.f_selection(rc, a);
        let k = sel.length();
        let mut nodes: Vec<Vec<RiggedString>> = rc.nodes().to_vec();
        for (bi, strings) in nodes.iter_mut().enumerate() {
            let c = self.algebra().cartan(a, bi + 1);
            if c == 0 {
                continue;
            }
            for s in strings.iter_mut() {
                if s.length > k {
                    s.label -= c;
                }
            }
        }
        match sel {
            Selection::Existing { position, .. } => {
                let s = &mut nodes[a - 1][position];
                s.length += 1;
                s.label = rc.strings(a)[position].label - 1;
            }
            Selection::NewString => nodes[a - 1].push(RiggedString::new(1, -1)),
        }
        RiggedConfiguration::from_canonical_parts(nodes)
    }

    /// `f_a`, undefined exactly when `phi_a = 0`.
    pub fn f(&self, rc: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
        (self.phi(rc, a) > 0).then(|| self.apply_f_raw(rc, a))
    }

    /// `e_a`: shortens the selected string by one (a length-one string disappears), keeps
    /// all other colabels via `p_i^{(b)} -> p_i^{(b)} + A_ab chi(i >= k)`, and raises the
    /// label of the shortened string by one.
    pub fn e(&self, rc: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
        let Selection::Existing { position, length: k } = self.e_selection(rc, a)? else {
            unreachable!("e_a never creates a string")
        };
        let mut nodes: Vec<Vec<RiggedString>> = rc.nodes().to_vec();
        for (bi, strings) in nodes.iter_mut().enumerate() {
            let c = self.algebra().cartan(a, bi + 1);
            if c == 0 {
                continue;
            }
            for s in strings.iter_mut() {
                if s.length >= k {
                    s.label += c;
                }
            }
        }
        let old = rc.strings(a)[position];
        if k == 1 {
            nodes[a - 1].remove(position);
        } else {
            nodes[a - 1][position] = RiggedString::new(k - 1, old.label + 1);
        }
        Some(RiggedConfiguration::from_canonical_parts(nodes))
    }

    /// The crystal component generated from `seed`.
    pub fn generate_component(&self, seed: &RiggedConfiguration, cap: usize) -> Result<RcComponent> {
        let graph = generate(self, std::slice::from_ref(seed), cap)?;
        Ok(RcComponent::new(self, graph))
    }

    /// `RC(L)`: the union of the components of all highest-weight rigged configurations.
    pub fn generate_rc_set(&self, cap: usize) -> Result<RcSet> {
        let mut seeds = Vec::new();
        for w in self.dominant_weights() {
            seeds.extend(self.highest_weight_rcs(&w)?);
        }
        let mut elements: Vec<RiggedConfiguration> = Vec::new();
        let mut index: HashMap<RiggedConfiguration, usize> = HashMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut components = Vec::new();
        let mut overlaps = 0;
        for seed in &seeds {
            if index.contains_key(seed) {
                overlaps += 1;
                continue;
            }
            let remaining = cap.saturating_sub(elements.len());
            let comp = generate(self, std::slice::from_ref(seed), remaining).map_err(|e| match e {
                Error::VertexCapExceeded { .. } => Error::VertexCapExceeded { cap },
                other => other,
            })?;
            let mut local_to_global = Vec::with_capacity(comp.len());
            for x in &comp.elements {
                let g = match index.get(x) {
                    Some(&g) => {
                        overlaps += 1;
                        g
                    }
                    None => {
                        let g = elements.len();
                        index.insert(x.clone(), g);
                        elements.push(x.clone());
                        g
                    }
                };
                local_to_global.push(g);
            }
            edges.extend(comp.graph.edges.iter().map(|e| Edge {
                source: local_to_global[e.source],
                color: e.color,
                target: local_to_global[e.target],
            }));
            components.push(local_to_global);
        }
        edges.sort();
        edges.dedup();
        let labels = elements.iter().map(|x| x.to_string()).collect();
        let graph = CrystalGraph { elements, index, graph: ColoredGraph::new(labels, edges) };
        let weights: Vec<Weight> = graph.elements.iter().map(|x| self.weight(x)).collect();
        let cocharges = graph.elements.iter().map(|x| self.cocharge(x)).collect();
        let mut fibers: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (k, w) in weights.iter().enumerate() {
            fibers.entry(w.clone()).or_default().push(k);
        }
        Ok(RcSet { graph, components, weights, cocharges, fibers, overlaps })
    }
}

impl Crystal for RcSpace {
    type Element = RiggedConfiguration;

    fn rank(&self) -> usize {
        RcSpace::rank(self)
    }

    fn f(&self, x: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
        RcSpace::f(self, x, a)
    }

    fn e(&self, x: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
        RcSpace::e(self, x, a)
    }
}

/// One crystal component of rigged configurations; vertex 0 is the seed.
#[derive(Clone, Debug)]
pub struct RcComponent {
    pub graph: CrystalGraph<RiggedConfiguration>,
    pub weights: Vec<Weight>,
    pub cocharges: Vec<i64>,
}

impl RcComponent {
    fn new(space: &RcSpace, graph: CrystalGraph<RiggedConfiguration>) -> Self {
        let weights = graph.elements.iter().map(|x| space.weight(x)).collect();
        let cocharges = graph.elements.iter().map(|x| space.cocharge(x)).collect();
        RcComponent { graph, weights, cocharges }
    }

    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }
}

/// `RC(L)` with its decomposition into components and weight fibers.
#[derive(Clone, Debug)]
pub struct RcSet {
    /// Every element of `RC(L)` and all crystal edges.
    pub graph: CrystalGraph<RiggedConfiguration>,
    /// Element indices of each component; the first index is the highest-weight seed.
    pub components: Vec<Vec<usize>>,
    pub weights: Vec<Weight>,
    pub cocharges: Vec<i64>,
    /// `RC(L, lambda)` as element indices, keyed by weight.
    pub fibers: BTreeMap<Weight, Vec<usize>>,
    /// Elements reached from more than one seed; zero for a genuine crystal.
    pub overlaps: usize,
}

impl RcSet {
    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn elements(&self) -> &[RiggedConfiguration] {
        &self.graph.elements
    }

    pub fn contains(&self, x: &RiggedConfiguration) -> bool {
        self.graph.contains(x)
    }

    pub fn fiber(&self, w: &Weight) -> Vec<&RiggedConfiguration> {
        self.fibers.get(w).map(|ks| ks.iter().map(|&k| &self.graph.elements[k]).collect()).unwrap_or_default()
    }

    /// The induced graph of component `c`, vertex 0 being its highest-weight seed.
    pub fn component_graph(&self, c: usize) -> ColoredGraph {
        self.graph.graph.induced(&self.components[c])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AlgebraData;
    use crate::config::MultiplicityArray;

    fn space(rank: usize, triples: &[(usize, usize, usize)]) -> RcSpace {
        RcSpace::new(
            AlgebraData::type_a(rank).unwrap(),
            MultiplicityArray::from_triples(triples.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    fn rc(nodes: Vec<Vec<(usize, i64)>>) -> RiggedConfiguration {
        RiggedConfiguration::new(nodes).unwrap()
    }

    #[test]
    fn operators_on_a2_example() {
        let s = space(2, &[(1, 1, 1), (1, 3, 1), (2, 2, 1)]);
        let x = rc(vec![vec![(2, -1), (1, -1)], vec![(3, -2)]]);
        assert_eq!(s.f(&x, 1), Some(rc(vec![vec![(3, -2), (1, -1)], vec![(3, -1)]])));
        assert_eq!(s.e(&x, 1), Some(rc(vec![vec![(2, 1)], vec![(3, -3)]])));
        assert_eq!(s.phi(&x, 1), 2);
        assert_eq!(s.eps(&x, 1), 1);
    }

    #[test]
    fn single_box_string() {
        let s = space(1, &[(1, 1, 1)]);
        let empty = RiggedConfiguration::empty(1);
        let x = s.f(&empty, 1).unwrap();
        assert_eq!(x, rc(vec![vec![(1, -1)]]));
        assert_eq!(s.f(&x, 1), None);
        assert_eq!(s.e(&x, 1), Some(empty.clone()));
        assert_eq!(s.e(&empty, 1), None);
    }

    #[test]
    fn empty_multiplicity_array() {
        let s = space(3, &[]);
        let empty = RiggedConfiguration::empty(3);
        for a in 1..=3 {
            assert_eq!(s.phi(&empty, a), 0);
            assert_eq!(s.eps(&empty, a), 0);
        }
        let comp = s.generate_component(&empty, DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(comp.len(), 1);
        assert!(comp.graph.graph.edges.is_empty());
        let set = s.generate_rc_set(DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(set.elements(), &[empty]);
    }

    #[test]
    fn highest_weight_elements_have_no_e() {
        let s = space(2, &[(1, 1, 3)]);
        for w in s.dominant_weights() {
            for x in s.highest_weight_rcs(&w).unwrap() {
                for a in 1..=2 {
                    assert_eq!(s.e(&x, a), None);
                    assert_eq!(s.phi(&x, a), w.pairing(a));
                }
            }
        }
    }

    #[test]
    fn three_boxes_in_a2() {
        let s = space(2, &[(1, 1, 3)]);
        let set = s.generate_rc_set(DEFAULT_VERTEX_CAP).unwrap();
        assert_eq!(set.len(), 27);
        assert_eq!(set.components.len(), 4);
        assert_eq!(set.overlaps, 0);
        let sizes: Vec<usize> = set.components.iter().map(Vec::len).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 27);
        assert_eq!(set.fiber(&Weight(vec![0, 0])).len(), 6);
    }

    #[test]
    fn vertex_cap_is_an_error() {
        let s = space(2, &[(1, 1, 3)]);
        assert_eq!(s.generate_rc_set(5).unwrap_err(), Error::VertexCapExceeded { cap: 5 });
    }
}
