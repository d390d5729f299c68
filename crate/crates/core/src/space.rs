//! The static side of rigged configurations for a fixed algebra and multiplicity array:
//! vacancy numbers, configurations of a given weight, weight, cocharge, admissibility
//! and highest-weight riggings.

use crate::cartan::{AlgebraData, Weight};
use crate::config::{bounded_decreasing_tuples, partitions, Configuration, MultiplicityArray, Shape};
use crate::error::{Error, Result};
use crate::rigged::{RiggedConfiguration, RiggedString};

/// An algebra together with a multiplicity array; the ambient data of `RC(L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RcSpace {
    alg: AlgebraData,
    l: MultiplicityArray,
}

impl RcSpace {
    pub fn new(alg: AlgebraData, l: MultiplicityArray) -> Result<Self> {
        if let Some((a, _, _)) = l.iter().find(|&(a, _, _)| a > alg.rank()) {
            return Err(Error::NodeOutOfRange { node: a, rank: alg.rank() });
        }
        Ok(RcSpace { alg, l })
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.alg
    }

    pub fn multiplicities(&self) -> &MultiplicityArray {
        &self.l
    }

    pub fn rank(&self) -> usize {
        self.alg.rank()
    }

    /// The vacancy number
    /// `p_i^{(a)} = sum_j min(i,j) L_j^{(a)} - sum_{b,j} A_ab min(i,j) m_j^{(b)}`,
    /// evaluated from scratch.
    pub fn vacancy<S: Shape>(&self, nu: &S, a: usize, i: usize) -> i64 {
        let l_term: i64 = self.l.at_node(a).map(|(j, m)| (i.min(j) * m) as i64).sum();
        let mut m_term = 0i64;
        for b in self.alg.nodes() {
            let c = self.alg.cartan(a, b);
            if c == 0 {
                continue;
            }
            let s: i64 = nu.part_counts(b).into_iter().map(|(j, m)| (i.min(j) * m) as i64).sum();
            m_term += c * s;
        }
        l_term - m_term
    }

    /// Index beyond which every vacancy number is constant.
    pub fn stable_index<S: Shape>(&self, nu: &S) -> usize {
        nu.max_part().max(self.l.max_width()).max(1)
    }

    /// `p_infinity^{(a)}`, which equals `<h_a, wt(nu)>`.
    pub fn stable_vacancy<S: Shape>(&self, nu: &S, a: usize) -> i64 {
        self.vacancy(nu, a, self.stable_index(nu))
    }

    /// `sum_{(a,i)} i L_i^{(a)} Lambda_a`, the weight of the empty configuration.
    pub fn top_weight(&self) -> Weight {
        let mut w = vec![0i64; self.rank()];
        for (a, i, m) in self.l.iter() {
            w[a - 1] += (i * m) as i64;
        }
        Weight(w)
    }

    /// `wt = sum_{(a,i)} i (L_i^{(a)} Lambda_a - m_i^{(a)} alpha_a)`.
    pub fn weight<S: Shape>(&self, nu: &S) -> Weight {
        let mut w = self.top_weight();
        for b in self.alg.nodes() {
            let size = nu.size(b) as i64;
            if size == 0 {
                continue;
            }
            for a in self.alg.nodes() {
                w.0[a - 1] -= self.alg.cartan(a, b) * size;
            }
        }
        w
    }

    fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.len() != self.rank() {
            return Err(Error::WeightLength { expected: self.rank(), got: lambda.len() });
        }
        Ok(())
    }

    /// The sizes `|nu^{(a)}|` forced on any `(L, lambda)`-configuration, or `None` when no
    /// such configuration exists (non-integral or negative solution).
    pub fn config_sizes(&self, lambda: &Weight) -> Result<Option<Vec<usize>>> {
        self.check_weight(lambda)?;
        let top = self.top_weight();
        let rhs: Vec<i64> = (&top - lambda).0;
        let sol = self.alg.solve(&rhs);
        let mut sizes = Vec::with_capacity(sol.len());
        for x in sol {
            if !x.is_integer() || *x.numer() < 0 {
                return Ok(None);
            }
            sizes.push(x.to_integer() as usize);
        }
        Ok(Some(sizes))
    }

    /// `C(L, lambda)`: every configuration of weight `lambda`, as the product of the
    /// partitions of each forced size, ordered lexicographically node by node.
    pub fn enumerate_configs(&self, lambda: &Weight) -> Result<Vec<Configuration>> {
        let Some(sizes) = self.config_sizes(lambda)? else {
            return Ok(Vec::new());
        };
        let per_node: Vec<Vec<Vec<usize>>> = sizes.iter().map(|&n| partitions(n)).collect();
        let mut out = Vec::new();
        let mut choice: Vec<Vec<usize>> = Vec::with_capacity(per_node.len());
        fn rec(per_node: &[Vec<Vec<usize>>], choice: &mut Vec<Vec<usize>>, out: &mut Vec<Configuration>) {
            if choice.len() == per_node.len() {
                out.push(Configuration::from_partitions(choice).expect("positive parts"));
                return;
            }
            for p in &per_node[choice.len()] {
                choice.push(p.clone());
                rec(per_node, choice, out);
                choice.pop();
            }
        }
        rec(&per_node, &mut choice, &mut out);
        Ok(out)
    }

    /// `cc(nu) = 1/2 sum A_ab min(j,k) m_j^{(a)} m_k^{(b)}`.
    pub fn config_cocharge<S: Shape>(&self, nu: &S) -> i64 {
        let counts: Vec<Vec<(usize, usize)>> = self.alg.nodes().map(|a| nu.part_counts(a)).collect();
        let mut twice = 0i64;
        for a in self.alg.nodes() {
            for b in self.alg.nodes() {
                let c = self.alg.cartan(a, b);
                if c == 0 {
                    continue;
                }
                let mut s = 0i64;
                for &(j, mj) in &counts[a - 1] {
                    for &(k, mk) in &counts[b - 1] {
                        s += (j.min(k) * mj * mk) as i64;
                    }
                }
                twice += c * s;
            }
        }
        debug_assert!(twice % 2 == 0);
        twice / 2
    }

    /// `cc(nu, J) = cc(nu) + sum |J^{(a,i)}|`; negative labels make this negative in general.
    pub fn cocharge(&self, rc: &RiggedConfiguration) -> i64 {
        self.config_cocharge(rc) + rc.label_sum()
    }

    /// `true` iff every vacancy number `p_i^{(a)}` is nonnegative.
    pub fn is_admissible<S: Shape>(&self, nu: &S) -> bool {
        let imax = self.stable_index(nu);
        self.alg.nodes().all(|a| (1..=imax).all(|i| self.vacancy(nu, a, i) >= 0))
    }

    /// `true` iff `rc` is canonical, has the right rank and every string satisfies
    /// `label <= p_length` (nonnegative colabel). Necessary for membership in `RC(L)` but
    /// not sufficient.
    pub fn validate_rc(&self, rc: &RiggedConfiguration) -> bool {
        rc.rank() == self.rank()
            && rc.is_canonical()
            && self
                .alg
                .nodes()
                .all(|a| rc.strings(a).iter().all(|s| s.label <= self.vacancy(rc, a, s.length)))
    }

    /// Colabels `p_i^{(a)} - x` of every string, node by node in canonical order.
    pub fn colabels(&self, rc: &RiggedConfiguration) -> Vec<Vec<i64>> {
        self.alg
            .nodes()
            .map(|a| rc.strings(a).iter().map(|s| self.vacancy(rc, a, s.length) - s.label).collect())
            .collect()
    }

    /// Dominant weights `lambda` with `C(L, lambda)` nonempty, in increasing order.
    pub fn dominant_weights(&self) -> Vec<Weight> {
        let top = self.top_weight();
        // sizes = C^{-1}(top - lambda) <= C^{-1} top since C^{-1} is entrywise positive
        let bound: Vec<usize> =
            self.alg.solve(&top.0).iter().map(|x| x.floor().to_integer().max(0) as usize).collect();
        let mut out = Vec::new();
        let mut sizes = vec![0usize; self.rank()];
        loop {
            let mut w = top.clone();
            for b in self.alg.nodes() {
                for a in self.alg.nodes() {
                    w.0[a - 1] -= self.alg.cartan(a, b) * sizes[b - 1] as i64;
                }
            }
            if w.is_dominant() {
                out.push(w);
            }
            // odometer over the box 0..=bound
            let mut k = 0;
            while k < sizes.len() && sizes[k] == bound[k] {
                sizes[k] = 0;
                k += 1;
            }
            if k == sizes.len() {
                break;
            }
            sizes[k] += 1;
        }
        out.sort();
        out
    }

    /// The highest-weight rigged configurations of weight `lambda`: every admissible
    /// `nu` in `C(L, lambda)` with every `J^{(a,i)}` a partition in an
    /// `m_i^{(a)} x p_i^{(a)}` box.
    pub fn highest_weight_rcs(&self, lambda: &Weight) -> Result<Vec<RiggedConfiguration>> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let mut out = Vec::new();
        for nu in self.enumerate_configs(lambda)? {
            if !self.is_admissible(&nu) {
                continue;
            }
            let mut blocks: Vec<(usize, usize, Vec<Vec<i64>>)> = Vec::new();
            for a in self.alg.nodes() {
                for (i, m) in nu.part_counts(a).into_iter().rev() {
                    let p = self.vacancy(&nu, a, i);
                    blocks.push((a, i, bounded_decreasing_tuples(m, 0, p)));
                }
            }
            out.extend(riggings_from_blocks(self.rank(), &blocks));
        }
        Ok(out)
    }
}

/// Cartesian product of per-`(a, i)` label tuples, assembled into rigged configurations.
pub(crate) fn riggings_from_blocks(
    rank: usize,
    blocks: &[(usize, usize, Vec<Vec<i64>>)],
) -> Vec<RiggedConfiguration> {
    let mut out = Vec::new();
    let mut nodes: Vec<Vec<RiggedString>> = vec![Vec::new(); rank];
    fn rec(
        blocks: &[(usize, usize, Vec<Vec<i64>>)],
        nodes: &mut Vec<Vec<RiggedString>>,
        out: &mut Vec<RiggedConfiguration>,
    ) {
        let Some(((a, i, choices), rest)) = blocks.split_first() else {
            out.push(RiggedConfiguration::from_canonical_parts(nodes.clone()));
            return;
        };
        for labels in choices {
            let before = nodes[a - 1].len();
            nodes[a - 1].extend(labels.iter().map(|&x| RiggedString::new(*i, x)));
            rec(rest, nodes, out);
            nodes[a - 1].truncate(before);
        }
    }
    rec(blocks, &mut nodes, &mut out);
    out
}
