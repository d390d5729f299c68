//! The promotion operator on type-A rigged configurations and the affine operators
//! `e_0 = pr^{-1} e_1 pr`, `f_0 = pr^{-1} f_1 pr`.

use std::sync::OnceLock;

use serde::Serialize;

use crate::cartan::AlgebraData;
use crate::config::Shape;
use crate::crystal::RcSet;
use crate::error::{Error, Result};
use crate::rigged::{RiggedConfiguration, RiggedString};
use crate::space::RcSpace;
use crate::typea::{TypeASpace, TypeATuple};

/// One step of `rho`: the lengths `l^(1) >= ... >= l^(n)` of the strings it shortened,
/// indexed by node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoPass {
    pub lengths: Vec<usize>,
    pub result: RiggedConfiguration,
}

/// Intermediate states of one promotion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PromotionTrace {
    pub lambda: TypeATuple,
    /// `f_1^{lambda_1} ... f_n^{lambda_n}` applied in the ambient rank.
    pub lifted: RiggedConfiguration,
    pub passes: Vec<RhoPass>,
    pub result: RiggedConfiguration,
}

impl PromotionTrace {
    /// Largest parts of the lifted configuration, node by node.
    pub fn lifted_longest_parts(&self) -> Vec<usize> {
        self.lifted.nodes().iter().map(|p| p.first().map_or(0, |s| s.length)).collect()
    }
}

/// `pr` and its inverse as permutations of the element indices of `RC(L)`.
#[derive(Clone, Debug)]
pub struct PromotionTable {
    pub set: RcSet,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl PromotionTable {
    /// Least `k > 0` with `pr^k = id`.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut seen = vec![false; self.forward.len()];
        let mut order = 1u64;
        for start in 0..self.forward.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.forward[x];
                len += 1;
            }
            order = order / gcd(order, len) * len;
        }
        order
    }
}

/// Outcome of checking `pr f_a = f_{a+1} pr` on every element for `1 <= a <= n-2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CommutationReport {
    /// Pairs `(x, a)` with both sides defined.
    pub checked: usize,
    /// Both sides defined but different.
    pub mismatches: Vec<(RiggedConfiguration, usize)>,
    /// Exactly one side defined.
    pub definedness_mismatches: Vec<(RiggedConfiguration, usize)>,
}

impl CommutationReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.definedness_mismatches.is_empty()
    }
}

/// Promotion for a type `A_{n-1}` space, with the rank-`n` space it lifts into.
#[derive(Debug)]
pub struct PromotionSpace {
    typea: TypeASpace,
    ambient: RcSpace,
    cap: usize,
    table: OnceLock<Result<PromotionTable>>,
}

impl PromotionSpace {
    pub fn new(space: RcSpace, cap: usize) -> Result<Self> {
        let ambient = RcSpace::new(AlgebraData::type_a(space.rank() + 1)?, space.multiplicities().clone())?;
        let typea = TypeASpace::new(space)?;
        Ok(PromotionSpace { typea, ambient, cap, table: OnceLock::new() })
    }

    pub fn space(&self) -> &RcSpace {
        self.typea.space()
    }

    pub fn ambient(&self) -> &RcSpace {
        &self.ambient
    }

    pub fn typea(&self) -> &TypeASpace {
        &self.typea
    }

    /// `true` for a single Kirillov-Reshetikhin factor, where promotion is known to be the
    /// affine crystal promotion; multi-factor arrays are experimental.
    pub fn is_single_factor(&self) -> bool {
        self.space().multiplicities().num_factors() == 1
    }

    fn n(&self) -> usize {
        self.typea.n()
    }

    /// The normalized tuple of `rc`'s weight.
    pub fn tuple_of(&self, rc: &RiggedConfiguration) -> Result<TypeATuple> {
        self.typea.tuple_for(&self.space().weight(rc))
    }

    /// One pass of `rho` on an ambient rigged configuration: pick the shortest singular
    /// string at node `n`, then at each node `k = n-1, ..., 1` the shortest singular string
    /// at least as long as the one picked at `k+1`; shorten all picks by one and make them
    /// singular again.
    pub fn rho(&self, ambient: &RiggedConfiguration) -> Result<RhoPass> {
        let n = self.n();
        if ambient.rank() != n {
            return Err(Error::ShapeMismatch { expected: n, got: ambient.rank() });
        }
        let mut picks = vec![0usize; n + 1];
        let mut lengths = vec![0usize; n];
        let mut floor = 0;
        for k in (1..=n).rev() {
            let pick = ambient
                .strings(k)
                .iter()
                .enumerate()
                .rev()
                .find(|(_, s)| s.length >= floor && s.label == self.ambient.vacancy(ambient, k, s.length))
                .map(|(pos, _)| pos)
                .ok_or_else(|| {
                    Error::Promotion(format!(
                        "rho: no singular string of length >= {floor} at node {k} in {ambient}"
                    ))
                })?;
            picks[k] = pick;
            floor = ambient.strings(k)[pick].length;
            lengths[k - 1] = floor;
        }
        let mut nodes: Vec<Vec<RiggedString>> = ambient.nodes().to_vec();
        for k in 1..=n {
            nodes[k - 1][picks[k]].length -= 1;
        }
        // vacancies of the shortened configuration; zero-length strings contribute nothing
        let shape = RiggedConfiguration::from_canonical_parts(
            nodes.iter().map(|p| p.iter().filter(|s| s.length > 0).copied().collect()).collect(),
        );
        for k in 1..=n {
            let s = &mut nodes[k - 1][picks[k]];
            if s.length > 0 {
                s.label = self.ambient.vacancy(&shape, k, s.length);
            }
        }
        for p in nodes.iter_mut() {
            p.retain(|s| s.length > 0);
        }
        Ok(RhoPass { lengths, result: RiggedConfiguration::from_canonical_parts(nodes) })
    }

    /// `pr(rc)` with all intermediate states; `lambda` must be the normalized tuple of
    /// `rc`'s weight.
    pub fn promote_traced(&self, rc: &RiggedConfiguration, lambda: &TypeATuple) -> Result<PromotionTrace> {
        let weight = self.typea.check_normalized(lambda)?;
        if self.space().weight(rc) != weight {
            return Err(Error::WeightMismatch(format!(
                "{rc} has weight {}, but lambda = {lambda} gives {weight}",
                self.space().weight(rc)
            )));
        }
        let n = self.n();
        let mut x = rc.with_extra_node();
        for a in (1..=n).rev() {
            for _ in 0..lambda.parts()[a - 1] {
                x = self
                    .ambient
                    .f(&x, a)
                    .ok_or_else(|| Error::Promotion(format!("f_{a} undefined while lifting {rc}")))?;
            }
        }
        let lifted = x.clone();
        let mut passes = Vec::new();
        for _ in 0..lambda.parts()[n - 1] {
            let pass = self.rho(&x)?;
            x = pass.result.clone();
            passes.push(pass);
        }
        let result = x
            .without_last_node()
            .ok_or_else(|| Error::Promotion(format!("node {n} is not empty after promotion: {x}")))?;
        Ok(PromotionTrace { lambda: lambda.clone(), lifted, passes, result })
    }

    pub fn promote_with(&self, rc: &RiggedConfiguration, lambda: &TypeATuple) -> Result<RiggedConfiguration> {
        Ok(self.promote_traced(rc, lambda)?.result)
    }

    pub fn promote(&self, rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
        self.promote_with(rc, &self.tuple_of(rc)?)
    }

    /// The promotion table over all of `RC(L)`, built on first use.
    pub fn table(&self) -> Result<&PromotionTable> {
        self.table.get_or_init(|| self.build_table()).as_ref().map_err(Clone::clone)
    }

    fn build_table(&self) -> Result<PromotionTable> {
        let set = self.space().generate_rc_set(self.cap)?;
        let mut forward = Vec::with_capacity(set.len());
        for x in set.elements() {
            let y = self.promote(x)?;
            let k = set
                .graph
                .index_of(&y)
                .ok_or_else(|| Error::Promotion(format!("pr({x}) = {y} lies outside RC(L)")))?;
            forward.push(k);
        }
        let mut backward = vec![usize::MAX; forward.len()];
        for (x, &y) in forward.iter().enumerate() {
            if backward[y] != usize::MAX {
                return Err(Error::Promotion(format!(
                    "pr is not injective: {} and {} have the same image",
                    set.elements()[backward[y]],
                    set.elements()[x]
                )));
            }
            backward[y] = x;
        }
        Ok(PromotionTable { set, forward, backward })
    }

    fn index_in(&self, table: &PromotionTable, rc: &RiggedConfiguration) -> Result<usize> {
        table.set.graph.index_of(rc).ok_or(Error::NotInRc)
    }

    pub fn promote_inverse(&self, rc: &RiggedConfiguration) -> Result<RiggedConfiguration> {
        let table = self.table()?;
        let k = self.index_in(table, rc)?;
        Ok(table.set.elements()[table.backward[k]].clone())
    }

    fn conjugated(
        &self,
        rc: &RiggedConfiguration,
        op: impl Fn(&RiggedConfiguration) -> Option<RiggedConfiguration>,
    ) -> Result<Option<RiggedConfiguration>> {
        let table = self.table()?;
        let k = self.index_in(table, rc)?;
        let y = &table.set.elements()[table.forward[k]];
        match op(y) {
            None => Ok(None),
            Some(z) => {
                let j = self.index_in(table, &z)?;
                Ok(Some(table.set.elements()[table.backward[j]].clone()))
            }
        }
    }

    pub fn f0(&self, rc: &RiggedConfiguration) -> Result<Option<RiggedConfiguration>> {
        self.conjugated(rc, |y| self.space().f(y, 1))
    }

    pub fn e0(&self, rc: &RiggedConfiguration) -> Result<Option<RiggedConfiguration>> {
        self.conjugated(rc, |y| self.space().e(y, 1))
    }

    /// Checks `pr f_a = f_{a+1} pr` for `1 <= a <= n-2` on every element of `RC(L)`.
    pub fn commutation_report(&self) -> Result<CommutationReport> {
        let table = self.table()?;
        let space = self.space();
        let mut report = CommutationReport::default();
        for (k, x) in table.set.elements().iter().enumerate() {
            let pr_x = &table.set.elements()[table.forward[k]];
            for a in 1..self.n().saturating_sub(1) {
                let left = space.f(x, a).map(|y| self.promote(&y)).transpose()?;
                let right = space.f(pr_x, a + 1);
                match (left, right) {
                    (Some(l), Some(r)) => {
                        report.checked += 1;
                        if l != r {
                            report.mismatches.push((x.clone(), a));
                        }
                    }
                    (None, None) => {}
                    _ => report.definedness_mismatches.push((x.clone(), a)),
                }
            }
        }
        Ok(report)
    }
}
