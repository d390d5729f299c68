//! Exhaustive invariant checks over a generated `RC(L)`, shared by the command-line
//! `verify` runner and the test suites.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::affine::PromotionSpace;
use crate::cartan::{Family, Weight};
use crate::config::Shape;
use crate::crystal::{Crystal, RcSet, Selection};
use crate::error::Result;
use crate::graph::ColoredGraph;
use crate::paths::{ssyt_count, PathSpace, TensorPath};
use crate::rigged::{RiggedConfiguration, RiggedString};
use crate::space::RcSpace;
use crate::stembridge::{isomorphic, verify_regular, AxiomReport};
use crate::typea::{
    enumerate_lower_bound_tableaux, lower_bound_tableau_count, LowerBoundTableau, TypeASpace,
};

/// Outcome of one named invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
    /// Monitored checks are reported but do not fail the report.
    pub monitored: bool,
}

impl Check {
    fn new(name: &str) -> Self {
        Check { name: name.to_string(), checked: 0, violations: 0, first_violation: None, monitored: false }
    }

    fn monitored(mut self, yes: bool) -> Self {
        self.monitored = yes;
        self
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            self.first_violation.get_or_insert_with(describe);
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.monitored { " [monitored]" } else { "" };
        match &self.first_violation {
            None => write!(f, "{}: ok ({} checked){tag}", self.name, self.checked),
            Some(w) => {
                write!(f, "{}: {} of {} violated{tag}; first: {w}", self.name, self.violations, self.checked)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub checks: Vec<Check>,
    /// Informational lines (measured quantities that are reported, not asserted).
    pub notes: Vec<String>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.monitored || c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: InvariantReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

/// `f_a` recomputed with every vacancy number evaluated from scratch.
fn f_from_scratch(space: &RcSpace, x: &RiggedConfiguration, a: usize) -> RiggedConfiguration {
    let sel = space.f_selection(x, a);
    let mut nodes: Vec<Vec<(RiggedString, i64)>> = space
        .algebra()
        .nodes()
        .map(|b| x.strings(b).iter().map(|s| (*s, space.vacancy(x, b, s.length) - s.label)).collect())
        .collect();
    let selected_label = match sel {
        Selection::Existing { position, .. } => {
            let s = &mut nodes[a - 1][position].0;
            s.length += 1;
            s.label - 1
        }
        Selection::NewString => {
            nodes[a - 1].push((RiggedString::new(1, 0), 0));
            -1
        }
    };
    let position = match sel {
        Selection::Existing { position, .. } => position,
        Selection::NewString => nodes[a - 1].len() - 1,
    };
    relabel(space, nodes, a, position, Some(selected_label))
}

/// `e_a` recomputed from scratch; `None` when no label at `a` is negative.
fn e_from_scratch(space: &RcSpace, x: &RiggedConfiguration, a: usize) -> Option<RiggedConfiguration> {
    let Selection::Existing { position, .. } = space.e_selection(x, a)? else {
        return None;
    };
    let mut nodes: Vec<Vec<(RiggedString, i64)>> = space
        .algebra()
        .nodes()
        .map(|b| x.strings(b).iter().map(|s| (*s, space.vacancy(x, b, s.length) - s.label)).collect())
        .collect();
    let s = &mut nodes[a - 1][position].0;
    s.length -= 1;
    let label = s.label + 1;
    Some(relabel(space, nodes, a, position, Some(label)))
}

/// Sets every label to `new vacancy - old colabel`, except the selected string, which gets
/// `selected_label`; zero-length strings are dropped.
fn relabel(
    space: &RcSpace,
    nodes: Vec<Vec<(RiggedString, i64)>>,
    a: usize,
    position: usize,
    selected_label: Option<i64>,
) -> RiggedConfiguration {
    let shape = RiggedConfiguration::from_strings(
        nodes.iter().map(|p| p.iter().map(|(s, _)| *s).filter(|s| s.length > 0).collect()).collect(),
    )
    .expect("positive lengths");
    let out: Vec<Vec<RiggedString>> = nodes
        .iter()
        .enumerate()
        .map(|(bi, p)| {
            p.iter()
                .enumerate()
                .filter(|(_, (s, _))| s.length > 0)
                .map(|(k, (s, colabel))| {
                    let label = match selected_label {
                        Some(l) if bi + 1 == a && k == position => l,
                        _ => space.vacancy(&shape, bi + 1, s.length) - colabel,
                    };
                    RiggedString::new(s.length, label)
                })
                .collect()
        })
        .collect();
    RiggedConfiguration::from_strings(out).expect("positive lengths")
}

/// Crystal and configuration invariants on every element and edge of `set`.
pub fn check_rc_set(space: &RcSpace, set: &RcSet) -> InvariantReport {
    let type_a = space.algebra().family() == Family::A;
    let mut canonical = Check::new("canonical form");
    let mut disjoint = Check::new("components disjoint");
    let mut inverse = Check::new("e_a f_a = id and f_a e_a = id");
    let mut weight = Check::new("wt(f_a x) = wt(x) - alpha_a");
    let mut strings = Check::new("phi/eps formula = walk");
    let mut pairing = Check::new("phi - eps = <h_a, wt>");
    let mut cocharge = Check::new("cocharge constant on components");
    let mut label_floor = Check::new("label floor x >= -i");
    let mut colabel_floor = Check::new("colabel floor x <= p").monitored(!type_a);
    let mut incremental = Check::new("incremental = from-scratch relabeling");
    let mut definedness = Check::new("f_a defined <=> raw result in RC(L)");
    let mut stability = Check::new("vacancy stability");
    let mut convexity = Check::new("vacancy convexity");
    let mut second_difference = Check::new("vacancy second-difference inequality");

    disjoint.record(set.overlaps == 0, || format!("{} overlapping elements", set.overlaps));
    for comp in &set.components {
        let cc = set.cocharges[comp[0]];
        for &k in comp {
            cocharge.record(set.cocharges[k] == cc, || {
                format!("{} has cc {} but its seed has {cc}", set.elements()[k], set.cocharges[k])
            });
        }
    }
    for (k, x) in set.elements().iter().enumerate() {
        canonical.record(x.is_canonical(), || x.to_string());
        let wt = &set.weights[k];
        for a in space.algebra().nodes() {
            let fx = space.f(x, a);
            let ex = space.e(x, a);
            if let Some(y) = &fx {
                inverse.record(space.e(y, a).as_ref() == Some(x), || format!("e_{a} f_{a} {x}"));
                weight
                    .record(space.weight(y) == wt - &space.algebra().simple_root(a), || format!("f_{a} {x}"));
            }
            if let Some(y) = &ex {
                inverse.record(space.f(y, a).as_ref() == Some(x), || format!("f_{a} e_{a} {x}"));
            }
            let (phi, eps) = (space.phi(x, a), space.eps(x, a));
            strings.record(
                phi == space.phi_by_walk(x, a) as i64 && eps == space.eps_by_walk(x, a) as i64,
                || format!("{x} at node {a}: formula ({phi}, {eps})"),
            );
            pairing.record(phi - eps == wt.pairing(a), || format!("{x} at node {a}"));
            let raw = space.apply_f_raw(x, a);
            incremental.record(raw == f_from_scratch(space, x, a), || format!("f_{a} {x}"));
            incremental.record(ex == e_from_scratch(space, x, a), || format!("e_{a} {x}"));
            definedness.record((phi > 0) == set.contains(&raw), || {
                format!("f_{a} {x}: phi = {phi}, raw result {raw}")
            });
            for s in x.strings(a) {
                label_floor.record(s.label >= -(s.length as i64), || format!("{x}: string {s:?}"));
                colabel_floor.record(s.label <= space.vacancy(x, a, s.length), || {
                    format!("{x}: string {s:?} at node {a}")
                });
            }
            let top = space.stable_index(x);
            let p = |i: usize| space.vacancy(x, a, i);
            stability.record((top..top + 3).all(|i| p(i) == wt.pairing(a)), || format!("{x} at node {a}"));
            for i in 1..=top + 1 {
                let prev = if i == 1 { 0 } else { p(i - 1) };
                let d2 = -prev + 2 * p(i) - p(i + 1);
                if x.multiplicity(a, i) == 0 {
                    convexity.record(d2 >= 0, || format!("{x}: p_{i}^({a})"));
                }
                let bound: i64 = space
                    .algebra()
                    .nodes()
                    .map(|b| -space.algebra().cartan(a, b) * x.multiplicity(b, i) as i64)
                    .sum();
                second_difference.record(d2 >= bound, || format!("{x}: i = {i}, a = {a}"));
            }
        }
    }
    InvariantReport {
        checks: vec![
            canonical,
            disjoint,
            inverse,
            weight,
            strings,
            pairing,
            cocharge,
            label_floor,
            colabel_floor,
            incremental,
            definedness,
            stability,
            convexity,
            second_difference,
        ],
        notes: vec![format!("|RC(L)| = {}; components: {}", set.len(), set.components.len())],
    }
}

/// Stembridge's axioms on every component of `set`.
pub fn check_components(space: &RcSpace, set: &RcSet) -> Result<(InvariantReport, Vec<AxiomReport>)> {
    let mut check = Check::new("Stembridge axioms on every component");
    let mut reports = Vec::new();
    for c in 0..set.components.len() {
        let report = verify_regular(&set.component_graph(c), space.algebra())?;
        check.record(report.all_pass(), || {
            let (axiom, w) = report.failures().next().expect("a failure");
            format!("component {c}: {axiom} at {w}")
        });
        reports.push(report);
    }
    Ok((InvariantReport { checks: vec![check], notes: Vec::new() }, reports))
}

/// Type-A checks on every weight fiber: lower-bound tableaux, extended membership and the
/// fermionic formula.
pub fn check_type_a(ta: &TypeASpace, set: &RcSet) -> Result<InvariantReport> {
    let mut report = check_extended(ta, set)?;
    report.extend(check_fermionic(ta, set)?);
    Ok(report)
}

/// Lower-bound tableau invariants and equality of the extended set with each generated
/// fiber.
pub fn check_extended(ta: &TypeASpace, set: &RcSet) -> Result<InvariantReport> {
    let space = ta.space();
    let mut count = Check::new("|A(lambda')| = product of binomials");
    let mut rows = Check::new("tableau rows weakly decrease");
    let mut recurrence = Check::new("lower-bound recurrence");
    let mut staircase = Check::new("staircase tableau witnesses highest weights");
    let mut ext = Check::new("extended set = generated fiber");
    for (w, members) in &set.fibers {
        let lambda = ta.tuple_for(w)?;
        let tableaux = enumerate_lower_bound_tableaux(&lambda);
        count.record(tableaux.len() as u128 == lower_bound_tableau_count(&lambda), || lambda.to_string());
        let limit = lambda.column_lengths()[0] + 2;
        for t in &tableaux {
            rows.record(t.rows_weakly_decreasing(), || t.to_string());
            recurrence.record(t.satisfies_recurrence(limit), || t.to_string());
        }
        let fiber: BTreeSet<RiggedConfiguration> =
            members.iter().map(|&k| set.elements()[k].clone()).collect();
        let extended = ta.extended_rcs(&lambda)?;
        ext.record(extended == fiber, || {
            format!("lambda = {lambda}: {} extended vs {} generated", extended.len(), fiber.len())
        });
    }
    for comp in &set.components {
        let hw = &set.elements()[comp[0]];
        let lambda = ta.tuple_for(&set.weights[comp[0]])?;
        let c = lambda.column_lengths();
        let stair = LowerBoundTableau::new((1..lambda.len()).map(|k| (1..=c[k]).rev().collect()).collect())?;
        let ok = space.algebra().nodes().all(|a| {
            hw.strings(a).iter().all(|s| stair.lower_bound(a, s.length).is_ok_and(|m| m <= 0 && m <= s.label))
        });
        staircase.record(ok, || hw.to_string());
    }
    Ok(InvariantReport { checks: vec![count, rows, recurrence, staircase, ext], notes: Vec::new() })
}

/// `fermionic_m = direct_m` on every weight fiber.
pub fn check_fermionic(ta: &TypeASpace, set: &RcSet) -> Result<InvariantReport> {
    let mut fermionic = Check::new("fermionic M = direct M");
    let mut notes = Vec::new();
    for w in set.fibers.keys() {
        let lambda = ta.tuple_for(w)?;
        let f = ta.fermionic_m(&lambda)?;
        let d = ta.direct_m(set, &lambda)?;
        fermionic.record(f == d, || format!("lambda = {lambda}"));
        let size = lower_bound_tableau_count(&lambda);
        if size > 1 {
            notes.push(format!("lambda = {lambda}: |A(lambda')| = {size}"));
        }
    }
    Ok(InvariantReport { checks: vec![fermionic], notes })
}

/// Result of comparing `RC(L)` with the tableau-path model of the same tensor product.
#[derive(Clone, Debug, Serialize)]
pub struct OracleComparison {
    pub report: InvariantReport,
    /// `(lambda, |P(B, lambda)|, |RC(L, lambda)|)` for every weight of either side.
    pub fibers: Vec<(Weight, usize, usize)>,
}

/// Fiber cardinalities, component sizes and component isomorphism against [`PathSpace`].
pub fn check_against_paths(ta: &TypeASpace, set: &RcSet, cap: usize) -> Result<OracleComparison> {
    let space = ta.space();
    let paths = PathSpace::from_multiplicities(ta.n(), space.multiplicities())?;
    let all = paths.all_paths()?;
    let mut cardinality = Check::new("|P(B, lambda)| = |RC(L, lambda)|");
    let mut sizes = Check::new("component size = SSYT count");
    let mut iso = Check::new("RC component isomorphic to path component");
    let mut hw_counts = Check::new("highest weights agree with multiplicity");

    let mut path_fibers: BTreeMap<Weight, usize> = BTreeMap::new();
    for b in &all {
        *path_fibers.entry(paths.weight(b)).or_default() += 1;
    }
    let mut keys: Vec<Weight> = path_fibers.keys().chain(set.fibers.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    let mut fibers = Vec::new();
    for w in keys {
        let p = path_fibers.get(&w).copied().unwrap_or(0);
        let r = set.fibers.get(&w).map_or(0, Vec::len);
        cardinality.record(p == r, || format!("weight {w}: {p} paths, {r} rigged configurations"));
        fibers.push((w, p, r));
    }

    let mut path_hw: BTreeMap<Weight, Vec<TensorPath>> = BTreeMap::new();
    for b in all.into_iter().filter(|b| paths.is_highest_weight(b)) {
        path_hw.entry(paths.weight(&b)).or_default().push(b);
    }
    let mut rc_hw: BTreeMap<Weight, usize> = BTreeMap::new();
    let mut path_graphs: HashMap<Weight, ColoredGraph> = HashMap::new();
    for (c, comp) in set.components.iter().enumerate() {
        let w = &set.weights[comp[0]];
        *rc_hw.entry(w.clone()).or_default() += 1;
        let lambda = ta.tuple_for(w)?;
        let expected = ssyt_count(lambda.parts(), ta.n());
        sizes.record(comp.len() as u64 == expected, || {
            format!("component {c} of highest weight {lambda}: {} vs {expected}", comp.len())
        });
        let Some(seed) = path_hw.get(w).and_then(|v| v.first()) else {
            iso.record(false, || format!("no highest-weight path of weight {w}"));
            continue;
        };
        if !path_graphs.contains_key(w) {
            path_graphs.insert(w.clone(), paths.generate_component(seed, cap)?.graph);
        }
        let ok = isomorphic(&set.component_graph(c), &path_graphs[w])?;
        iso.record(ok, || format!("component {c} of highest weight {w}"));
    }
    for (w, bs) in &path_hw {
        let r = rc_hw.get(w).copied().unwrap_or(0);
        hw_counts
            .record(bs.len() == r, || format!("weight {w}: {} paths vs {r} rigged configurations", bs.len()));
    }
    Ok(OracleComparison {
        report: InvariantReport { checks: vec![cardinality, sizes, iso, hw_counts], notes: Vec::new() },
        fibers,
    })
}

/// Promotion checks over the whole promotion table. Commutation failures are fatal only
/// for a single tensor factor.
pub fn check_promotion(pr: &PromotionSpace) -> Result<InvariantReport> {
    let table = pr.table()?;
    let mut rotation = Check::new("pr rotates weights");
    let mut inverse = Check::new("pr^-1 pr = id");
    let mut affine = Check::new("e_0 f_0 = id");
    let mut chain = Check::new("rho picks weakly decreasing lengths");
    let mut longest = Check::new("lifted longest parts decrease");
    let mut commute = Check::new("pr f_a = f_{a+1} pr").monitored(!pr.is_single_factor());
    for x in table.set.elements() {
        let lambda = pr.tuple_of(x)?;
        let trace = pr.promote_traced(x, &lambda)?;
        rotation.record(pr.tuple_of(&trace.result)? == lambda.rotate(), || x.to_string());
        inverse.record(&pr.promote_inverse(&trace.result)? == x, || x.to_string());
        if let Some(y) = pr.f0(x)? {
            affine.record(pr.e0(&y)?.as_ref() == Some(x), || x.to_string());
        }
        for pass in &trace.passes {
            chain.record(pass.lengths.windows(2).all(|w| w[0] >= w[1]), || {
                format!("{x}: lengths {:?}", pass.lengths)
            });
        }
        let parts = trace.lifted_longest_parts();
        longest.record(parts.windows(2).all(|w| w[0] >= w[1]), || format!("{x}: {parts:?}"));
    }
    let report = pr.commutation_report()?;
    commute.checked = report.checked + report.definedness_mismatches.len();
    commute.violations = report.mismatches.len() + report.definedness_mismatches.len();
    commute.first_violation = report
        .mismatches
        .iter()
        .chain(&report.definedness_mismatches)
        .next()
        .map(|(x, a)| format!("{x} with a = {a}"));
    Ok(InvariantReport {
        checks: vec![rotation, inverse, affine, chain, longest, commute],
        notes: vec![format!("order of pr on RC(L): {}", table.order())],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::AlgebraData;
    use crate::config::MultiplicityArray;
    use crate::crystal::DEFAULT_VERTEX_CAP;

    #[test]
    fn three_boxes_pass_everything() {
        let space = RcSpace::new(
            AlgebraData::type_a(2).unwrap(),
            MultiplicityArray::from_triples([(1, 1, 3)]).unwrap(),
        )
        .unwrap();
        let set = space.generate_rc_set(DEFAULT_VERTEX_CAP).unwrap();
        let report = check_rc_set(&space, &set);
        assert!(report.passed(), "{report}");
        let (axioms, _) = check_components(&space, &set).unwrap();
        assert!(axioms.passed());
        let ta = TypeASpace::new(space).unwrap();
        assert!(check_type_a(&ta, &set).unwrap().passed());
        let oracle = check_against_paths(&ta, &set, DEFAULT_VERTEX_CAP).unwrap();
        assert!(oracle.report.passed(), "{}", oracle.report);
        let pr = PromotionSpace::new(ta.space().clone(), DEFAULT_VERTEX_CAP).unwrap();
        let promo = check_promotion(&pr).unwrap();
        assert!(promo.passed(), "{promo}");
    }

    #[test]
    fn from_scratch_operators_agree_on_golden_example() {
        let space = RcSpace::new(
            AlgebraData::type_a(2).unwrap(),
            MultiplicityArray::from_triples([(1, 1, 1), (1, 3, 1), (2, 2, 1)]).unwrap(),
        )
        .unwrap();
        let x = RiggedConfiguration::new(vec![vec![(2, -1), (1, -1)], vec![(3, -2)]]).unwrap();
        assert_eq!(f_from_scratch(&space, &x, 1), space.apply_f_raw(&x, 1));
        assert_eq!(e_from_scratch(&space, &x, 1), space.e(&x, 1));
    }
}
