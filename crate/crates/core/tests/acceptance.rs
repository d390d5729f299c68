//! Acceptance criteria 1-12, one PASS/FAIL line each. Exits nonzero if any criterion
//! fails or exceeds its time limit.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{Instance, BATTERY, SINGLE_FACTORS};
use rigged_core::invariants::{
    check_against_paths, check_components, check_extended, check_fermionic, check_rc_set, InvariantReport,
};
use rigged_core::{
    enumerate_lower_bound_tableaux, isomorphic, AlgebraData, Family, LowerBoundTableau, MultiplicityArray,
    PathSpace, PromotionSpace, RcSet, RcSpace, RectTableau, RiggedConfiguration, TensorPath, TypeASpace,
    TypeATuple, DEFAULT_VERTEX_CAP,
};

type Outcome = Result<String, String>;

fn rc(nodes: Vec<Vec<(usize, i64)>>) -> RiggedConfiguration {
    RiggedConfiguration::new(nodes).expect("valid literal")
}

fn space(family: Family, rank: usize, triples: &[(usize, usize, usize)]) -> RcSpace {
    RcSpace::new(
        AlgebraData::new(family, rank).unwrap(),
        MultiplicityArray::from_triples(triples.iter().copied()).unwrap(),
    )
    .unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn generated(inst: &Instance) -> Result<(RcSpace, RcSet), String> {
    let s = inst.space();
    let set = s.generate_rc_set(DEFAULT_VERTEX_CAP).map_err(|e| format!("{}: {e}", inst.name))?;
    Ok((s, set))
}

fn golden_operators() -> Outcome {
    let s = space(Family::A, 2, &[(1, 1, 1), (1, 3, 1), (2, 2, 1)]);
    let x = rc(vec![vec![(2, -1), (1, -1)], vec![(3, -2)]]);
    let f = s.f(&x, 1).ok_or("f_1 undefined")?;
    let e = s.e(&x, 1).ok_or("e_1 undefined")?;
    let want_f = rc(vec![vec![(3, -2), (1, -1)], vec![(3, -1)]]);
    let want_e = rc(vec![vec![(2, 1)], vec![(3, -3)]]);
    ensure(f == want_f, || format!("f_1 gave {f}"))?;
    ensure(e == want_e, || format!("e_1 gave {e}"))?;
    Ok(format!("f_1 = {f}; e_1 = {e}"))
}

fn golden_graph() -> Outcome {
    let s = space(Family::A, 2, &[(1, 1, 3)]);
    let labels: [(&str, RiggedConfiguration); 8] = [
        ("121", rc(vec![vec![(1, 0)], vec![]])),
        ("221", rc(vec![vec![(2, -1)], vec![]])),
        ("231", rc(vec![vec![(2, 0)], vec![(1, -1)]])),
        ("331", rc(vec![vec![(2, 1)], vec![(2, -2)]])),
        ("332", rc(vec![vec![(2, -1), (1, -1)], vec![(2, -1)]])),
        ("131", rc(vec![vec![(1, 1)], vec![(1, -1)]])),
        ("132", rc(vec![vec![(1, -1), (1, -1)], vec![(1, 0)]])),
        ("232", rc(vec![vec![(2, -2), (1, -1)], vec![(1, 0)]])),
    ];
    let golden_edges: BTreeSet<(&str, usize, &str)> = [
        ("121", 1, "221"),
        ("121", 2, "131"),
        ("221", 2, "231"),
        ("231", 2, "331"),
        ("331", 1, "332"),
        ("131", 1, "132"),
        ("132", 1, "232"),
        ("232", 2, "332"),
    ]
    .into_iter()
    .collect();
    let name = |x: &RiggedConfiguration| labels.iter().find(|(_, y)| y == x).map(|(n, _)| *n);

    let comp = s.generate_component(&labels[0].1, DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
    ensure(comp.len() == 8, || format!("rigged component has {} vertices", comp.len()))?;
    let mut rc_edges = BTreeSet::new();
    for (x, a, y) in comp.graph.edge_triples() {
        let (Some(nx), Some(ny)) = (name(x), name(y)) else {
            return Err(format!("unexpected vertex in edge {x} -{a}-> {y}"));
        };
        rc_edges.insert((nx, a, ny));
    }
    ensure(rc_edges == golden_edges, || format!("rigged edges {rc_edges:?}"))?;

    let paths = PathSpace::new(3, vec![(1, 1); 3]).map_err(|e| e.to_string())?;
    let top = TensorPath([1, 2, 1].iter().map(|&x| RectTableau::new(vec![vec![x]]).unwrap()).collect());
    let pg = paths.generate_component(&top, DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
    let path_edges: BTreeSet<(String, usize, String)> =
        pg.edge_triples().map(|(x, a, y)| (x.to_string(), a, y.to_string())).collect();
    let want: BTreeSet<(String, usize, String)> =
        golden_edges.iter().map(|&(x, a, y)| (x.to_string(), a, y.to_string())).collect();
    ensure(pg.len() == 8 && path_edges == want, || format!("path edges {path_edges:?}"))?;
    let iso = isomorphic(&comp.graph.graph, &pg.graph).map_err(|e| e.to_string())?;
    ensure(iso, || "components are not isomorphic".into())?;
    Ok("8 vertices, 8 edges in both labelings; isomorphic".into())
}

fn regularity() -> Outcome {
    let mut components = 0;
    for inst in BATTERY {
        let (s, set) = generated(inst)?;
        let (report, _) = check_components(&s, &set).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{}: {}", inst.name, report))?;
        components += set.components.len();
    }
    Ok(format!("{components} components over {} instances, zero failures", BATTERY.len()))
}

fn cocharge() -> Outcome {
    let mut elements = 0;
    for inst in BATTERY {
        let (s, set) = generated(inst)?;
        let report = check_rc_set(&s, &set);
        let c = report.get("cocharge constant on components").expect("check present");
        ensure(c.passed(), || format!("{}: {c}", inst.name))?;
        elements += c.checked;
    }
    Ok(format!("{elements} elements, zero violations"))
}

fn type_a_report(
    name: &str,
    check: fn(&TypeASpace, &RcSet) -> rigged_core::Result<InvariantReport>,
) -> Outcome {
    let mut fibers = 0;
    for inst in BATTERY.iter().filter(|i| i.is_type_a()) {
        let (s, set) = generated(inst)?;
        let ta = TypeASpace::new(s).map_err(|e| e.to_string())?;
        let report = check(&ta, &set).map_err(|e| e.to_string())?;
        let c = report.get(name).expect("check present");
        ensure(c.passed(), || format!("{}: {c}", inst.name))?;
        fibers += c.checked;
    }
    Ok(format!("{fibers} weight fibers, all equal"))
}

fn ext_equals_unres() -> Outcome {
    type_a_report("extended set = generated fiber", check_extended)
}

fn fermionic() -> Outcome {
    let detail = type_a_report("fermionic M = direct M", check_fermionic)?;
    let s = space(Family::A, 3, &[(1, 1, 3)]);
    let set = s.generate_rc_set(DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
    let ta = TypeASpace::new(s).map_err(|e| e.to_string())?;
    let lambda = TypeATuple::new(vec![0, 1, 1, 1]);
    let size = enumerate_lower_bound_tableaux(&lambda).len();
    ensure(size == 6, || format!("|A(lambda')| = {size}"))?;
    let f = ta.fermionic_m(&lambda).map_err(|e| e.to_string())?;
    let literal = ta.fermionic_m_literal(&lambda).map_err(|e| e.to_string())?;
    let d = ta.direct_m(&set, &lambda).map_err(|e| e.to_string())?;
    ensure(f == d && literal == d, || format!("lambda = (0,1,1,1): fermionic {f:?} direct {d:?}"))?;
    Ok(format!("{detail}; lambda = (0,1,1,1) with |A| = 6 included"))
}

fn tableau_list() -> Outcome {
    let got: Vec<String> = enumerate_lower_bound_tableaux(&TypeATuple::new(vec![0, 1, 1, 1]))
        .iter()
        .map(|t| t.to_string())
        .collect();
    let want = ["332/22/1", "332/21/1", "322/21/1", "331/22/1", "331/21/1", "321/21/1"];
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(got.join(" "))
}

fn extended_example() -> Outcome {
    let s = space(Family::A, 3, &[(1, 1, 6)]);
    let ta = TypeASpace::new(s.clone()).map_err(|e| e.to_string())?;
    let lambda = TypeATuple::new(vec![2, 2, 1, 1]);
    let x = rc(vec![vec![(3, -2), (1, 0)], vec![(2, 0)], vec![(1, -1)]]);
    let vac = [s.vacancy(&x, 1, 3), s.vacancy(&x, 1, 1), s.vacancy(&x, 2, 2), s.vacancy(&x, 3, 1)];
    ensure(vac == [0, 3, 0, -1], || format!("vacancies {vac:?}"))?;
    let witnesses = ta.extended_witnesses(&lambda, &x).map_err(|e| e.to_string())?;
    let pinned = LowerBoundTableau::new(vec![vec![4, 3, 2, 1], vec![4, 2], vec![1]]).unwrap();
    let displayed = LowerBoundTableau::new(vec![vec![4, 3, 2, 1], vec![4, 3], vec![1]]).unwrap();
    ensure(witnesses.contains(&pinned), || "column (4,2) tableau is not a witness".into())?;
    let m22 = displayed.lower_bound(2, 2).map_err(|e| e.to_string())?;
    ensure(m22 == 1 && !witnesses.contains(&displayed), || format!("displayed tableau: M_2^(2) = {m22}"))?;
    Ok(format!(
        "accepted with {} witnesses (first {}); vacancies 3,0 / 0 / -1; flagged: the displayed \
         tableau 441/33/2/1 gives M_2^(2) = 1 > label 0, witness pinned to 441/32/2/1",
        witnesses.len(),
        witnesses[0]
    ))
}

fn promotion() -> Outcome {
    let p = PromotionSpace::new(space(Family::A, 3, &[(2, 2, 1)]), DEFAULT_VERTEX_CAP)
        .map_err(|e| e.to_string())?;
    let x = rc(vec![vec![(1, 0)], vec![(2, -1), (1, -1)], vec![(2, -1)]]);
    let trace = p.promote_traced(&x, &TypeATuple::new(vec![1, 0, 1, 2])).map_err(|e| e.to_string())?;
    let lifted = rc(vec![vec![(2, -1)], vec![(2, 1), (1, 0)], vec![(2, -1), (1, -1)], vec![(2, -1)]]);
    let result = rc(vec![vec![], vec![(1, 0)], vec![(1, -1)]]);
    ensure(trace.lifted == lifted, || format!("lifted {}", trace.lifted))?;
    ensure(trace.result == result, || format!("pr = {}", trace.result))?;
    let mut orders = Vec::new();
    for &(rank, r, s) in SINGLE_FACTORS {
        let p = PromotionSpace::new(space(Family::A, rank, &[(r, s, 1)]), DEFAULT_VERTEX_CAP)
            .map_err(|e| e.to_string())?;
        let report = rigged_core::invariants::check_promotion(&p).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("B^{{{r},{s}}} in A_{rank}: {report}"))?;
        orders.push(p.table().map_err(|e| e.to_string())?.order());
    }
    Ok(format!(
        "B^{{2,2}} example reproduced; bijective, rotating and commuting on {} single factors (orders {orders:?})",
        SINGLE_FACTORS.len()
    ))
}

fn d4_remark() -> Outcome {
    let s = space(Family::D, 4, &[(2, 1, 1)]);
    let set = s.generate_rc_set(DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
    let member =
        |middle: Vec<(usize, i64)>| set.contains(&rc(vec![vec![(1, 0)], middle, vec![(1, 0)], vec![(1, 0)]]));
    ensure(member(vec![(1, 0), (1, 0)]), || "first displayed element missing".into())?;
    ensure(member(vec![(1, 0), (1, -1)]), || "second displayed element missing".into())?;
    ensure(!member(vec![(1, -1), (1, -1)]), || "third displayed element present".into())?;
    Ok(format!("|RC(L)| = {}; two displayed elements present, third absent", set.len()))
}

fn oracle_check(name: &str) -> Outcome {
    let mut checked = 0;
    for inst in BATTERY.iter().filter(|i| i.is_type_a()) {
        let (s, set) = generated(inst)?;
        let ta = TypeASpace::new(s).map_err(|e| e.to_string())?;
        let cmp = check_against_paths(&ta, &set, DEFAULT_VERTEX_CAP).map_err(|e| e.to_string())?;
        let c = cmp.report.get(name).expect("check present");
        ensure(c.passed(), || format!("{}: {c}", inst.name))?;
        checked += c.checked;
    }
    Ok(format!("{checked} checked, zero mismatches"))
}

fn cardinality() -> Outcome {
    oracle_check("|P(B, lambda)| = |RC(L, lambda)|")
}

fn component_sizes() -> Outcome {
    oracle_check("component size = SSYT count")
}

/// Number, name, time limit in seconds, check.
type Criterion = (u32, &'static str, Option<u64>, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "golden f_1/e_1 example", Some(1), golden_operators),
        (2, "golden 8-vertex graph", Some(1), golden_graph),
        (3, "A-regularity of every component", Some(60), regularity),
        (4, "cocharge constancy", None, cocharge),
        (5, "extended = unrestricted (type A)", Some(60), ext_equals_unres),
        (6, "fermionic = direct", Some(60), fermionic),
        (7, "A(lambda') example", None, tableau_list),
        (8, "extended-RC example", None, extended_example),
        (9, "promotion", Some(10), promotion),
        (10, "D_4 remark", None, d4_remark),
        (11, "path/RC fiber cardinalities", None, cardinality),
        (12, "component sizes = SSYT counts", None, component_sizes),
    ];
    let mut failed = 0;
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|s| elapsed > Duration::from_secs(s));
        let limit_text = limit.map_or(String::new(), |s| format!(", limit {s} s"));
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("time limit exceeded; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {status} [{name}] ({:.2} s{limit_text}): {detail}",
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of 12 passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
