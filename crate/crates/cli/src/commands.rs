//! Subcommand implementations. Each returns its full output so that printing and the exit
//! status are decided in one place.

use std::fmt::Write as _;
use std::path::Path;

use rigged_core::invariants::{
    check_against_paths, check_components, check_promotion, check_rc_set, check_type_a, InvariantReport,
};
use rigged_core::{
    verify_regular, AxiomReport, GraphFile, LaurentPolynomial, PromotionSpace, RcSet, RcSpace,
    RiggedConfiguration, TypeASpace, TypeATuple, Weight,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::instance::{read_input, Instance};
use crate::render::{self, RcJson, Style};
use crate::{CliError, Common};

pub struct Output {
    pub text: String,
    /// `false` when a check failed (exit status 1).
    pub ok: bool,
}

impl Output {
    fn new(common_json: bool, text: String, value: Value, ok: bool) -> Self {
        let text = if common_json { json_text(&value) } else { text };
        Output { text, ok }
    }
}

fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn type_a(inst: &Instance) -> Result<TypeASpace, CliError> {
    Ok(TypeASpace::new(inst.space.clone())?)
}

/// The instance's `lambda`, else the normalized tuple of its `weight`.
fn instance_lambda(inst: &Instance, ta: &TypeASpace) -> Result<Option<TypeATuple>, CliError> {
    if let Some(l) = &inst.lambda {
        return Ok(Some(l.clone()));
    }
    inst.weight.as_ref().map(|w| ta.tuple_for(w)).transpose().map_err(Into::into)
}

/// Renders a list of elements, diagrams separated by blank lines.
fn render_list(space: &RcSpace, elements: &[RiggedConfiguration], style: Style, out: &mut String) {
    for (k, rc) in elements.iter().enumerate() {
        if k > 0 && !style.compact {
            out.push('\n');
        }
        out.push_str(&render::text(space, rc, style));
    }
}

pub fn hw(c: &Common) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let space = &inst.space;
    let weights = match &inst.weight {
        Some(w) => vec![w.clone()],
        None => space.dominant_weights(),
    };
    let mut text = String::new();
    let mut values = Vec::new();
    for (k, w) in weights.iter().enumerate() {
        let hws = space.highest_weight_rcs(w)?;
        if k > 0 {
            text.push('\n');
        }
        writeln!(text, "weight {w}: {} highest-weight", hws.len()).unwrap();
        render_list(space, &hws, c.style(), &mut text);
        values.push(json!({
            "weight": w,
            "elements": hws.iter().map(|x| RcJson::new(space, x, c.style())).collect::<Vec<_>>(),
        }));
    }
    Ok(Output::new(c.json, text, Value::Array(values), true))
}

fn fiber_label(ta: Option<&TypeASpace>, w: &Weight) -> Result<String, CliError> {
    Ok(match ta {
        Some(ta) => format!("weight {w} lambda {}", ta.tuple_for(w)?),
        None => format!("weight {w}"),
    })
}

pub fn closure(c: &Common, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let set = inst.space.generate_rc_set(cap)?;
    let ta = TypeASpace::new(inst.space.clone()).ok();
    let mut text = String::new();
    writeln!(text, "|RC(L)| = {}", set.len()).unwrap();
    writeln!(text, "components: {}", set.components.len()).unwrap();
    if set.overlaps > 0 {
        writeln!(text, "overlapping components: {}", set.overlaps).unwrap();
    }
    let mut fibers = Vec::new();
    for (w, members) in &set.fibers {
        writeln!(text, "{}: {}", fiber_label(ta.as_ref(), w)?, members.len()).unwrap();
        let lambda = ta.as_ref().map(|t| t.tuple_for(w)).transpose()?;
        fibers.push(json!({"weight": w, "lambda": lambda, "size": members.len()}));
    }
    let value = json!({
        "size": set.len(),
        "components": set.components.len(),
        "overlaps": set.overlaps,
        "fibers": fibers,
    });
    Ok(Output::new(c.json, text, value, set.overlaps == 0))
}

pub fn graph(c: &Common, dot: bool, component: Option<usize>, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let space = &inst.space;
    let out_of_range =
        |k: usize, n: usize| CliError::Input(format!("component {k} out of range (there are {n})"));
    let graph = if let Some(rc) = &inst.element {
        space.generate_component(rc, cap)?.graph.graph
    } else if let Some(w) = &inst.weight {
        let hws = space.highest_weight_rcs(w)?;
        let k = component.unwrap_or(0);
        let seed = hws.get(k).ok_or_else(|| out_of_range(k, hws.len()))?;
        space.generate_component(seed, cap)?.graph.graph
    } else {
        let set = space.generate_rc_set(cap)?;
        match component {
            Some(k) if k >= set.components.len() => return Err(out_of_range(k, set.components.len())),
            Some(k) => set.component_graph(k),
            None => set.graph.graph,
        }
    };
    let file = GraphFile::new(space.algebra(), &graph);
    let text = if dot { file.to_dot() } else { file.to_json() + "\n" };
    Ok(Output { text, ok: true })
}

#[derive(Serialize)]
struct ComponentFailure {
    component: usize,
    seed: RiggedConfiguration,
    report: AxiomReport,
}

/// Lists failing components with their witnesses translated back to rigged configurations.
fn axiom_failures(set: &RcSet, reports: &[AxiomReport], text: &mut String) -> Vec<ComponentFailure> {
    let mut out = Vec::new();
    for (k, report) in reports.iter().enumerate() {
        if report.all_pass() {
            continue;
        }
        let members = &set.components[k];
        let seed = set.elements()[members[0]].clone();
        writeln!(text, "component {k} (seed {seed}):").unwrap();
        for line in report.to_string().lines() {
            writeln!(text, "  {line}").unwrap();
        }
        for (axiom, w) in report.failures() {
            writeln!(text, "  {axiom} witness: {}", set.elements()[members[w.vertex]]).unwrap();
        }
        out.push(ComponentFailure { component: k, seed, report: report.clone() });
    }
    out
}

pub fn verify(c: &Common, axioms_only: bool, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let space = &inst.space;
    let set = space.generate_rc_set(cap)?;
    let (components, reports) = check_components(space, &set)?;
    let failing = reports.iter().filter(|r| !r.all_pass()).count();
    let mut text = String::new();
    let axioms = if failing == 0 {
        "all pass".to_string()
    } else {
        format!("{failing} of {} components fail", reports.len())
    };
    writeln!(text, "axioms: {axioms}; components: {}; |RC(L)| = {}", set.components.len(), set.len())
        .unwrap();
    let failures = axiom_failures(&set, &reports, &mut text);

    let mut invariants = check_rc_set(space, &set);
    invariants.extend(components);
    if !axioms_only {
        if let Ok(ta) = TypeASpace::new(space.clone()) {
            invariants.extend(check_type_a(&ta, &set)?);
            invariants.extend(check_against_paths(&ta, &set, cap)?.report);
            invariants.extend(check_promotion(&PromotionSpace::new(space.clone(), cap)?)?);
        }
    }
    text.push_str(&invariants.to_string());
    let ok = failing == 0 && set.overlaps == 0 && invariants.passed();
    let value = json!({
        "axioms_pass": failing == 0,
        "components": set.components.len(),
        "size": set.len(),
        "overlaps": set.overlaps,
        "failures": failures,
        "invariants": invariants,
    });
    Ok(Output::new(c.json, text, value, ok))
}

pub fn verify_graph(path: &Path, json: bool) -> Result<Output, CliError> {
    let input = read_input(path)?;
    let file = if input.trim_start().starts_with('{') {
        GraphFile::from_json(&input)?
    } else {
        GraphFile::from_dot(&input)?
    };
    let alg = file.algebra()?;
    let graph = file.graph();
    let report = verify_regular(&graph, &alg)?;
    let mut text = String::new();
    let verdict = if report.all_pass() { "all pass" } else { "FAIL" };
    writeln!(text, "axioms: {verdict}; vertices: {}", report.vertices).unwrap();
    text.push_str(&report.to_string());
    for (axiom, w) in report.failures() {
        writeln!(text, "{axiom} witness: {}", graph.vertices[w.vertex]).unwrap();
    }
    let ok = report.all_pass();
    Ok(Output::new(json, text, serde_json::to_value(&report).expect("report serializes"), ok))
}

/// The tuples to evaluate: the instance's, else every weight fiber of `RC(L)`.
fn lambdas(inst: &Instance, ta: &TypeASpace, set: Option<&RcSet>) -> Result<Vec<TypeATuple>, CliError> {
    match instance_lambda(inst, ta)? {
        Some(l) => Ok(vec![l]),
        None => Ok(ta.fiber_tuples(set.expect("set is generated when no lambda is given"))?),
    }
}

fn write_poly(text: &mut String, header: Option<String>, p: &LaurentPolynomial) {
    if let Some(h) = header {
        writeln!(text, "{h}").unwrap();
    }
    text.push_str(&p.to_string());
}

pub fn fermionic(c: &Common, both: bool, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let ta = type_a(&inst)?;
    let needs_set = both || instance_lambda(&inst, &ta)?.is_none();
    let set = if needs_set { Some(inst.space.generate_rc_set(cap)?) } else { None };
    let lambdas = lambdas(&inst, &ta, set.as_ref())?;
    let many = lambdas.len() > 1;
    let mut text = String::new();
    let mut values = Vec::new();
    let mut ok = true;
    for lambda in &lambdas {
        let f = ta.fermionic_m(lambda)?;
        let header = many.then(|| format!("lambda = {lambda}:"));
        match set.as_ref().filter(|_| both) {
            None => {
                write_poly(&mut text, header, &f);
                values.push(json!({"lambda": lambda, "fermionic": f}));
            }
            Some(set) => {
                let d = ta.direct_m(set, lambda)?;
                let equal = f == d;
                ok &= equal;
                if equal {
                    write_poly(&mut text, header, &f);
                } else {
                    writeln!(text, "lambda = {lambda}: MISMATCH").unwrap();
                    write_poly(&mut text, Some("fermionic:".into()), &f);
                    write_poly(&mut text, Some("direct:".into()), &d);
                }
                values.push(json!({"lambda": lambda, "fermionic": f, "direct": d, "equal": equal}));
            }
        }
    }
    Ok(Output::new(c.json, text, Value::Array(values), ok))
}

pub fn direct(c: &Common, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let ta = type_a(&inst)?;
    let set = inst.space.generate_rc_set(cap)?;
    let lambdas = lambdas(&inst, &ta, Some(&set))?;
    let many = lambdas.len() > 1;
    let mut text = String::new();
    let mut values = Vec::new();
    for lambda in &lambdas {
        let d = ta.direct_m(&set, lambda)?;
        write_poly(&mut text, many.then(|| format!("lambda = {lambda}:")), &d);
        values.push(json!({"lambda": lambda, "direct": d}));
    }
    Ok(Output::new(c.json, text, Value::Array(values), true))
}

pub fn extended(c: &Common) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let ta = type_a(&inst)?;
    let rc = inst.require_element("extended")?;
    let lambda = match instance_lambda(&inst, &ta)? {
        Some(l) => l,
        None => ta.tuple_for(&inst.space.weight(rc))?,
    };
    let witnesses = ta.extended_witnesses(&lambda, rc)?;
    let mut text = String::new();
    writeln!(text, "lambda: {lambda}").unwrap();
    writeln!(text, "member: {}", if witnesses.is_empty() { "no" } else { "yes" }).unwrap();
    if let Some(t) = witnesses.first() {
        writeln!(text, "witness: {t}").unwrap();
        writeln!(text, "witnesses: {}", witnesses.len()).unwrap();
    }
    text.push_str(&render::text(&inst.space, rc, c.style()));
    let value = json!({
        "lambda": lambda,
        "member": !witnesses.is_empty(),
        "witnesses": witnesses.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "element": RcJson::new(&inst.space, rc, c.style()),
    });
    Ok(Output::new(c.json, text, value, true))
}

pub fn promote(c: &Common, trace: bool, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let pr = PromotionSpace::new(inst.space.clone(), cap)?;
    let rc = inst.require_element("promote")?;
    let lambda = match &inst.lambda {
        Some(l) => l.clone(),
        None => pr.tuple_of(rc)?,
    };
    if let Some(w) = &inst.weight {
        if inst.lambda.is_none() && pr.typea().tuple_for(w)? != lambda {
            return Err(CliError::Input(format!("element does not have weight {w}")));
        }
    }
    let t = pr.promote_traced(rc, &lambda)?;
    let style = c.style();
    let rotated = lambda.rotate();
    let mut text = String::new();
    if trace {
        writeln!(text, "lambda: {lambda}").unwrap();
        writeln!(text, "lifted:").unwrap();
        text.push_str(&render::text(pr.ambient(), &t.lifted, style));
        for (k, pass) in t.passes.iter().enumerate() {
            let lengths: Vec<String> = pass.lengths.iter().map(ToString::to_string).collect();
            writeln!(text, "rho pass {} (lengths {}):", k + 1, lengths.join(",")).unwrap();
            text.push_str(&render::text(pr.ambient(), &pass.result, style));
        }
        writeln!(text, "result (lambda {rotated}):").unwrap();
    }
    text.push_str(&render::text(pr.space(), &t.result, style));
    let mut value = json!({
        "lambda": lambda,
        "result": RcJson::new(pr.space(), &t.result, style),
        "result_lambda": rotated,
    });
    if trace {
        value["trace"] = json!({
            "lifted": RcJson::new(pr.ambient(), &t.lifted, style),
            "passes": t.passes.iter().map(|p| json!({
                "lengths": p.lengths,
                "result": RcJson::new(pr.ambient(), &p.result, style),
            })).collect::<Vec<_>>(),
        });
    }
    Ok(Output::new(c.json, text, value, true))
}

#[derive(Clone, Copy, Debug)]
pub enum AffineOp {
    F0,
    E0,
}

pub fn affine_op(c: &Common, op: AffineOp, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let pr = PromotionSpace::new(inst.space.clone(), cap)?;
    let (name, result) = match op {
        AffineOp::F0 => ("f0", pr.f0(inst.require_element("f0")?)?),
        AffineOp::E0 => ("e0", pr.e0(inst.require_element("e0")?)?),
    };
    let text = match &result {
        Some(y) => render::text(pr.space(), y, c.style()),
        None => "undefined\n".to_string(),
    };
    let value = json!({
        "operator": name,
        "result": result.as_ref().map(|y| RcJson::new(pr.space(), y, c.style())),
    });
    Ok(Output::new(c.json, text, value, true))
}

pub fn oracle(c: &Common, cap: usize) -> Result<Output, CliError> {
    let inst = Instance::load(&c.instance)?;
    let ta = type_a(&inst)?;
    let set = inst.space.generate_rc_set(cap)?;
    let cmp = check_against_paths(&ta, &set, cap)?;
    let mut text = String::new();
    let mut fibers = Vec::new();
    for (w, paths, rcs) in &cmp.fibers {
        let lambda = ta.tuple_for(w)?;
        writeln!(text, "lambda {lambda}: paths {paths}, rigged configurations {rcs}").unwrap();
        fibers.push(json!({"lambda": lambda, "paths": paths, "rigged_configurations": rcs}));
    }
    let report: &InvariantReport = &cmp.report;
    text.push_str(&report.to_string());
    let value = json!({"fibers": fibers, "report": report});
    Ok(Output::new(c.json, text, value, report.passed()))
}
