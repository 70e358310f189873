use crate::problem::{parse_rational, Problem};
use reembed::fibers::{
    cotangent_report, fiber_optimal_reembedding, generic_fiber_ideal, generic_fiber_optimal_reembedding,
    special_fiber_ideal,
};
use reembed::matrix::PolyMatrix;
use reembed::reembedding::{
    all_best_tuples_in_degree, best_separating_reembedding, best_tuple_in_degree, detect_grading,
    positively_graded_optimal, Reembedding,
};
use reembed::jacobian::prune_generators;
use reembed::order::{build_separating_order, TermOrder};
use reembed::separating::{
    coherify, find_separating_tuple, is_coherent, optimality_status, rewrite_eliminate, separating_indeterminates, verify_tuple, SeparatingTuple,
    TupleKind,
};
use reembed::ump::{
    regular_free_reembed, smoothness_check, ump_reembed, ump_solve_with, verify_ump, Smoothness, SolverOptions,
    UmpReembedding,
};
use reembed::{Error, Field, Ideal, Rational, Result, Ring};
use serde_json::{json, Value};
use std::collections::BTreeMap;

pub struct Report {
    pub text: Vec<String>,
    pub result: Value,
    pub verifications: Vec<String>,
}

impl Report {
    fn new() -> Self {
        Report { text: Vec::new(), result: json!({}), verifications: Vec::new() }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    fn verified(&mut self, s: impl Into<String>) {
        self.verifications.push(s.into());
    }
}

fn kind_label(k: TupleKind) -> &'static str {
    match k {
        TupleKind::Plain => "separating",
        TupleKind::Coherent => "coherently separating",
    }
}

fn names(ring: &Ring, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| ring.name(i).to_string()).collect()
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn tuple_json<C: Field>(ring: &Ring, t: &SeparatingTuple<C>) -> Value {
    json!({
        "z": names(ring, &t.z),
        "f": t.f.iter().map(|f| ring.fmt(f)).collect::<Vec<_>>(),
        "kind": kind_label(t.kind),
    })
}

fn tuple_lines<C: Field>(rep: &mut Report, ring: &Ring, t: &SeparatingTuple<C>, indent: &str) {
    rep.line(format!("{indent}Z = ({})", names(ring, &t.z).join(", ")));
    for (i, f) in t.f.iter().enumerate() {
        rep.line(format!("{indent}f{} = {}", i + 1, ring.fmt(f)));
    }
}

fn ideal_lines<C: Field>(rep: &mut Report, indent: &str, label: &str, ideal: &Ideal<C>) {
    rep.line(format!("{indent}{label} in {}:", ideal.ring().describe()));
    if ideal.is_zero() {
        rep.line(format!("{indent}  0"));
    }
    for g in ideal.describe() {
        rep.line(format!("{indent}  {g}"));
    }
}

fn minimal_lines<C: Field>(rep: &mut Report, ideal: &Ideal<C>) -> Vec<String> {
    let pruned: Vec<String> = prune_generators(ideal.gens()).iter().map(|g| ideal.ring().fmt(g)).collect();
    if pruned.len() < ideal.gens().len() {
        rep.line(format!("minimal generators: ({})", pruned.join(", ")));
    }
    pruned
}

fn ideal_json<C: Field>(ideal: &Ideal<C>) -> Value {
    json!({ "ring": ideal.ring().describe(), "weights": ideal.ring().weights(), "generators": ideal.describe() })
}

fn reembedding_report<C: Field>(rep: &mut Report, ideal: &Ideal<C>, re: &Reembedding<C>) -> Value {
    let ring = ideal.ring();
    tuple_lines(rep, ring, &re.tuple, "");
    ideal_lines(rep, "", "target ideal", re.target());
    minimal_lines(rep, re.target());
    rep.line(format!("optimality: {}", re.status.label()));
    if let Some(note) = &re.note {
        rep.line(format!("note: {note}"));
    }
    rep.verified("tuple is coherently separating");
    rep.verified("target ideal equals the elimination ideal");
    json!({
        "tuple": tuple_json(ring, &re.tuple),
        "target": ideal_json(re.target()),
        "optimality": re.status.label(),
        "note": re.note,
        "morphism": re.morphism.describe(),
    })
}

pub fn sep_indets(p: &Problem, ideal: &Ideal) -> Result<Report> {
    let mut rep = Report::new();
    let s = names(&p.ring, &separating_indeterminates(ideal)?);
    rep.line(format!("separating indeterminates: [{}]", s.join(", ")));
    rep.result = json!({ "indeterminates": s });
    Ok(rep)
}

fn tuple_for(p: &Problem, ideal: &Ideal, z: &[usize], from_file: bool, coherent: bool) -> Result<SeparatingTuple> {
    if from_file {
        let f = p.tuple.clone().ok_or_else(|| Error::InvalidInput("the problem file has no `tuple` statement".into()))?;
        if f.len() != z.len() {
            return Err(Error::InvalidInput(format!("tuple has {} entries for {} indeterminates", f.len(), z.len())));
        }
        if z.iter().any(|&i| p.ring.weight(i) == 0) {
            let order = TermOrder::elimination(p.ring.n(), z);
            let kind = if is_coherent(z, &f) { TupleKind::Coherent } else { TupleKind::Plain };
            return Ok(SeparatingTuple { z: z.to_vec(), f, kind, order });
        }
        let kind = verify_tuple(ideal, z, &f)?;
        let mut sorted = z.to_vec();
        sorted.sort_by_key(|&i| p.ring.weight(i));
        let order = build_separating_order(&p.ring, &sorted)?;
        let t = SeparatingTuple { z: z.to_vec(), f, kind, order };
        return if coherent && kind != TupleKind::Coherent { coherify(ideal, &t) } else { Ok(t) };
    }
    let t = find_separating_tuple(ideal, z)?;
    if coherent {
        coherify(ideal, &t)
    } else {
        Ok(t)
    }
}

pub fn find_sep(p: &Problem, ideal: &Ideal, z: &[usize], coherent: bool, from_file: bool) -> Result<Report> {
    let mut rep = Report::new();
    let t = tuple_for(p, ideal, z, from_file, coherent)?;
    let kind = verify_tuple(ideal, &t.z, &t.f)?;
    tuple_lines(&mut rep, &p.ring, &t, "");
    rep.line(format!("kind: {}", kind_label(kind)));
    rep.verified("each f_i lies in the ideal");
    rep.verified("each f_i has leading term z_i under the separating ordering");
    rep.result = tuple_json(&p.ring, &t);
    Ok(rep)
}

pub fn eliminate(p: &Problem, ideal: &Ideal, z: &[usize], oracle: bool, from_file: bool) -> Result<Report> {
    let mut rep = Report::new();
    let t = tuple_for(p, ideal, z, from_file, true)?;
    let el = rewrite_eliminate(ideal, &t.z, &t.f)?;
    let status = optimality_status(ideal, &t.z)?;
    tuple_lines(&mut rep, &p.ring, &t, "");
    rep.line(format!("rewritten generators: ({})", el.rewritten.iter().map(|g| p.ring.fmt(g)).collect::<Vec<_>>().join(", ")));
    ideal_lines(&mut rep, "", "elimination ideal", &el.ideal);
    let minimal = minimal_lines(&mut rep, &el.ideal);
    rep.line(format!("optimality: {}", status.label()));
    rep.verified("each f_i lies in the ideal and z_i - f_i avoids Z");
    if oracle {
        if !el.ideal.equals(&ideal.eliminate_oracle(&t.z)) {
            return Err(Error::Verification("substitution and Groebner elimination disagree".into()));
        }
        rep.verified("equals the elimination ideal from a block-order Groebner basis");
    }
    rep.result = json!({
        "tuple": tuple_json(&p.ring, &t),
        "rewritten": el.rewritten.iter().map(|g| p.ring.fmt(g)).collect::<Vec<_>>(),
        "ideal": ideal_json(&el.ideal),
        "minimal_generators": minimal,
        "optimality": status.label(),
    });
    Ok(rep)
}

pub fn best_reembed(p: &Problem, ideal: &Ideal, degree: Option<u64>, all: bool) -> Result<Report> {
    let mut rep = Report::new();
    match (degree, all) {
        (None, true) => return Err(Error::InvalidInput("--all needs --degree".into())),
        (Some(d), true) => {
            let ts = all_best_tuples_in_degree(ideal, d)?;
            rep.line(format!("{} best tuple(s) in degree {d}", ts.len()));
            for (i, t) in ts.iter().enumerate() {
                rep.line(format!("tuple {}:", i + 1));
                tuple_lines(&mut rep, &p.ring, t, "  ");
            }
            rep.verified("each tuple verified separating");
            rep.result = json!({ "degree": d, "tuples": ts.iter().map(|t| tuple_json(&p.ring, t)).collect::<Vec<_>>() });
        }
        (Some(d), false) => {
            let t = best_tuple_in_degree(ideal, d)?;
            tuple_lines(&mut rep, &p.ring, &t, "");
            rep.verified("tuple verified separating");
            rep.result = json!({ "degree": d, "tuple": tuple_json(&p.ring, &t) });
        }
        (None, false) => {
            let re = best_separating_reembedding(ideal)?;
            rep.result = reembedding_report(&mut rep, ideal, &re);
        }
    }
    Ok(rep)
}

pub fn optimal_positive(ideal: &Ideal) -> Result<Report> {
    let mut rep = Report::new();
    let re = positively_graded_optimal(ideal)?;
    rep.result = reembedding_report(&mut rep, ideal, &re);
    Ok(rep)
}

pub fn fiber(p: &Problem, ideal: &Ideal, point: Option<&str>, generic: bool, report: bool) -> Result<Report> {
    let mut rep = Report::new();
    if generic {
        let g = generic_fiber_ideal(ideal)?;
        ideal_lines(&mut rep, "", "generic fiber", &g);
        let re = generic_fiber_optimal_reembedding(ideal)?;
        rep.line(format!("optimal re-embedding separates ({})", names(g.ring(), re.z()).join(", ")));
        ideal_lines(&mut rep, "", "re-embedded generic fiber", re.target());
        rep.verified("re-embedding tuple is coherently separating");
        rep.result = json!({ "generic": ideal_json(&g), "reembedded": ideal_json(re.target()) });
        return Ok(rep);
    }
    let points: Vec<Vec<Rational>> = match point {
        Some(s) => vec![s.split(',').map(parse_rational).collect::<Result<_>>()?],
        None if !p.points.is_empty() => p.points.clone(),
        None => return Err(Error::InvalidInput("give --point, --generic, or `point` statements".into())),
    };
    let mut out = Vec::new();
    for pt in &points {
        let f = special_fiber_ideal(ideal, pt)?;
        rep.line(format!("point ({}):", rationals(pt).join(", ")));
        ideal_lines(&mut rep, "  ", "fiber", &f);
        let re = fiber_optimal_reembedding(ideal, pt)?;
        ideal_lines(&mut rep, "  ", "re-embedded fiber", re.target());
        let mut entry = json!({ "point": rationals(pt), "fiber": ideal_json(&f), "reembedded": ideal_json(re.target()) });
        if report {
            let r = cotangent_report(ideal, pt)?;
            rep.line(format!("  cotangent dimension: ambient {}, fiber {}", r.ambient_cotangent, r.fiber_cotangent));
            rep.line(format!("  dimension: ambient {}, fiber {}", r.ambient_dim, r.fiber_dim));
            rep.line(format!("  local ring at the point: {}", r.local.label()));
            rep.line(format!("  fiber: {}", if r.fiber_regular { "regular" } else { "singular" }));
            if let Some(t) = &r.free_target {
                rep.line(format!("  fiber is isomorphic to {}", t.describe()));
            }
            entry["report"] = json!({
                "ambient_cotangent": r.ambient_cotangent,
                "fiber_cotangent": r.fiber_cotangent,
                "ambient_dim": r.ambient_dim,
                "fiber_dim": r.fiber_dim,
                "local": r.local.label(),
                "fiber_regular": r.fiber_regular,
                "free_target": r.free_target.as_ref().map(Ring::describe),
            });
        }
        out.push(entry);
    }
    if report {
        rep.verified("ambient cotangent dimension = fiber cotangent dimension + number of parameters");
    }
    rep.result = json!({ "fibers": out });
    Ok(rep)
}

fn matrix_lines(rep: &mut Report, ring: &Ring, m: &PolyMatrix, indent: &str) {
    for row in m {
        rep.line(format!("{indent}[{}]", row.iter().map(|e| ring.fmt(e)).collect::<Vec<_>>().join(", ")));
    }
}

fn matrix_json(ring: &Ring, m: &PolyMatrix) -> Value {
    json!(m.iter().map(|r| r.iter().map(|e| ring.fmt(e)).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn ump_solve(ring: &Ring, name: &str, a: &PolyMatrix, opts: &SolverOptions) -> Result<Report> {
    let mut rep = Report::new();
    let s = ump_solve_with(a, opts)?;
    verify_ump(a, &s.b)?;
    rep.line(format!("completion of {name} ({}):", s.provenance.label()));
    matrix_lines(&mut rep, ring, &s.b, "  ");
    rep.verified("A*B = (I|0)");
    rep.verified(if a.len() == s.b.len() { "B*A = I" } else { "det(B) = 1" });
    rep.result = json!({ "matrix": name, "b": matrix_json(ring, &s.b), "provenance": s.provenance.label() });
    Ok(rep)
}

fn ump_reembedding_report(rep: &mut Report, ring: &Ring, re: &UmpReembedding) -> Value {
    let mut blocks = Vec::new();
    for b in &re.blocks {
        rep.line(format!("degree {} block on ({}), {}:", b.degree, names(ring, &b.vars).join(", "), b.solution.provenance.label()));
        matrix_lines(rep, ring, &b.solution.b, "  ");
        blocks.push(json!({
            "degree": b.degree,
            "vars": names(ring, &b.vars),
            "b": matrix_json(ring, &b.solution.b),
            "provenance": b.solution.provenance.label(),
        }));
    }
    rep.line(format!("separated: ({})", names(ring, &re.nu).join(", ")));
    for (i, q) in re.nu.iter().zip(&re.q) {
        rep.line(format!("  {} - ({})", ring.name(*i), ring.fmt(q)));
    }
    rep.line("homomorphism:");
    for d in re.theta.describe() {
        rep.line(format!("  {d}"));
    }
    ideal_lines(rep, "", "target ideal", &re.target);
    rep.verified("A_d*B_d = (I|0) for every block");
    rep.verified("block automorphism composed with its inverse is the identity");
    rep.verified("leading generators map to zero");
    rep.verified("homomorphism is inverse to the inclusion modulo the ideal");
    json!({
        "order": re.order,
        "blocks": blocks,
        "separated": names(ring, &re.nu),
        "tails": re.q.iter().map(|q| ring.fmt(q)).collect::<Vec<_>>(),
        "homomorphism": re.theta.describe(),
        "target": ideal_json(&re.target),
    })
}

pub fn ump_reembed_cmd(ideal: &Ideal, k: usize, fixtures: &BTreeMap<u64, PolyMatrix>, opts: &SolverOptions) -> Result<Report> {
    let mut rep = Report::new();
    let re = ump_reembed(ideal, k, fixtures, opts)?;
    rep.result = ump_reembedding_report(&mut rep, ideal.ring(), &re);
    Ok(rep)
}

pub fn free_reembed(ideal: &Ideal, fixtures: &BTreeMap<u64, PolyMatrix>, opts: &SolverOptions) -> Result<Report> {
    let mut rep = Report::new();
    let ring = ideal.ring();
    let free = regular_free_reembed(ideal, fixtures, opts)?;
    rep.line(format!("basis generators: ({})", free.basis_gens.iter().map(|g| ring.fmt(g)).collect::<Vec<_>>().join(", ")));
    let mut detail = ump_reembedding_report(&mut rep, ring, &free.reembedding);
    rep.line(format!("P/I is isomorphic to {} with weights {:?}", free.target_ring().describe(), free.weights()));
    rep.verified("target ideal is zero");
    detail["basis_generators"] = json!(free.basis_gens.iter().map(|g| ring.fmt(g)).collect::<Vec<_>>());
    detail["free_ring"] = json!(free.target_ring().describe());
    rep.result = detail;
    Ok(rep)
}

pub fn detect(ring: &Ring, gens: &[reembed::Poly]) -> Result<Report> {
    let mut rep = Report::new();
    let flat = Ring::new(ring.names(), &vec![0; ring.n()])?;
    match detect_grading(&flat, gens) {
        Some(w) => {
            rep.line(format!("grading [{}]", w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")));
            rep.verified("every generator is homogeneous");
            rep.result = json!({ "grading": w });
        }
        None => {
            rep.line("only trivial");
            rep.result = json!({ "grading": Value::Null, "message": "only trivial" });
        }
    }
    Ok(rep)
}

pub fn smooth_check(ideal: &Ideal) -> Result<Report> {
    let mut rep = Report::new();
    let s = smoothness_check(ideal)?;
    let verdict = s.regularity().label();
    match &s {
        Smoothness::Singular(pt) => {
            rep.line(format!("singular at ({})", rationals(pt).join(", ")));
            rep.verified("generators vanish at the witness and the Jacobian rank drops there");
        }
        Smoothness::Regular => {
            rep.line("regular");
            rep.verified("maximal minors of the Jacobian and the generators generate the unit ideal");
        }
        Smoothness::Undetermined => rep.line("undetermined"),
    }
    let point = match &s {
        Smoothness::Singular(pt) => json!(rationals(pt)),
        _ => Value::Null,
    };
    rep.result = json!({ "verdict": verdict, "witness": point });
    Ok(rep)
}
