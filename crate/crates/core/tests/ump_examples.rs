mod common;

use common::*;
use reembed::matrix::{self, PolyMatrix};
use reembed::ump::*;
use reembed::coeff::int;
use reembed::{Error, Ideal, Poly, Ring};
use std::collections::BTreeMap;

fn mat(r: &Ring, rows: &[&[&str]]) -> PolyMatrix {
    rows.iter().map(|row| row.iter().map(|s| r.parse(s).unwrap()).collect()).collect()
}

fn two_blocks() -> Ideal {
    let r = ring(&["a", "x1", "x2", "x3", "x4", "x5", "x6"], &[0, 1, 2, 2, 2, 4, 4]);
    ideal(
        &r,
        &["a*x2 + (a^2-1)*x3 + x1^2", "(a-1)*x5 + a^2*x6 + a^3*x1^2*x2 + x1^2*x4", "x2*x4 - x3^2 + a*x5"],
    )
}

fn two_block_fixtures(r: &Ring) -> BTreeMap<u64, PolyMatrix> {
    BTreeMap::from([
        (2, mat(r, &[&["a", "a^2-1", "0"], &["-1", "-a", "0"], &["0", "0", "-1"]])),
        (4, mat(r, &[&["-a-1", "-a^2"], &["1", "a-1"]])),
    ])
}

fn regular_two_parameter() -> Ideal {
    let r = ring(&["a1", "a2", "x1", "x2", "x3", "x4", "x5"], &[0, 0, 1, 1, 1, 2, 2]);
    ideal(
        &r,
        &[
            "(a1^2*a2^2 + a1*a2 + 1)*x1 - (a1*a2^2 + 2*a2)*x2 + (a1*a2^3 + a2^2)*x3",
            "(1 - 2*a1*a2)*x4 + a1*a2*x5 + a1*a2*x2^2 + 2*a1*x1*x2",
        ],
    )
}

const PRINTED_THETA_G3: &str = "a^7*x1^2*x3 - a^6*x1^4 + a^6*x1^2*x3 - a^5*x1^4 - a^5*x1^2*x3 - a^4*x1^2*x3 - a^3*x6 \
     - a^2*x3^2 - a^2*x1^2*x4 - a^2*x3*x4 + 2*a*x1^2*x3 - x1^4 + x3*x4";

#[test]
fn completions_of_a_row_are_not_unique() {
    let r = ring(&["x"], &[1]);
    let a = mat(&r, &[&["1 + x^2", "x"]]);
    assert!(is_unimodular(&a));
    verify_ump(&a, &mat(&r, &[&["1", "-x"], &["-x", "1 + x^2"]])).unwrap();
    verify_ump(&a, &mat(&r, &[&["1 - x^2", "-x"], &["x^3", "1 + x^2"]])).unwrap();
    let s = ump_solve(&a).unwrap();
    assert!(matrix::det(&s.b).is_one());
    assert_eq!(matrix::mul(&a, &s.b), mat(&r, &[&["1", "0"]]));
    assert!(verify_ump(&a, &mat(&r, &[&["1", "0"], &["0", "1"]])).is_err());
}

#[test]
fn printed_block_completion_passes() {
    let i = two_blocks();
    let r = i.ring();
    let a2 = mat(r, &[&["a", "a^2-1", "0"]]);
    let fx = two_block_fixtures(r);
    verify_ump(&a2, &fx[&2]).unwrap();
    verify_ump(&mat(r, &[&["a-1", "a^2"]]), &fx[&4]).unwrap();
    let s = ump_solve(&a2).unwrap();
    verify_ump(&a2, &s.b).unwrap();
}

#[test]
fn non_unimodular_diagonal() {
    let r = ring(&["a"], &[0]);
    assert!(!is_unimodular(&mat(&r, &[&["1-a", "0"], &["0", "1-2*a"]])));
}

#[test]
fn fixture_reembedding_reproduces_printed_relation() {
    let i = two_blocks();
    let r = i.ring().clone();
    let re = ump_reembed(&i, 2, &two_block_fixtures(&r), &SolverOptions::default()).unwrap();
    let t = re.target.ring().clone();
    assert_eq!(t.names(), &["a", "x1", "x3", "x4", "x6"]);
    assert_eq!(re.nu, idx(&r, &["x2", "x5"]));
    assert_eq!(re.phi.images[2], r.parse("a*x2 + (a^2-1)*x3").unwrap());
    assert_eq!(re.phi.images[6], r.parse("x5 + (a-1)*x6").unwrap());
    assert_eq!(re.q[0], r.parse("-x1^2").unwrap());
    assert_eq!(re.target.gens(), &[t.parse(PRINTED_THETA_G3).unwrap()]);
    assert!(re.blocks.iter().all(|b| b.solution.provenance != Provenance::Euclid));
    let j = Ideal::new(t.clone(), re.target.gens().to_vec());
    assert_eq!(smoothness_check(&j).unwrap(), Smoothness::Singular(vec![int(0); 5]));
}

#[test]
fn solver_and_fixture_targets_correspond() {
    let i = two_blocks();
    let r = i.ring().clone();
    let fixed = ump_reembed(&i, 2, &two_block_fixtures(&r), &SolverOptions::default()).unwrap();
    let solved = ump_reembed(&i, 2, &BTreeMap::new(), &SolverOptions::default()).unwrap();
    assert_eq!(fixed.target.ring(), solved.target.ring());
    assert_eq!(solved.target.gens().len(), 1);
    match smoothness_check(&solved.target).unwrap() {
        Smoothness::Singular(p) => assert!(p.iter().all(|c| *c == int(0))),
        other => panic!("expected a singular origin, got {other:?}"),
    }
    // transition maps between the two targets, through the ambient ring
    let to_fixed: Vec<Poly> = solved.inverse.iter().map(|p| fixed.theta.apply(p)).collect();
    let to_solved: Vec<Poly> = fixed.inverse.iter().map(|p| solved.theta.apply(p)).collect();
    assert!(fixed.target.contains(&solved.target.gens()[0].compose(&to_fixed)));
    assert!(solved.target.contains(&fixed.target.gens()[0].compose(&to_solved)));
}

#[test]
fn zero_leading_generators_give_identity() {
    let i = two_blocks();
    let re = ump_reembed(&i, 0, &BTreeMap::new(), &SolverOptions::default()).unwrap();
    assert_eq!(re.target.ring(), i.ring());
    assert_eq!(re.target.gens(), i.gens());
}

#[test]
fn regular_two_parameter_family_with_fixtures() {
    let i = regular_two_parameter();
    let r = i.ring().clone();
    let fx = BTreeMap::from([
        (
            1,
            mat(
                &r,
                &[
                    &["1", "0", "-a2"],
                    &["1/2*a1^2*a2 + 1/2*a1", "a1*a2^2 + a2", "1/2*a1*a2 - 1/2"],
                    &["1/2*a1^2", "a1*a2 + 2", "3/2*a1"],
                ],
            ),
        ),
        (2, mat(&r, &[&["1", "-a1*a2"], &["2", "-2*a1*a2 + 1"]])),
    ]);
    let free = regular_free_reembed(&i, &fx, &SolverOptions::default()).unwrap();
    let t = free.target_ring();
    assert_eq!(t.names(), &["a1", "a2", "x2", "x3", "x5"]);
    assert!(free.reembedding.target.is_zero());
    assert_eq!(free.reembedding.q[0], Poly::zero());
    let printed = "-a1^3*a2^5*x2^2 - a1^3*a2^4*x2*x3 - 2*a1^2*a2^4*x2^2 - 1/4*a1^3*a2^3*x3^2 + 2*a1^2*a2^3*x2*x3 \
                   - a1*a2^3*x2^2 + 3/2*a1^2*a2^2*x3^2 + 3*a1*a2^2*x2*x3 - 5/4*a1*a2*x3^2";
    assert_eq!(free.reembedding.q[1], r.parse(printed).unwrap());
    assert_eq!(free.weights(), &[0, 0, 1, 1, 2]);
}

#[test]
fn regular_two_parameter_family_with_solver() {
    let i = regular_two_parameter();
    let free = regular_free_reembed(&i, &BTreeMap::new(), &SolverOptions::default()).unwrap();
    assert!(free.reembedding.target.is_zero());
    assert_eq!(free.target_ring().n(), 5);
    assert_eq!(smoothness_check(&i).unwrap(), Smoothness::Regular);
}

#[test]
fn regular_one_parameter_family() {
    let r = ring(&["a", "x1", "x2", "x3"], &[0, 1, 3, 3]);
    let i = ideal(&r, &["(1 + a^2)*x2 + a*x3 + x1^3"]);
    let free = regular_free_reembed(&i, &BTreeMap::new(), &SolverOptions::default()).unwrap();
    let t = free.target_ring().clone();
    assert_eq!(t.names(), &["a", "x1", "x3"]);
    assert_eq!(free.reembedding.theta.images, polys(&t, &["a", "x1", "-x1^3 - a*x3", "a*x1^3 + (a^2+1)*x3"]));
    assert!(free.reembedding.target.is_zero());
    assert_eq!(free.reembedding.blocks.iter().find(|b| b.degree == 3).unwrap().solution.provenance, Provenance::Euclid);
}

#[test]
fn non_unimodular_family_is_refused() {
    let r = ring(&["a", "x1", "x2"], &[0, 1, 1]);
    let i = ideal(&r, &["(1-a)*x1", "(1-2*a)*x2"]);
    let err = regular_free_reembed(&i, &BTreeMap::new(), &SolverOptions::default()).unwrap_err();
    assert!(matches!(err, Error::NotUnimodular(_)), "{err}");
    assert!(err.to_string().starts_with("NOT_UNIMODULAR"));
}

#[test]
fn smoothness_of_simple_ideals() {
    let r = ring(&["x", "y"], &[1, 1]);
    assert_eq!(smoothness_check(&ideal(&r, &["x"])).unwrap(), Smoothness::Regular);
    let cusp = ring(&["x", "y"], &[2, 3]);
    assert!(matches!(smoothness_check(&ideal(&cusp, &["x^3 - y^2"])).unwrap(), Smoothness::Singular(_)));
}
