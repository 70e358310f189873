mod common;

use common::*;
use reembed::reembedding::*;
use reembed::separating::*;
use reembed::{Error, Ideal};
use std::collections::BTreeSet;

fn degree_two_pairs() -> Ideal {
    let r = ring(&["a", "b", "v", "x", "y", "z", "w"], &[0, 0, 1, 2, 2, 2, 2]);
    ideal(&r, &["x - z - w + a*x + b*v^2 - v^2", "3*b*x + y - v^2", "a*b*x", "a*x - v^2"])
}

fn two_degrees() -> Ideal {
    let r = ring(&["a", "x", "y", "z", "v", "w"], &[0, 1, 1, 1, 2, 2]);
    ideal(&r, &["x - a*y", "y - a*z", "z - a*x", "v - a^3*w - a*x*z", "v - w - a*w + a*y*z", "a^4*w"])
}

#[test]
fn all_best_pairs_match_as_sets() {
    let i = degree_two_pairs();
    let r = i.ring().clone();
    let all = all_best_tuples_in_degree(&i, 2).unwrap();
    let got: BTreeSet<BTreeSet<usize>> = all.iter().map(|t| t.z.iter().copied().collect()).collect();
    let want: BTreeSet<BTreeSet<usize>> = [["y", "x"], ["y", "z"], ["y", "w"]]
        .iter()
        .map(|p| idx(&r, p).into_iter().collect())
        .collect();
    assert_eq!(got, want);
    for t in &all {
        verify_separating(&i, t).unwrap();
    }
    let first = best_tuple_in_degree(&i, 2).unwrap();
    assert_eq!(first.z, idx(&r, &["x", "y"]));
    assert_eq!(best_tuple_in_degree(&i, 1).unwrap_err(), Error::NoSeparatingInDegree(1));
}

#[test]
fn best_reembedding_over_two_degrees() {
    let i = two_degrees();
    let r = i.ring().clone();
    let first = best_tuple_in_degree(&i, 1).unwrap();
    assert_eq!(first.z, idx(&r, &["x", "y"]));
    assert_eq!(first.f, polys(&r, &["x - a^2*z", "y - a*z"]));
    let re = best_separating_reembedding(&i).unwrap();
    assert_eq!(re.z(), idx(&r, &["x", "y", "v", "w"]).as_slice());
    let sub = re.target().ring().clone();
    assert_eq!(sub.names(), &["a", "z"]);
    assert!(re.target().equals(&ideal(&sub, &["(a^3-1)*z", "z^2"])));
    assert_eq!(re.status, OptimalityStatus::Inconclusive);
    assert_eq!(i.krull_dimension(), Some(1));
    let phi = &re.morphism;
    assert_eq!(phi.images[r.index_of("v").unwrap()], sub.parse("a^6*z^2 + a^5*z^2 + a^3*z^2").unwrap());
    assert!(phi.degree_zero);
}

#[test]
fn weighted_positive_grading() {
    let r = ring(&["x", "y", "z"], &[4, 2, 1]);
    let i = ideal(&r, &["x - y^2", "y - z^2"]);
    let re = positively_graded_optimal(&i).unwrap();
    assert_eq!(re.z(), idx(&r, &["x", "y"]).as_slice());
    assert!(re.target().is_zero());
    assert_eq!(re.target().ring().names(), &["z"]);
    assert_eq!(re.status, OptimalityStatus::OptimalByLinpart);
    assert!(re.target().equals(&i.eliminate_oracle(re.z())));
}

#[test]
fn detected_grading_makes_generators_homogeneous() {
    let r = ring(&["a", "w", "x", "y"], &[1, 1, 1, 1]);
    let gens = polys(&r, &["3*x - a*y", "y - a^3*y", "a*x - a^2*w^2"]);
    let w = detect_grading(&r, &gens).unwrap();
    assert_eq!(w, vec![0, 1, 2, 2]);
    let graded = ring(&["a", "w", "x", "y"], &w);
    for g in &gens {
        assert!(graded.w_degree(g).is_ok());
    }
    let i = ideal(&graded, &["3*x - a*y", "y - a^3*y", "a*x - a^2*w^2"]);
    let re = best_separating_reembedding(&i).unwrap();
    assert_eq!(re.z(), idx(&graded, &["x", "y"]).as_slice());
    let sub = re.target().ring().clone();
    assert!(re.target().equals(&ideal(&sub, &["a^5*w^2 - a^2*w^2"])));
}

#[test]
fn zero_ideal_gives_identity() {
    let r = ring(&["a", "x"], &[0, 1]);
    let i = ideal(&r, &[]);
    let re = best_separating_reembedding(&i).unwrap();
    assert!(re.z().is_empty());
    assert!(re.note.is_some());
    assert_eq!(re.target().ring().names(), r.names());
}

#[test]
fn symmetric_linear_form_has_two_best_tuples() {
    let r = ring(&["x", "y"], &[1, 1]);
    let i = ideal(&r, &["x + y"]);
    let all = all_best_tuples_in_degree(&i, 1).unwrap();
    let zs: Vec<Vec<usize>> = all.iter().map(|t| t.z.clone()).collect();
    assert_eq!(zs, vec![vec![0], vec![1]]);
}

/// Every strict superset of the best tuple (within the candidates of the same degree) fails.
#[test]
fn best_tuples_are_maximal() {
    for i in [degree_two_pairs(), two_degrees()] {
        let ring = i.ring().clone();
        let re = best_separating_reembedding(&i).unwrap();
        let sep = separating_indeterminates(&i).unwrap();
        for &extra in &sep {
            if re.z().contains(&extra) {
                continue;
            }
            let d = ring.weight(extra);
            let mut z: Vec<usize> = re.z().iter().copied().filter(|&k| ring.weight(k) == d).collect();
            z.push(extra);
            let gens = i.gens().iter().filter(|g| ring.w_degree(g).unwrap() == Some(d as u64)).cloned().collect();
            let id = Ideal::new(ring.clone(), gens);
            assert_eq!(find_separating_tuple(&id, &z).unwrap_err(), Error::NotSeparating);
        }
    }
}
