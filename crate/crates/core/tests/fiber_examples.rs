mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reembed::coeff::{int, rat};
use reembed::fibers::*;
use reembed::reembedding::best_separating_reembedding;
use reembed::separating::*;
use reembed::{Field, Ideal, Poly, RatFunc, Rational, Ring};

fn two_degrees() -> Ideal {
    let r = ring(&["a", "x", "y", "z", "v", "w"], &[0, 1, 1, 1, 2, 2]);
    ideal(&r, &["x - a*y", "y - a*z", "z - a*x", "v - a^3*w - a*x*z", "v - w - a*w + a*y*z", "a^4*w"])
}

fn printed_coherent_tuple(i: &Ideal) -> SeparatingTuple {
    let r = i.ring();
    let z = idx(r, &["x", "y", "v", "w"]);
    let f = polys(r, &["x - a^2*z", "y - a*z", "v - a^6*z^2 - a^5*z^2 - a^3*z^2", "w - a^5*z^2 - a^2*z^2"]);
    assert_eq!(verify_tuple(i, &z, &f).unwrap(), TupleKind::Coherent);
    let mut sorted = z.clone();
    sorted.sort_by_key(|&k| r.weight(k));
    let order = reembed::order::build_separating_order(r, &sorted).unwrap();
    SeparatingTuple { z, f, kind: TupleKind::Coherent, order }
}

fn two_parameter() -> Ideal {
    let r = ring(&["a", "b", "x", "y", "z"], &[0, 0, 1, 1, 1]);
    ideal(&r, &["x - a^3*y + z", "x - (a*b+1)*y", "a^2*y + a*z"])
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

fn regular_one_parameter() -> Ideal {
    let r = ring(&["a", "x1", "x2", "x3"], &[0, 1, 3, 3]);
    ideal(&r, &["(1 + a^2)*x2 + a*x3 + x1^3"])
}

fn random_point(rng: &mut ChaCha8Rng, m: usize) -> Vec<Rational> {
    (0..m).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect()
}

#[test]
fn fibers_of_the_eliminated_family() {
    let re = best_separating_reembedding(&two_degrees()).unwrap();
    let family = re.target().clone();
    let at_one = special_fiber_ideal(&family, &[int(1)]).unwrap();
    let fr = at_one.ring().clone();
    assert!(at_one.equals(&ideal(&fr, &["z^2"])));
    assert_eq!(at_one.krull_dimension(), Some(0));
    let at_two = special_fiber_ideal(&family, &[int(2)]).unwrap();
    assert!(at_two.equals(&ideal(&fr, &["z"])));
    let generic = generic_fiber_ideal(&family).unwrap();
    let z: Poly<RatFunc> = Poly::var(0);
    assert!(generic.equals(&Ideal::new(generic.ring().clone(), vec![z])));
}

#[test]
fn optimal_fiber_reembeddings() {
    let re = best_separating_reembedding(&two_degrees()).unwrap();
    let family = re.target().clone();
    let special = fiber_optimal_reembedding(&family, &[int(1)]).unwrap();
    assert!(special.z().is_empty());
    assert_eq!(special.target().ring().names(), &["z".to_string()]);
    assert!(special.target().equals(&ideal(special.target().ring(), &["z^2"])));
    assert_eq!(special.status, OptimalityStatus::OptimalByLinpart);
    let generic = generic_fiber_optimal_reembedding(&family).unwrap();
    assert_eq!(generic.target().ring().n(), 0);
    assert!(generic.target().is_zero());
    assert_eq!(generic.status, OptimalityStatus::OptimalByLinpart);
    let zero = Ideal::new(ring(&["a", "x"], &[0, 1]), vec![]);
    let id = fiber_optimal_reembedding(&zero, &[int(3)]).unwrap();
    assert!(id.z().is_empty() && id.target().is_zero());
}

#[test]
fn coherent_tuple_specializes() {
    let i = two_degrees();
    let t = printed_coherent_tuple(&i);
    let s = fiber_coherent_tuple(&i, &t, &[int(1)]).unwrap();
    let fr = i.ring().fiber_ring(false);
    assert_eq!(s.f, polys(&fr, &["x - z", "y - z", "v - 3*z^2", "w - 2*z^2"]));
    assert_eq!(s.z, idx(&fr, &["x", "y", "v", "w"]));
    let zero = fiber_coherent_tuple(&i, &t, &[int(0)]).unwrap();
    assert_eq!(zero.f, polys(&fr, &["x", "y", "v", "w"]));
    let generic = generic_fiber_coherent_tuple(&i, &t).unwrap();
    assert_eq!(generic.kind, TupleKind::Coherent);
    assert_eq!(generic.f.len(), 4);
}

#[test]
fn transfer_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let i = two_degrees();
    let t = printed_coherent_tuple(&i);
    let j = two_parameter();
    let r = j.ring().clone();
    let zf = idx(&r, &["x", "y"]);
    let ff = polys(&r, &["x + z + a^2*z", "y + z - a^3*b*z + a*b^2*z + a^2*z - a*b*z"]);
    assert_eq!(verify_tuple(&j, &zf, &ff).unwrap(), TupleKind::Coherent);
    let order = reembed::order::build_separating_order(&r, &zf).unwrap();
    let u = SeparatingTuple { z: zf, f: ff, kind: TupleKind::Coherent, order };
    for _ in 0..10 {
        let p = random_point(&mut rng, 1);
        let s = fiber_coherent_tuple(&i, &t, &p).unwrap();
        let fiber = special_fiber_ideal(&i, &p).unwrap();
        assert_eq!(verify_tuple(&fiber, &s.z, &s.f).unwrap(), TupleKind::Coherent);
        assert!(!fiber.is_unit());
        let q = random_point(&mut rng, 2);
        let s2 = fiber_coherent_tuple(&j, &u, &q).unwrap();
        let fiber2 = special_fiber_ideal(&j, &q).unwrap();
        assert_eq!(verify_tuple(&fiber2, &s2.z, &s2.f).unwrap(), TupleKind::Coherent);
        assert!(!fiber2.is_unit());
    }
}

#[test]
fn generic_fiber_keeps_membership_and_full_linear_rank() {
    let j = two_parameter();
    let r = j.ring().clone();
    let g = generic_fiber_ideal(&j).unwrap();
    for f in polys(&r, &["x + z + a^2*z", "y + z - a^3*b*z + a*b^2*z + a^2*z - a*b*z"]) {
        assert!(g.contains(&to_generic(&r, &f)));
    }
    // linear parts over Q(a,b): rank via the determinant of the 3x3 coefficient matrix
    let space = lin_part_space(g.ring(), g.gens()).unwrap();
    assert_eq!(space.dim(), 3);
    let m = &space.matrix;
    let det = m[0][0].times(&m[1][1].times(&m[2][2]).minus(&m[1][2].times(&m[2][1])))
        .minus(&m[0][1].times(&m[1][0].times(&m[2][2]).minus(&m[1][2].times(&m[2][0]))))
        .plus(&m[0][2].times(&m[1][0].times(&m[2][1]).minus(&m[1][1].times(&m[2][0]))));
    assert!(!det.is_zero());
    assert_eq!(lin_part_space(&r, j.gens()).unwrap().dim(), 2);
}

#[test]
fn cotangent_identity_on_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let re = best_separating_reembedding(&two_degrees()).unwrap();
    let family = re.target().clone();
    let at_one = cotangent_report(&family, &[int(1)]).unwrap();
    assert_eq!(at_one.fiber_cotangent, 1);
    assert_eq!(at_one.ambient_cotangent, 2);
    assert_eq!(at_one.local, Regularity::Singular);
    let fixtures = [two_degrees(), two_parameter(), regular_two_parameter(), regular_one_parameter(), family];
    for i in &fixtures {
        let m = i.ring().zero_vars().len();
        for _ in 0..5 {
            let p = random_point(&mut rng, m);
            let rep = cotangent_report(i, &p).unwrap();
            assert_eq!(rep.fiber_cotangent + m, rep.ambient_cotangent);
            assert!(!rep.fiber.is_unit());
        }
    }
}

#[test]
fn principal_linear_ideal_report() {
    let r = ring(&["a", "x"], &[0, 1]);
    let i = ideal(&r, &["x"]);
    let rep = cotangent_report(&i, &[int(4)]).unwrap();
    assert_eq!((rep.fiber_cotangent, rep.ambient_cotangent), (0, 1));
    assert_eq!(rep.local, Regularity::Regular);
    assert_eq!(rep.free_target.unwrap().n(), 0);
    let g = generic_fiber_ideal(&i).unwrap();
    assert_eq!(g.gens().len(), 1);
    assert!(g.contains(&Poly::var(0)));
}

#[test]
fn regular_families_have_constant_fiber_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let i = regular_two_parameter();
    let origin = cotangent_report(&i, &[int(0), int(0)]).unwrap();
    assert_eq!(origin.local, Regularity::Regular);
    assert_eq!(origin.ambient_dim, 5);
    assert_eq!(origin.fiber_dim, 3);
    assert_eq!(origin.free_target.as_ref().map(Ring::n), Some(3));
    for (fam, m) in [(regular_two_parameter(), 2usize), (regular_one_parameter(), 1)] {
        let d = fam.krull_dimension().unwrap();
        for _ in 0..10 {
            let p = random_point(&mut rng, m);
            let rep = cotangent_report(&fam, &p).unwrap();
            assert_eq!(rep.local, Regularity::Regular);
            assert_eq!(rep.fiber_dim, d - m);
            assert!(rep.fiber_regular);
        }
    }
}
