mod common;

use common::*;
use reembed::separating::*;
use reembed::Error;

#[test]
fn substitution_of_printed_tuple_gives_printed_generators() {
    let r = ring(&["a", "w", "x", "y"], &[0, 1, 2, 2]);
    let i = ideal(&r, &["3*x - a*y", "y - a^3*y", "a*x - a^2*w^2"]);
    let z = idx(&r, &["x", "y"]);
    let f = polys(&r, &["x - a^4*w^2", "y - 3*a^3*w^2"]);
    let e = rewrite_eliminate(&i, &z, &f).unwrap();
    assert_eq!(e.rewritten, polys(&r, &["0", "-3*a^6*w^2 + 3*a^3*w^2", "a^5*w^2 - a^2*w^2"]));
    let oracle = i.eliminate_oracle(&z);
    assert!(e.ideal.equals(&oracle));
    let sub = e.ideal.ring().clone();
    let expected = ideal(&sub, &["a^5*w^2 - a^2*w^2"]);
    assert!(e.ideal.equals(&expected));
}

#[test]
fn computed_tuple_eliminates_like_the_oracle() {
    let r = ring(&["a", "w", "x", "y"], &[0, 1, 2, 2]);
    let i = ideal(&r, &["3*x - a*y", "y - a^3*y", "a*x - a^2*w^2"]);
    let z = idx(&r, &["x", "y"]);
    let t = find_separating_tuple(&i, &z).unwrap();
    let c = coherify(&i, &t).unwrap();
    let e = rewrite_eliminate(&i, &z, &c.f).unwrap();
    assert!(e.ideal.equals(&i.eliminate_oracle(&z)));
    assert_eq!(optimality_status(&i, &z).unwrap(), OptimalityStatus::OptimalByLinpart);
}

#[test]
fn two_parameter_example() {
    let r = ring(&["a", "b", "x", "y", "z"], &[0, 0, 1, 1, 1]);
    let i = ideal(&r, &["x - a^3*y + z", "x - (a*b+1)*y", "a^2*y + a*z"]);
    let z = idx(&r, &["x", "y"]);
    let t = find_separating_tuple(&i, &z).unwrap();
    for f in &t.f {
        assert!(i.contains(f));
    }
    let printed = polys(&r, &["x + z + a^2*z", "y + z - a^3*b*z + a*b^2*z + a^2*z - a*b*z"]);
    assert_eq!(verify_tuple(&i, &z, &printed).unwrap(), TupleKind::Coherent);
    let c = coherify(&i, &t).unwrap();
    let e = rewrite_eliminate(&i, &z, &c.f).unwrap();
    assert!(e.ideal.equals(&i.eliminate_oracle(&z)));
}

#[test]
fn pairs_in_degree_two() {
    let r = ring(&["a", "b", "v", "x", "y", "z", "w"], &[0, 0, 1, 2, 2, 2, 2]);
    let i = ideal(&r, &["x - z - w + a*x + b*v^2 - v^2", "3*b*x + y - v^2", "a*b*x", "a*x - v^2"]);
    let printed = [
        (vec!["y", "x"], vec!["y - 3*b^2*v^2 + 3*b*z + 3*b*w - v^2", "x + b*v^2 - z - w"]),
        (vec!["y", "z"], vec!["y + 3*b*x - v^2", "z - b*v^2 - a*x + v^2 - x + w"]),
        (vec!["y", "w"], vec!["y + 3*b*x - v^2", "w - b*v^2 - a*x + v^2 - x + z"]),
    ];
    for (zn, fs) in &printed {
        let z = idx(&r, zn);
        verify_tuple(&i, &z, &polys(&r, fs)).unwrap();
        assert!(find_separating_tuple(&i, &z).is_ok());
    }
    let xw = idx(&r, &["x", "w"]);
    assert_eq!(find_separating_tuple(&i, &xw), Err(Error::NotSeparating));
}

#[test]
fn coherify_two_degrees() {
    let r = ring(&["a", "x", "y", "z", "v", "w"], &[0, 1, 1, 1, 2, 2]);
    let i = ideal(
        &r,
        &["x - a*y", "y - a*z", "z - a*x", "v - a^3*w - a*x*z", "v - w - a*w + a*y*z", "a^4*w"],
    );
    let z = idx(&r, &["x", "y", "v", "w"]);
    let t = find_separating_tuple(&i, &z).unwrap();
    let c = coherify(&i, &t).unwrap();
    let expected = polys(&r, &["x - a^2*z", "y - a*z", "v - a^6*z^2 - a^5*z^2 - a^3*z^2", "w - a^5*z^2 - a^2*z^2"]);
    assert_eq!(c.f, expected);
    let e = rewrite_eliminate(&i, &z, &c.f).unwrap();
    let sub = e.ideal.ring().clone();
    assert!(e.ideal.equals(&ideal(&sub, &["(a^3 - 1)*z", "z^2"])));
    assert_eq!(separating_indeterminates(&i).unwrap(), idx(&r, &["x", "y", "z", "v", "w"]));
    assert_eq!(optimality_status(&i, &z).unwrap(), OptimalityStatus::Inconclusive);
}

#[test]
fn ungraded_substitution_is_not_flagged_optimal() {
    let r = ring(&["x", "y"], &[0, 0]);
    let i = ideal(&r, &["x - y^2", "y - x"]);
    let z = idx(&r, &["x"]);
    let e = rewrite_eliminate(&i, &z, &polys(&r, &["x - y^2"])).unwrap();
    let sub = e.ideal.ring().clone();
    assert!(e.ideal.equals(&ideal(&sub, &["y - y^2"])));
    assert!(e.ideal.equals(&i.eliminate_oracle(&z)));
    assert_eq!(lin_part_space(&r, i.gens()).unwrap().dim(), 2);
    assert_eq!(optimality_status(&i, &z).unwrap(), OptimalityStatus::Inconclusive);
}
