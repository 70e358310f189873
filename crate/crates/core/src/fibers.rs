//! Special and generic fibers of the family given by the weight-zero subring.

use crate::coeff::{Field, Rational};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::jacobian::{prune_generators, rank_at};
use crate::monomial::Monomial;
use crate::order::build_separating_order;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::reembedding::{positively_graded_optimal, Reembedding};
use crate::ring::Ring;
use crate::separating::{is_coherent, lin_part_space, verify_tuple, SeparatingTuple, TupleKind};

/// Generators must be homogeneous of positive degree, which forces `I ∩ P_0 = 0`.
fn check_family<C: Field>(ideal: &Ideal<C>) -> Result<()> {
    ideal.check_positively_generated()
}

/// Position of each ambient indeterminate in the fiber ring; `usize::MAX` for weight zero.
fn fiber_positions(ring: &Ring) -> Vec<usize> {
    let mut map = vec![usize::MAX; ring.n()];
    for (new, old) in ring.pos_vars().into_iter().enumerate() {
        map[old] = new;
    }
    map
}

fn check_point(ring: &Ring, point: &[Rational]) -> Result<()> {
    let m = ring.zero_vars().len();
    if point.len() != m {
        return Err(Error::InvalidInput(format!(
            "point has {} coordinates but there are {} indeterminates of degree zero",
            point.len(),
            m
        )));
    }
    Ok(())
}

/// Image of `f` under `a_i -> c_i`, as a polynomial in the positive-weight indeterminates.
pub fn specialize(ring: &Ring, f: &Poly, point: &[Rational]) -> Poly {
    let values: Vec<(usize, Rational)> = ring.zero_vars().into_iter().zip(point.iter().cloned()).collect();
    f.eval_partial(&values).remap_vars(&fiber_positions(ring))
}

/// `f` with the weight-zero indeterminates moved into the coefficients.
pub fn to_generic(ring: &Ring, f: &Poly) -> Poly<RatFunc> {
    let zero = ring.zero_vars();
    let pos = ring.pos_vars();
    let mut terms: Vec<(Monomial, Poly)> = Vec::new();
    for (m, c) in f.terms() {
        let coeff_part = m.select(&zero);
        let var_part = m.select(&pos);
        let t = Poly::term(coeff_part, c.clone());
        match terms.iter_mut().find(|(v, _)| *v == var_part) {
            Some((_, acc)) => *acc = &*acc + &t,
            None => terms.push((var_part, t)),
        }
    }
    Poly::from_terms(terms.into_iter().map(|(m, p)| (m, RatFunc::from_poly(p))).collect())
}

/// The fiber ideal over the point `a_i = c_i`, in `K[X+]`.
pub fn special_fiber_ideal(ideal: &Ideal, point: &[Rational]) -> Result<Ideal> {
    let ring = ideal.ring();
    check_family(ideal)?;
    check_point(ring, point)?;
    let gens = ideal.gens().iter().map(|g| specialize(ring, g, point)).collect();
    let fiber = Ideal::new(ring.fiber_ring(false), gens);
    debug_assert!(!fiber.is_unit());
    Ok(fiber)
}

/// The generic fiber ideal in `L[X+]` with `L = K(a_1, ..., a_m)`.
pub fn generic_fiber_ideal(ideal: &Ideal) -> Result<Ideal<RatFunc>> {
    let ring = ideal.ring();
    check_family(ideal)?;
    if ring.zero_vars().is_empty() {
        return Err(Error::InvalidInput("there are no indeterminates of degree zero".into()));
    }
    let gens = ideal.gens().iter().map(|g| to_generic(ring, g)).collect();
    Ok(Ideal::new(ring.fiber_ring(true), gens))
}

fn transfer_check(ideal: &Ideal, tuple: &SeparatingTuple) -> Result<()> {
    let ring = ideal.ring();
    if tuple.z.iter().any(|&i| ring.weight(i) == 0) {
        return Err(Error::InvalidInput("a separated indeterminate has degree zero".into()));
    }
    if !is_coherent(&tuple.z, &tuple.f) {
        return Err(Error::InvalidInput("the tuple is not coherently separating".into()));
    }
    if verify_tuple(ideal, &tuple.z, &tuple.f)? != TupleKind::Coherent {
        return Err(Error::InvalidInput("the tuple is not coherently separating for the ideal".into()));
    }
    Ok(())
}

fn fiber_tuple<C: Field>(fiber: &Ideal<C>, z: Vec<usize>, f: Vec<Poly<C>>) -> Result<SeparatingTuple<C>> {
    let ring = fiber.ring();
    if verify_tuple(fiber, &z, &f)? != TupleKind::Coherent {
        return Err(Error::Verification("the substituted tuple is not coherent for the fiber".into()));
    }
    let mut sorted = z.clone();
    sorted.sort_by_key(|&i| ring.weight(i));
    let order = build_separating_order(ring, &sorted)?;
    Ok(SeparatingTuple { z, f, kind: TupleKind::Coherent, order })
}

/// A coherent tuple of the ideal, specialized to the fiber over `point` and re-verified there.
pub fn fiber_coherent_tuple(ideal: &Ideal, tuple: &SeparatingTuple, point: &[Rational]) -> Result<SeparatingTuple> {
    transfer_check(ideal, tuple)?;
    let ring = ideal.ring();
    let fiber = special_fiber_ideal(ideal, point)?;
    let pos = fiber_positions(ring);
    let z = tuple.z.iter().map(|&i| pos[i]).collect();
    let f = tuple.f.iter().map(|p| specialize(ring, p, point)).collect();
    fiber_tuple(&fiber, z, f)
}

/// A coherent tuple of the ideal, read over the rational function field and re-verified there.
pub fn generic_fiber_coherent_tuple(ideal: &Ideal, tuple: &SeparatingTuple) -> Result<SeparatingTuple<RatFunc>> {
    transfer_check(ideal, tuple)?;
    let ring = ideal.ring();
    let fiber = generic_fiber_ideal(ideal)?;
    let pos = fiber_positions(ring);
    let z = tuple.z.iter().map(|&i| pos[i]).collect();
    let f = tuple.f.iter().map(|p| to_generic(ring, p)).collect();
    fiber_tuple(&fiber, z, f)
}

pub fn fiber_optimal_reembedding(ideal: &Ideal, point: &[Rational]) -> Result<Reembedding> {
    positively_graded_optimal(&special_fiber_ideal(ideal, point)?)
}

pub fn generic_fiber_optimal_reembedding(ideal: &Ideal) -> Result<Reembedding<RatFunc>> {
    positively_graded_optimal(&generic_fiber_ideal(ideal)?)
}

/// Three-valued verdict on regularity of a local ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    Singular,
    Undetermined,
}

impl Regularity {
    pub fn label(&self) -> &'static str {
        match self {
            Regularity::Regular => "regular",
            Regularity::Singular => "singular",
            Regularity::Undetermined => "undetermined",
        }
    }
}

/// Cotangent bookkeeping for the fiber over a point.
#[derive(Clone, Debug)]
pub struct FiberReport {
    pub point: Vec<Rational>,
    pub fiber: Ideal,
    /// Number of weight-zero indeterminates.
    pub m: usize,
    /// `n - dim Lin` at the point `(point, 0)` of the ambient quotient.
    pub ambient_cotangent: usize,
    /// `(n - m) - dim Lin` of the fiber ideal at the origin.
    pub fiber_cotangent: usize,
    pub ambient_dim: usize,
    pub fiber_dim: usize,
    /// Regularity of the ambient quotient localized at `(point, 0)`.
    pub local: Regularity,
    pub fiber_regular: bool,
    /// Polynomial ring isomorphic to the fiber, when the fiber is regular.
    pub free_target: Option<Ring>,
}

pub fn cotangent_report(ideal: &Ideal, point: &[Rational]) -> Result<FiberReport> {
    let ring = ideal.ring();
    let fiber = special_fiber_ideal(ideal, point)?;
    let n = ring.n();
    let m = point.len();
    let mut full = vec![Rational::from_i64(0); n];
    for (&i, c) in ring.zero_vars().iter().zip(point) {
        full[i] = c.clone();
    }
    let ambient_cotangent = n - rank_at(ideal.gens(), &full);
    let fiber_cotangent = (n - m) - lin_part_space(fiber.ring(), fiber.gens())?.dim();
    if fiber_cotangent + m != ambient_cotangent {
        return Err(Error::Verification(format!(
            "cotangent dimensions {fiber_cotangent} (fiber) and {ambient_cotangent} (ambient) differ by more than {m}"
        )));
    }
    let ambient_dim = ideal.krull_dimension().ok_or_else(|| Error::InvalidInput("the ideal is the unit ideal".into()))?;
    let fiber_dim = fiber.krull_dimension().ok_or_else(|| Error::Verification("the fiber ideal is the unit ideal".into()))?;
    let fiber_regular = fiber_cotangent == fiber_dim;
    let local = if !fiber_regular || ambient_cotangent > ambient_dim {
        Regularity::Singular
    } else if prune_generators(ideal.gens()).len() == n - ambient_dim {
        Regularity::Regular
    } else {
        Regularity::Undetermined
    };
    if local == Regularity::Regular && fiber_dim + m != ambient_dim {
        return Err(Error::Verification(format!(
            "regular point but the fiber has dimension {fiber_dim} instead of {}",
            ambient_dim - m
        )));
    }
    let free_target = if fiber_regular {
        let r = positively_graded_optimal(&fiber)?;
        if !r.target().is_zero() {
            return Err(Error::Verification("regular fiber re-embeds onto a nonzero ideal".into()));
        }
        Some(r.target().ring().clone())
    } else {
        None
    };
    Ok(FiberReport {
        point: point.to_vec(),
        fiber,
        m,
        ambient_cotangent,
        fiber_cotangent,
        ambient_dim,
        fiber_dim,
        local,
        fiber_regular,
        free_target,
    })
}
