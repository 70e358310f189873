#![allow(dead_code)]

use reembed::{Ideal, Poly, Ring};

pub fn ring(names: &[&str], weights: &[u32]) -> Ring {
    Ring::new(names, weights).unwrap()
}

pub fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r.clone(), gens.iter().map(|s| r.parse(s).unwrap()).collect())
}

pub fn polys(r: &Ring, v: &[&str]) -> Vec<Poly> {
    v.iter().map(|s| r.parse(s).unwrap()).collect()
}

pub fn idx(r: &Ring, names: &[&str]) -> Vec<usize> {
    r.indices_of(names).unwrap()
}
