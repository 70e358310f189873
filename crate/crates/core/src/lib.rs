//! Exact polynomial algebra for eliminating indeterminates by substitution in
//! graded ideals, with separating re-embeddings, fiber analysis and
//! unimodular-matrix based re-embeddings of regular graded algebras.

pub mod coeff;
pub mod error;
pub mod fibers;
pub mod gcd;
pub mod groebner;
pub mod ideal;
pub mod jacobian;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod morphism;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod reembedding;
pub mod ring;
pub mod sample;
pub mod separating;
pub mod ump;

pub use coeff::{Field, Rational};
pub use error::{Error, Result};
pub use groebner::PolyVector;
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::TermOrder;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use ring::Ring;
