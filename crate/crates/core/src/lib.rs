//! Exact algebra over subfields embedded in `Z_n`, finite semigroup
//! representations over the rationals, semivector spaces over semifields,
//! and exact Markov/Leontief models.

pub mod poly;
pub mod ring;
pub mod rational;
pub mod linalg;
pub mod semigroup;
pub mod semivector;
pub mod econ;
