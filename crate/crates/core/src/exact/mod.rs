//! Exact arithmetic kernel: rationals, the fixed structure-constant algebras,
//! dense polynomials, rational functions and resultants.

pub mod algebra;
pub mod poly;
#[cfg(test)]
mod props;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod ring;

pub use algebra::{
    alg_arith, descriptor, field_tower, AlgElement, AlgOp, Algebra, FieldDescriptor, FieldName,
    QepsI, Qsqrt5, Qsqrt5Sqrtm2, Qzeta5,
};
pub use poly::{poly_gcd, Poly};
pub use ratfunc::{ratfunc_compose, RatFunc};
pub use rational::{reduce_mod, valuation, format_rational, int, parse_rational, rat, sqrt_exact, Rational};
pub use resultant::resultant;
pub use ring::{Field, Ring};
