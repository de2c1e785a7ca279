//! Exact verification of structure relations for orthogonal polynomials in
//! the q-Askey scheme.
//!
//! The crate builds Askey-Wilson, Jacobi, continuous q-Jacobi, continuous
//! q-ultraspherical and big q-Jacobi polynomials over exact rationals, the
//! skew-symmetric first-order operators `L` and the symmetric second-order
//! operators `D` attached to them, and checks every structure, lowering,
//! raising and commutator identity by exact coefficient comparison.

macro_rules! forward_owned_ops {
    ($t:ty) => {
        impl std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                &self + rhs
            }
        }
        impl std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                &self - rhs
            }
        }
        impl std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                &self * rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned_ops;

pub mod error;
pub mod exact_algebra;
pub mod families;
pub mod harness;
pub mod inner_product;
pub mod limits;
pub mod linalg;
pub mod operators;
pub mod qcalculus;
pub mod relations;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/exact-algebra.md")]
    pub struct ExactAlgebra;
    #[doc = include_str!("../../../book/src/families.md")]
    pub struct Families;
    #[doc = include_str!("../../../book/src/operators.md")]
    pub struct Operators;
    #[doc = include_str!("../../../book/src/identities.md")]
    pub struct Identities;
    #[doc = include_str!("../../../book/src/grid.md")]
    pub struct Grid;
    #[doc = include_str!("../../../book/src/limits.md")]
    pub struct Limits;
}
