//! Exact-arithmetic engine for Fibonomial coefficients and the Fibonacci
//! cobweb poset.
//!
//! The crate is organised by topic:
//!
//! * [`seqcore`] - Fibonacci numbers, F-factorials, Fibonomials, Gaussian polynomials.
//! * [`weighted`] - weighted binomial coefficients of the first and second kind.
//! * [`cobweb`] - the truncated cobweb poset, its zeta/Möbius matrices and chain counts.
//! * [`tiling`] - shifted sub-poset copies and exact-cover tilings of the chain universe.
//! * [`gvpaths`] - binomial determinants and the subset-sum route to Fibonomials.
//! * [`fence`] - order ideals of the zigzag fence and the Fibonacci product identities.
//! * [`verify`] - property suites that re-check all of the above at fixed ranges.
//!
//! All counts are [`Nat`] (arbitrary precision); nothing is ever computed in
//! floating point.

pub mod cobweb;
pub mod det;
pub mod dlx;
mod error;
pub mod fence;
pub mod gvpaths;
mod limits;
mod nat;
pub mod poly;
pub mod seqcore;
pub mod tiling;
pub mod verify;
pub mod weighted;

pub use error::{Error, Result};
pub use limits::Limits;
pub use nat::Nat;
pub use poly::IntPolynomial;
