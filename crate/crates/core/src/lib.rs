//! Exact Cauchy indices of rational functions over ℚ.
//!
//! Three independent formula engines compute `Ind_a^b(Q/P)`: the signed
//! remainder (Sturm) sequence, the subresultant chain `T_0, …, T_s`, and a
//! sign-variation count over the same chain. A definitional oracle built on
//! polynomials with known rational roots checks them all, alongside the
//! classical modified-sign-variation count over the full subresultant list.

pub mod cauchy;
pub mod error;
pub mod number;
pub mod oracle;
pub mod poly;
pub mod queries;
pub mod sequences;
pub mod text;

pub use error::{Error, Result};
pub use number::{HalfInt, Rat, Sign};
pub use poly::Poly;
