//! Certified computation of bifurcation sets of real bivariate polynomials.
//!
//! Everything on the verdict path is exact: rational arithmetic, integer
//! Sturm sequences, subresultant elimination, and algebraic numbers carried
//! as (squarefree polynomial, isolating interval) pairs. Floating point is
//! confined to the quarantined `oracle` module, which cross-checks but never
//! decides.

pub mod error;
pub mod interval;
pub mod num;
pub mod poly;
pub mod realroots;
pub mod resultant;
pub mod rootctx;
pub mod unipoly;
pub mod algebraic;

pub use error::{Error, Result};
