//! Exact arithmetic over Q(i) and dense linear algebra.

mod mat;
mod poly;
mod rootfind;
mod scalar;

pub use mat::{independent, Mat};
pub use poly::Poly;
pub use rootfind::{gaussian_rational_roots, RootSplit};
pub use scalar::{dot, rat, rat_from_str, rat_to_string, GaussRat, Rat};
