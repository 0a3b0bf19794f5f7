//! Exact construction of the exceptional Lie algebra tower
//! (f4,R)^C ⊂ (e6,R)^C ⊂ (e7,R)^C ⊂ (e8,R)^C over the Gaussian rationals.

// Matrix loops index several arrays symmetrically.
#![allow(clippy::needless_range_loop)]

pub mod algebras;
pub mod e8;
pub mod error;
pub mod exact;
pub mod f4e6;
pub mod freudenthal;
pub mod jordan;
pub mod lie;
pub mod quaternion;
pub mod realform;
pub mod roots;
pub mod verify;

pub use error::{Error, Result};
