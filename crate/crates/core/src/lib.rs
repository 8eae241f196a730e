//! Graded invariants of generalized section rings of ℚ-divisors on
//! projective space, their cyclic covers, and Segre products.

pub mod certified;
pub mod cohomology;
pub mod cover;
pub mod divisors;
pub mod error;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod report;
pub mod scenario;
pub mod sectionring;
pub mod sections;
pub mod segre;

pub use error::{Error, Result};
pub use rat::Rat;
