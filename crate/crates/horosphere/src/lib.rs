//! Exact cohomology and quantum cohomology of the smooth non-homogeneous
//! horospherical varieties of Picard rank one, the odd symplectic
//! Grassmannian presentation, and Bott vanishing on G/B.

pub mod bott;
pub mod error;
pub mod exact;
pub mod horo;
pub mod oddsymp;
pub mod rootsys;

pub use error::{Error, Result};
