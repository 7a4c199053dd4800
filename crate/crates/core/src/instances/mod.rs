//! Concrete instances that feed the computations.

pub mod catalog;
pub mod ce;
pub mod fd;
pub mod lie;
pub mod pbw;
