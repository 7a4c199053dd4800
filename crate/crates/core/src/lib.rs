//! Exact computations for ×_A-Hopf algebras: Galois maps, translation maps,
//! resolutions, Ext/Tor, cup and cap products, and duality.

pub mod algebra;
pub mod bialgebroid;
pub mod check;
pub mod duality;
pub mod error;
pub mod homology;
pub mod instances;
pub mod oracle;
pub mod products;
pub mod complexes;
pub mod qlinalg;
pub mod ring;

pub use error::{Error, Result};
