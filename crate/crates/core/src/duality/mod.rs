//! Duality modules and the fundamental class.
//!
//! `underived` covers a finitely generated projective `A` (dimension 0) over a
//! finite-dimensional `U`; `derived` dualizes a finite free resolution over `U(g)`.

pub mod derived;
pub mod underived;

pub use derived::{detect_duality, dualize, duality_isomorphism, duality_report, DualityData, DualityReport, DualityRow};
pub use underived::{cap_omega_underived, delta_underived, dual_bases, dual_bases_with, DualBases, LinearIso};
