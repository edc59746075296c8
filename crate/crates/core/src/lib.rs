//! Cohomology of line bundles on Bott-Samelson varieties.
//!
//! A reduced or non-reduced word in the simple reflections of a Kac-Moody
//! group, together with its generalized Cartan matrix, determines a smooth
//! projective Bott-Samelson variety and a toric degeneration of it. This
//! crate computes:
//!
//! * which cohomology degrees of `O(Σ a_i Z_i)` vanish, from sign conditions
//!   on a finite family of linear forms in the `a_i` ([`vanishing`]);
//! * the full cohomology of the toric special fiber, weight by weight, via
//!   the reduced cohomology of a simplicial complex ([`toric`],
//!   [`simplicial`]);
//! * an independent brute-force Čech computation on the toric fiber
//!   ([`cech`]), for cross-checking.
//!
//! Public indices are 0-based; letters of a word index rows of the matrix.

pub mod bott;
pub mod cech;
pub mod error;
pub mod linalg;
pub mod root_system;
pub mod simplicial;
pub mod toric;
pub mod vanishing;

pub use bott::{BottData, DivisorCoeffs, LinearForm, Ray, Sign, SignVector, Weight, Word};
pub use cech::{cech_table, cech_weight, CechComplex, CechTable, MAX_ORACLE_LEN};
pub use error::{Error, Result};
pub use root_system::{CartanFamily, GeneralizedCartanMatrix, RootVector};
pub use simplicial::{demazure_weight, reduced_cohomology, sigma_m, CohomologyDims, SimplicialComplex};
pub use toric::{
    classify_weight, cohomology_table, demazure_table, weight_box, CohomologyTable, TableOptions,
    ToricDivisor, WeightBox, WeightClassification, Witness, DEFAULT_POINT_CAP, DEFAULT_WITNESS_CAP,
};
pub use vanishing::{
    best_certificates, check_toric_vanishing, condition_profile, report_from_profile, vanishing_report, ConditionForms,
    ConditionProfile, Eta, IndexCondition, VanishingCertificate, VanishingReport,
};
