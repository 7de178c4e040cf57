//! Differential graded algebra over quotients of skew polynomial rings by
//! normal elements: exact skew polynomial arithmetic, q-twisted Groebner
//! normal forms, color DG algebras with divided powers, skew Koszul
//! complexes, acyclic closures with deviation tables, and the Ext-algebra
//! layer with its presentation for skew complete intersections.

pub mod dga;
pub mod error;
pub mod ext;
pub mod homology;
pub mod matrix;
pub mod quotient;
pub mod scalar;
pub mod skewpoly;

pub use dga::{divided_power, koszul_complex, koszul_complex_of_ring, DGElement, DGVariable, DGWord, SemiFreeExtension};
pub use error::{Error, Result};
pub use ext::{
    betti_table, closure_for_presentation, complexity, ext_presentation, k2_check,
    poincare_from_deviations, upi_dimensions, verify_presentation, yoneda_product, BettiTable,
    Cocycle, Confidence, ExtComputer, ExtPresentation, K2Report, ProductOrder, VerifyReport,
};
pub use homology::{
    acyclic_closure, acyclic_closure_shuffled, homology_basis, homology_dimension, stratum,
    stratum_matrix, ClosureResult, DeviationTable, HomologyBasis, Stratum,
};
pub use quotient::{augment, buchberger, is_regular_sequence, GroebnerBasis, QuotientRing, TruncatedSeries};
pub use scalar::{Field, FieldElement};
pub use skewpoly::{ColorDegree, Monomial, NormalityCertificate, RingElement, SkewPolyRing};
