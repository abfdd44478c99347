//! Exact computations on orbifold projective lines `P¹(A, Λ)`: the weight
//! lattice, the Grothendieck group, Hom and Ext dimensions between
//! catalogued sheaves, slope stability conditions `σ_τ` and their global
//! dimension.

pub mod error;
pub mod exactnum;
pub mod gldim;
pub mod homdim;
pub mod k0;
pub mod lattice;
pub mod stability;

pub use error::{Error, Result};
pub use exactnum::{arg_compare, parse_rat, phase_compare, phase_float, rat, GaussRat, Phase, Rat};
pub use gldim::{
    gepner_check, max_gap, scan, wild_gap, Catalog, CatalogEntry, Exactness, GapReport, ScanRow,
    ScanTable, Witness, SERRE_DIMENSION,
};
pub use homdim::{ext1_dim, graded_dim, hom_dim, Dim, HomQuery};
pub use k0::{class_of, class_of_line, degree, twist, BasisLabel, K0Class, SheafObject};
pub use lattice::{LVec, WeightSpec, WeightType};
pub use stability::{
    central_charge, is_semistable, phase, slope, theorem1_check, Certificate, ChargeAssignment,
    RejectReason, SemistabilityVerdict, Slope, StabilityParam, Theorem1Verdict,
};
