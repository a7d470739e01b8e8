//! The estimate battery: quasinorms, bound checks, sharpness certification,
//! the δ₀ functional, scheme equalities, and their report types.

pub mod bounds;
pub mod family;
pub mod norms;
pub mod report;
pub mod scheme;
pub mod tol;

pub use bounds::{
    integrated_bound_check, pluriharmonicity_check, pointwise_bound_check, psi_match_check,
    sharpness_check, sup_bound_check, MonotoneMap, SharpnessMode,
};
pub use norms::{delta0_estimate, is_even_integer, quasinorm, sup_quasinorm, SupEstimate};
pub use report::{CaseContext, EstimateReport, Verdict};
pub use scheme::{scheme_check, scheme_norm, scheme_point_value, SchemeSpec};
