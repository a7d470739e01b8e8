//! Numerical verification of sharp pointwise evaluation bounds on weighted
//! spaces of holomorphic functions: Fock–Bargmann spaces over ℂⁿ and
//! Bergman–Djrbashian spaces over the unit ball and poly-discs.
//!
//! The library builds weighted spaces (domain, invariant measure, weight,
//! exponent p), the automorphism families that fix the normalization point,
//! and an integration engine (polar Gauss rules + importance-sampled Monte
//! Carlo with a fixed, thread-count-independent reduction tree), and runs
//! the pointwise/sup bound checks, sharpness certifications, measure
//! invariance tests, and the generic scheme equalities on top of them.

pub mod automorphism;
pub mod checks;
pub mod domain;
pub mod error;
pub mod function;
pub mod integrate;
pub mod invariance;
pub mod point;
pub mod rng;
pub mod sum;
pub mod weight;

pub use automorphism::Automorphism;
pub use domain::DomainSpec;
pub use error::{Error, Result};
pub use function::{HoloFunction, PolyExpTerm};
pub use integrate::sampler::{Sampler, SpaceLaw, Strategy};
pub use integrate::{EngineSettings, IntegrationResult, Method, PlanChoice};
pub use point::CPoint;
pub use weight::{
    psi_representative, DensityKind, Factorization, MeasureSpec, SpaceSpec, WeightSpec,
};

/// True when the crate was built with the rayon-backed parallel engine.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}
