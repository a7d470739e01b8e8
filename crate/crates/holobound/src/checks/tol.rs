//! Centralized check tolerances.
//!
//! Every verdict threshold used by the check battery is defined here, sized
//! to the numerical method behind it: f64 arithmetic for closed-form
//! identities, rule-doubling error for Gauss quadrature, standard errors for
//! Monte Carlo.

/// Exact algebraic identities evaluated through different floating-point
/// paths (ψ vs. w − w∘a, the scheme equality (i)). Allows ~6 digits of
/// accumulated rounding over compositions of exp/log.
pub const EXACT_IDENTITY_REL: f64 = 1e-10;

/// Base relative slack of the pointwise/sup bound verdicts. Bounds hold
/// exactly in truth; the slack only absorbs f64 evaluation noise. Combined
/// with `MC_SIGMA`× the propagated integration error.
pub const BOUND_BASE_REL: f64 = 1e-6;

/// Number of standard errors granted to Monte Carlo comparisons.
pub const MC_SIGMA: f64 = 3.0;

/// Standard errors for the two-sided integral-equality comparisons of the
/// scheme battery. Those run hundreds of independent two-sample tests per
/// suite, so 4σ keeps the family-wise false-alarm rate below one percent.
pub const SCHEME_SIGMA: f64 = 4.0;

/// Sharpness of the Gaussian-weight extremal family: ratio must sit inside
/// [1 − SHARPNESS_BAND, 1 + SHARPNESS_BAND] under deterministic quadrature.
pub const SHARPNESS_BAND: f64 = 1e-4;

/// Sharpness evidence threshold for kernel-power candidate families on the
/// ball/polydisc: max ratio must reach 1 − SHARPNESS_SLACK.
pub const SHARPNESS_SLACK: f64 = 1e-3;

/// δ₀ estimates over candidate families: the attained maximum must land in
/// [1 − DELTA0_LOWER, 1 + DELTA0_UPPER]; the upper excess can only come from
/// integration error.
pub const DELTA0_LOWER: f64 = 1e-9;
pub const DELTA0_UPPER: f64 = 1e-4;

/// Pluriharmonicity stencil residual bound, relative to the local scale
/// 1 + |g(z)|, for step h = STENCIL_STEP. The stencil truncation is
/// (h²/12)·(g_xxxx + g_yyyy); with the built-in weights and base points of
/// modulus ≤ 0.7 the fourth derivatives stay below ~10³, so h = 2.5e−4 keeps
/// truncation under 1e−7 while f64 rounding contributes ~1e−16/h² ≈ 3e−9.
pub const STENCIL_REL: f64 = 1e-6;
pub const STENCIL_STEP: f64 = 2.5e-4;

/// Matched-pair identity ln|ψ| = w − w∘a, relative to 1 + |w(z)|.
pub const PSI_MATCH_REL: f64 = 1e-10;

/// Deterministic invariance comparisons (translation + Lebesgue).
pub const INVARIANCE_DET_REL: f64 = 1e-8;

/// Derived-value cross-checks between the engine and closed-form oracles.
pub const ORACLE_REL: f64 = 1e-8;
