//! The integration engine: tensor-product polar Gauss rules where the
//! geometry factorizes, radial reductions for ball normalizations, and
//! chunk-deterministic importance-sampled Monte Carlo everywhere else.

pub mod rules;
pub mod sampler;

use crate::error::{Error, Result};
use crate::point::CPoint;
use crate::rng::chunk_rng;
use crate::sum::{self, pairwise_total, Neumaier};
use crate::weight::{FactorKind, Factorization, SpaceSpec};
use num_complex::Complex64;
use sampler::SpaceLaw;

/// Engine configuration. One instance is shared by a whole run; per-call
/// stream tags keep stochastic results independent and reproducible.
#[derive(Debug, Clone, PartialEq)]
pub struct EngineSettings {
    pub seed: u64,
    /// Monte Carlo sample budget per integral.
    pub mc_samples: u64,
    /// Chunk size of the fixed reduction tree.
    pub mc_chunk: usize,
    /// Radial/angular node ladder: base counts, doubled per level up to the
    /// per-factor caps.
    pub det_radial_base: usize,
    pub det_angular_base: usize,
    pub det_radial_max: usize,
    pub det_angular_max: usize,
    /// Cap on the total tensor-grid size per integral.
    pub max_det_nodes: u64,
    /// Relative tolerances for the converged flag.
    pub det_tol: f64,
    pub mc_tol: f64,
}

impl Default for EngineSettings {
    fn default() -> Self {
        EngineSettings {
            seed: 0x5eed,
            mc_samples: 1_000_000,
            mc_chunk: 16_384,
            det_radial_base: 8,
            det_angular_base: 16,
            det_radial_max: 64,
            det_angular_max: 128,
            max_det_nodes: 300_000,
            det_tol: 1e-8,
            mc_tol: 1e-2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Method {
    /// Tensor product of per-factor polar Gauss rules.
    TensorGauss,
    /// One-dimensional radial reduction (normalizations, ball profiles).
    RadialGauss,
    /// Importance-sampled Monte Carlo.
    MonteCarlo,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::TensorGauss => "tensor-gauss",
            Method::RadialGauss => "radial-gauss",
            Method::MonteCarlo => "monte-carlo",
        })
    }
}

/// Value plus an honest error estimate: rule-doubling difference for the
/// deterministic rules, standard error of the mean for Monte Carlo.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct IntegrationResult {
    pub value: f64,
    pub error: f64,
    pub method: Method,
    pub nodes: u64,
    pub converged: bool,
}

impl IntegrationResult {
    pub fn relative_error(&self) -> f64 {
        if self.value == 0.0 {
            if self.error == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.error / self.value.abs()
        }
    }
}

/// How to pick the evaluation path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PlanChoice {
    /// Deterministic rule when the integrand is smooth-eligible and the
    /// tensor grid fits the budget; Monte Carlo otherwise.
    #[default]
    Auto,
    ForceDeterministic,
    ForceMonteCarlo,
}

/// N_q = ∫ e^{−q·w} dμ, always by deterministic radial reduction.
pub fn normalization(space: &SpaceSpec, q: f64, settings: &EngineSettings) -> Result<IntegrationResult> {
    match space.factorization(q)? {
        Factorization::Product(factors) => {
            let mut value = 1.0;
            let mut rel = 0.0;
            let mut nodes = 0u64;
            for f in &factors {
                let r = factor_mass(f, settings)?;
                value *= r.value;
                rel += r.relative_error();
                nodes += r.nodes;
            }
            Ok(IntegrationResult {
                value,
                error: value.abs() * rel,
                method: Method::RadialGauss,
                nodes,
                converged: true,
            })
        }
        Factorization::Ball { n, exponent } => {
            ball_radial_integral(n, exponent, |_| 0.0, settings)
        }
    }
}

/// Mass of one complex factor: ∫_ℂ e^{−β|z|²} dλ or ∫_{rD} (1−|z/r|²)^γ dλ.
pub(crate) fn factor_mass(
    factor: &FactorKind,
    _settings: &EngineSettings,
) -> Result<IntegrationResult> {
    let sums = |nr: usize| -> Result<f64> {
        Ok(match factor {
            FactorKind::Gauss { beta } => {
                let rule = rules::gauss_laguerre(nr)?;
                let scale = std::f64::consts::PI / beta;
                scale * rule.log_weights.iter().map(|lw| lw.exp()).sum::<f64>()
            }
            FactorKind::Disc { radius, gamma } => {
                let rule = rules::gauss_jacobi01(nr, *gamma)?;
                let scale = std::f64::consts::PI * radius * radius;
                scale * rule.log_weights.iter().map(|lw| lw.exp()).sum::<f64>()
            }
        })
    };
    let a = sums(16)?;
    let b = sums(32)?;
    Ok(IntegrationResult {
        value: b,
        error: (b - a).abs(),
        method: Method::RadialGauss,
        nodes: 48,
        converged: true,
    })
}

/// ∫_B (1−|z|²)^e g(|z|²) dλ over the unit ball of ℂⁿ via the radial profile:
/// 2πⁿ/(n−1)! · ½ ∫₀¹ (1−t)^e t^{n−1} e^{log_g(t)} dt.
pub fn ball_radial_integral(
    n: usize,
    exponent: f64,
    log_g: impl Fn(f64) -> f64,
    settings: &EngineSettings,
) -> Result<IntegrationResult> {
    let mut surface_log = (n as f64) * std::f64::consts::PI.ln() + std::f64::consts::LN_2;
    for k in 1..n {
        surface_log -= (k as f64).ln();
    }
    let half_log = -std::f64::consts::LN_2;
    let level = |nr: usize| -> Result<f64> {
        let rule = rules::gauss_jacobi01(nr, exponent)?;
        let mut acc = Neumaier::default();
        for (&t, &lw) in rule.nodes.iter().zip(&rule.log_weights) {
            let term =
                (surface_log + half_log + lw + (n as f64 - 1.0) * t.ln() + log_g(t)).exp();
            acc.add(term);
        }
        Ok(acc.total())
    };
    let mut nr = settings.det_radial_base.max(8);
    let mut prev = level(nr)?;
    let mut nodes = nr as u64;
    loop {
        nr *= 2;
        let cur = level(nr)?;
        nodes += nr as u64;
        let err = (cur - prev).abs();
        if err <= settings.det_tol * cur.abs().max(f64::MIN_POSITIVE) {
            return Ok(IntegrationResult {
                value: cur,
                error: err,
                method: Method::RadialGauss,
                nodes,
                converged: true,
            });
        }
        if nr >= settings.det_radial_max.max(128) {
            return Ok(IntegrationResult {
                value: cur,
                error: err,
                method: Method::RadialGauss,
                nodes,
                converged: false,
            });
        }
        prev = cur;
    }
}

/// Per-factor polar grid at one ladder level: signed radial nodes crossed
/// with half-circle directions, which tiles the full circle and keeps radial
/// profiles of entire integrands analytic through the origin.
struct FactorGrid {
    /// (node value, log weight) pairs, radial-major.
    nodes: Vec<(Complex64, f64)>,
}

fn factor_grid(factor: &FactorKind, nr: usize, na_half: usize) -> Result<FactorGrid> {
    let (thetas, _) = rules::half_angular_nodes(na_half);
    let mut nodes = Vec::with_capacity(2 * nr * na_half);
    // A signed radius x at direction θ is the point x·e^{iθ}; x < 0 lands on
    // the opposite ray, so [0,π) directions with ±x cover the full circle.
    let polar = |x: f64, th: f64| Complex64::new(x * th.cos(), x * th.sin());
    match factor {
        FactorKind::Gauss { beta } => {
            // ∫_ℂ h·e^{−β|z|²}dλ = ∫₀^π∫_ℝ h(xe^{iθ})|x|e^{−βx²} dx dθ;
            // per-node weight (π/(β·M))·w_i after x → x/√β.
            let rule = rules::radial_gauss(nr)?;
            let scale = 1.0 / beta.sqrt();
            let log_scale = std::f64::consts::PI.ln() - beta.ln() - (na_half as f64).ln();
            for (&x, &lw) in rule.nodes.iter().zip(&rule.log_weights) {
                for &th in &thetas {
                    nodes.push((polar(scale * x, th), lw + log_scale));
                }
            }
        }
        FactorKind::Disc { radius, gamma } => {
            let rule = rules::radial_jacobi(nr, *gamma)?;
            let log_scale =
                std::f64::consts::PI.ln() + 2.0 * radius.ln() - (na_half as f64).ln();
            for (&x, &lw) in rule.nodes.iter().zip(&rule.log_weights) {
                for &th in &thetas {
                    nodes.push((polar(radius * x, th), lw + log_scale));
                }
            }
        }
    }
    Ok(FactorGrid { nodes })
}

/// Deterministic tensor integral over per-factor reference measures:
/// Π_j e^{−β_j|z_j|²}dλ or (1−|z_j/r_j|²)^{γ_j}dλ, times e^{log_g(z)}.
/// The rule weights absorb the reference factors exactly, so `log_g` carries
/// only the remaining smooth part.
pub fn det_product_integral<G>(
    factors: &[FactorKind],
    log_g: &G,
    settings: &EngineSettings,
) -> Result<IntegrationResult>
where
    G: Fn(&CPoint) -> f64 + Sync,
{
    let nfac = factors.len();
    let mut level = 0u32;
    let mut prev: Option<(f64, u64)> = None;
    let mut last: Option<(f64, f64, u64)> = None;
    let mut total_nodes = 0u64;
    loop {
        let nr = (settings.det_radial_base << level).min(settings.det_radial_max);
        let na = (settings.det_angular_base << level).min(settings.det_angular_max);
        let na_half = (na / 2).max(4);
        let grid_nodes = (2 * nr as u64 * na_half as u64).pow(nfac as u32);
        if grid_nodes > settings.max_det_nodes {
            break;
        }
        let grids: Vec<FactorGrid> = factors
            .iter()
            .map(|f| factor_grid(f, nr, na_half))
            .collect::<Result<_>>()?;
        let sizes: Vec<usize> = grids.iter().map(|g| g.nodes.len()).collect();
        let total: usize = sizes.iter().product();
        let value = sum::sum_indexed(total, settings.mc_chunk, |idx| {
            let mut rest = idx;
            let mut logw = 0.0;
            let mut coords = Vec::with_capacity(nfac);
            for (g, &s) in grids.iter().zip(&sizes) {
                let i = rest % s;
                rest /= s;
                let (z, lw) = g.nodes[i];
                coords.push(z);
                logw += lw;
            }
            let z = CPoint::new(coords).expect("grid nodes are finite");
            let lg = log_g(&z);
            let e = logw + lg;
            if e == f64::NEG_INFINITY {
                0.0
            } else {
                e.exp()
            }
        });
        total_nodes += total as u64;
        if let Some((pv, _)) = prev {
            let err = (value - pv).abs();
            last = Some((value, err, total_nodes));
            if err <= settings.det_tol * value.abs().max(f64::MIN_POSITIVE) {
                return Ok(IntegrationResult {
                    value,
                    error: err,
                    method: Method::TensorGauss,
                    nodes: total_nodes,
                    converged: true,
                });
            }
        }
        let capped = nr >= settings.det_radial_max && na >= settings.det_angular_max;
        prev = Some((value, total_nodes));
        level += 1;
        if capped {
            break;
        }
    }
    match last {
        Some((value, error, nodes)) => Ok(IntegrationResult {
            value,
            error,
            method: Method::TensorGauss,
            nodes,
            converged: false,
        }),
        None => Err(Error::Integration(
            "deterministic plan cannot run two ladder levels within the node budget".into(),
        )),
    }
}

/// Whether the auto plan may take the deterministic path for this space:
/// the ladder must be able to reach a trustworthy per-factor grid (32 radial
/// × 64 angular) within the node budget.
fn det_feasible(fact: &Factorization, settings: &EngineSettings) -> bool {
    match fact {
        Factorization::Product(factors) => {
            let nfac = factors.len() as u32;
            (32u64 * 64).pow(nfac) <= settings.max_det_nodes
        }
        Factorization::Ball { .. } => false,
    }
}

/// Monte Carlo estimate of the weighted mean (1/N_q)∫ e^{log_g} e^{−qw} dμ
/// by sampling the normalized law e^{−qw}dμ/N_q.
fn mc_weighted_mean<G>(
    law: &SpaceLaw,
    log_g: &G,
    settings: &EngineSettings,
    tag: u64,
) -> Result<IntegrationResult>
where
    G: Fn(&CPoint) -> f64 + Sync,
{
    let n = settings.mc_samples.max(2);
    let chunk = settings.mc_chunk.max(1) as u64;
    let nchunks = n.div_ceil(chunk) as usize;
    let parts = sum::map_chunks(nchunks, |c| {
        let mut rng = chunk_rng(settings.seed, tag, c as u64);
        let lo = c as u64 * chunk;
        let hi = ((c as u64 + 1) * chunk).min(n);
        let (mut s, mut s2) = (Neumaier::default(), Neumaier::default());
        for _ in lo..hi {
            let z = law.draw(&mut rng);
            let lg = log_g(&z);
            let g = if lg == f64::NEG_INFINITY { 0.0 } else { lg.exp() };
            s.add(g);
            s2.add(g * g);
        }
        (s.total(), s2.total())
    });
    let (sv, s2v): (Vec<f64>, Vec<f64>) = parts.into_iter().unzip();
    let (sum_g, sum_g2) = (pairwise_total(sv), pairwise_total(s2v));
    let nf = n as f64;
    let mean = sum_g / nf;
    let var = ((sum_g2 - sum_g * sum_g / nf) / (nf - 1.0)).max(0.0);
    let std_err = (var / nf).sqrt();
    let converged = std_err <= settings.mc_tol * mean.abs().max(f64::MIN_POSITIVE)
        || (mean == 0.0 && std_err == 0.0);
    Ok(IntegrationResult {
        value: mean,
        error: std_err,
        method: Method::MonteCarlo,
        nodes: n,
        converged,
    })
}

/// The normalized weighted mean (1/N_q) ∫ e^{log_g(z)} e^{−q·w(z)} dμ(z).
///
/// `smooth` certifies that the integrand has no |·|^p-type cusps on the
/// domain (zero-free f, or an even integer power), which gates the
/// deterministic path under `PlanChoice::Auto`.
pub fn weighted_mean<G>(
    space: &SpaceSpec,
    q: f64,
    log_g: &G,
    smooth: bool,
    plan: PlanChoice,
    settings: &EngineSettings,
    tag: u64,
) -> Result<IntegrationResult>
where
    G: Fn(&CPoint) -> f64 + Sync,
{
    let fact = space.factorization(q)?;
    let deterministic = match plan {
        PlanChoice::ForceDeterministic => true,
        PlanChoice::ForceMonteCarlo => false,
        PlanChoice::Auto => smooth && det_feasible(&fact, settings),
    };
    if deterministic {
        let Factorization::Product(factors) = &fact else {
            return Err(Error::Integration(
                "deterministic tensor rules are unavailable on the ball for n >= 2".into(),
            ));
        };
        let raw = det_product_integral(factors, log_g, settings)?;
        let nq = if q == space.p() {
            space
                .normalization()
                .copied()
                .map_or_else(|| normalization(space, q, settings), Ok)?
        } else {
            normalization(space, q, settings)?
        };
        let value = raw.value / nq.value;
        let rel = raw.relative_error() + nq.relative_error();
        Ok(IntegrationResult {
            value,
            error: value.abs() * rel,
            method: raw.method,
            nodes: raw.nodes + nq.nodes,
            converged: raw.converged && nq.converged,
        })
    } else {
        let law = SpaceLaw::from_factorization(&fact)?;
        mc_weighted_mean(&law, log_g, settings, tag)
    }
}

/// ∫ e^{log_g} e^{−q·w} dμ (unnormalized), with the N_q factor restored on
/// the Monte Carlo path.
pub fn weighted_integral<G>(
    space: &SpaceSpec,
    q: f64,
    log_g: &G,
    smooth: bool,
    plan: PlanChoice,
    settings: &EngineSettings,
    tag: u64,
) -> Result<IntegrationResult>
where
    G: Fn(&CPoint) -> f64 + Sync,
{
    let mean = weighted_mean(space, q, log_g, smooth, plan, settings, tag)?;
    let nq = if q == space.p() {
        space
            .normalization()
            .copied()
            .map_or_else(|| normalization(space, q, settings), Ok)?
    } else {
        normalization(space, q, settings)?
    };
    let value = mean.value * nq.value;
    let rel = mean.relative_error() + nq.relative_error();
    Ok(IntegrationResult {
        value,
        error: value.abs() * rel,
        ..mean
    })
}

/// Monte Carlo mean of g over an explicit sampling law (used by invariance
/// checks and the integrated-estimate check, which integrate against
/// measures other than the space law).
pub fn mc_mean_of_law<G>(
    law: &SpaceLaw,
    g: &G,
    settings: &EngineSettings,
    tag: u64,
) -> IntegrationResult
where
    G: Fn(&CPoint) -> f64 + Sync,
{
    let n = settings.mc_samples.max(2);
    let chunk = settings.mc_chunk.max(1) as u64;
    let nchunks = n.div_ceil(chunk) as usize;
    let parts = sum::map_chunks(nchunks, |c| {
        let mut rng = chunk_rng(settings.seed, tag, c as u64);
        let lo = c as u64 * chunk;
        let hi = ((c as u64 + 1) * chunk).min(n);
        let (mut s, mut s2) = (Neumaier::default(), Neumaier::default());
        for _ in lo..hi {
            let z = law.draw(&mut rng);
            let v = g(&z);
            s.add(v);
            s2.add(v * v);
        }
        (s.total(), s2.total())
    });
    let (sv, s2v): (Vec<f64>, Vec<f64>) = parts.into_iter().unzip();
    let (sum_g, sum_g2) = (pairwise_total(sv), pairwise_total(s2v));
    let nf = n as f64;
    let mean = sum_g / nf;
    let var = ((sum_g2 - sum_g * sum_g / nf) / (nf - 1.0)).max(0.0);
    let std_err = (var / nf).sqrt();
    IntegrationResult {
        value: mean,
        error: std_err,
        method: Method::MonteCarlo,
        nodes: n,
        converged: std_err <= settings.mc_tol * mean.abs().max(f64::MIN_POSITIVE),
    }
}
