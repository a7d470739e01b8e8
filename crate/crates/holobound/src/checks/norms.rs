//! Quasinorms: the integral form, the weighted sup form, and the δ₀
//! functional estimated over candidate families.

use crate::error::{Error, Result};
use crate::function::HoloFunction;
use crate::integrate::sampler::{Sampler, SpaceLaw, SAMPLE_MARGIN};
use crate::integrate::{self, EngineSettings, IntegrationResult, PlanChoice};
use crate::point::CPoint;
use crate::rng::derive_seed;
use crate::weight::SpaceSpec;
use num_complex::Complex64;

pub fn is_even_integer(p: f64) -> bool {
    p > 0.0 && (p - p.round()).abs() < 1e-12 && (p.round() as i64) % 2 == 0
}

/// ‖f‖_{p;w} = ((1/N)∫|f|^p e^{−pw} dμ)^{1/p}.
///
/// Deterministic rules are eligible only when |f|^p has no cusps (zero-free
/// f or even integer p); otherwise the space's exact importance sampler is
/// used. Divergent integrals surface as non-converged results, not errors.
pub fn quasinorm(
    f: &HoloFunction,
    space: &SpaceSpec,
    plan: PlanChoice,
    settings: &EngineSettings,
    tag: u64,
) -> Result<IntegrationResult> {
    let p = space.p();
    if !p.is_finite() {
        return Err(Error::InvalidParameter(
            "integral quasinorm needs finite p".into(),
        ));
    }
    if f.dim() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            got: f.dim(),
        });
    }
    let smooth = f.is_zero_free() || is_even_integer(p);
    if smooth && plan != PlanChoice::ForceMonteCarlo {
        if let Some(mean) = separable_weighted_mean(f, space, p, settings)? {
            return Ok(power_transform(mean, p, settings));
        }
    }
    let log_g = |z: &CPoint| p * f.log_abs(z).expect("interior holomorphic evaluation");
    let mean = integrate::weighted_mean(space, p, &log_g, smooth, plan, settings, tag)?;
    Ok(power_transform(mean, p, settings))
}

/// Product functions on product factorizations integrate factor by factor:
/// (1/N)∫|Πf_j|^p e^{−pw} dμ = Π_j (1/N_j)∫|f_j|^p·(factor weight). Each
/// 1-D integral runs the deterministic ladder, so separable extremal
/// families get certified accuracy where a full tensor grid would be
/// unaffordable.
fn separable_weighted_mean(
    f: &HoloFunction,
    space: &SpaceSpec,
    p: f64,
    settings: &EngineSettings,
) -> Result<Option<IntegrationResult>> {
    use crate::weight::Factorization;
    let Factorization::Product(factors) = space.factorization(p)? else {
        return Ok(None);
    };
    let Some((scale, comps)) = f.separable_components() else {
        return Ok(None);
    };
    // every non-trivial component must itself avoid |·|^p cusps
    for c in comps.iter().flatten() {
        if !(c.is_zero_free() || is_even_integer(p)) {
            return Ok(None);
        }
    }
    let mut value = scale.norm().powf(p);
    let mut rel = 0.0;
    let mut nodes = 0u64;
    let mut converged = true;
    for (factor, comp) in factors.iter().zip(&comps) {
        let mass = integrate::factor_mass(factor, settings)?;
        nodes += mass.nodes;
        let mean_j = match comp {
            None => 1.0, // ∫ 1 · weight / mass
            Some(fj) => {
                let log_g =
                    |z: &CPoint| p * fj.log_abs(z).expect("interior holomorphic evaluation");
                let raw =
                    integrate::det_product_integral(std::slice::from_ref(factor), &log_g, settings)?;
                nodes += raw.nodes;
                converged &= raw.converged;
                rel += raw.relative_error() + mass.relative_error();
                raw.value / mass.value
            }
        };
        value *= mean_j;
    }
    Ok(Some(IntegrationResult {
        value,
        error: value.abs() * rel,
        method: crate::integrate::Method::TensorGauss,
        nodes,
        converged,
    }))
}

/// ((1/N)∫…)^{1/p} with error propagation; the convergence flag is
/// re-evaluated against the delivered value since the relative error
/// shrinks by 1/p under the root.
pub(crate) fn power_transform(
    mean: IntegrationResult,
    p: f64,
    settings: &EngineSettings,
) -> IntegrationResult {
    let value = if mean.value > 0.0 {
        mean.value.powf(1.0 / p)
    } else {
        0.0
    };
    let error = if mean.value > 0.0 {
        value * mean.relative_error() / p
    } else {
        0.0
    };
    let tol = match mean.method {
        crate::integrate::Method::MonteCarlo => settings.mc_tol,
        _ => settings.det_tol,
    };
    let converged = mean.converged || error <= tol * value.abs().max(f64::MIN_POSITIVE);
    IntegrationResult {
        value,
        error,
        converged,
        ..mean
    }
}

/// A certified lower bound for ‖f‖_{+∞;w} = sup |f|e^{−w}, with its witness.
#[derive(Debug, Clone)]
pub struct SupEstimate {
    pub value: f64,
    pub log_value: f64,
    pub argmax: CPoint,
    pub evaluations: u64,
}

/// Dense seeded sampling plus local refinement (golden-section line searches
/// along the coordinate axes and the radial ray). Always a valid lower bound
/// of the sup.
pub fn sup_quasinorm(
    f: &HoloFunction,
    space: &SpaceSpec,
    budget: usize,
    settings: &EngineSettings,
    tag: u64,
) -> Result<SupEstimate> {
    let n = space.dim();
    if f.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.dim(),
        });
    }
    let mut evals: u64 = 0;
    let h = |z: &CPoint| -> f64 {
        f.log_abs(z).expect("interior holomorphic evaluation")
            - space.weight_at(z).expect("interior weight evaluation")
    };

    let horizon = search_horizon(space);
    let mut starts: Vec<CPoint> = vec![CPoint::zero(n)];
    let seed = derive_seed(settings.seed, tag);
    let budget = budget.max(16);
    if space.p().is_finite() {
        if let Ok(law) = space
            .factorization(space.p())
            .and_then(|fact| SpaceLaw::from_factorization(&fact))
        {
            let s = Sampler::measure_weighted(space.domain().clone(), law, seed)?;
            starts.extend(s.sample(budget / 2)?);
        }
    }
    let uniform = Sampler::uniform(space.domain().clone(), derive_seed(seed, 1));
    starts.extend(uniform.sample(budget / 2)?);

    let mut scored: Vec<(f64, CPoint)> = starts
        .into_iter()
        .map(|z| {
            evals += 1;
            (h(&z), z)
        })
        .collect();
    scored.sort_by(|a, b| b.0.total_cmp(&a.0));
    scored.truncate(6);

    let mut best = scored[0].clone();
    for (_, start) in scored {
        let mut z = start;
        let mut val = h(&z);
        for _sweep in 0..3 {
            for j in 0..n {
                for dir_im in [false, true] {
                    let mut dir = vec![Complex64::new(0.0, 0.0); n];
                    dir[j] = if dir_im {
                        Complex64::new(0.0, 1.0)
                    } else {
                        Complex64::new(1.0, 0.0)
                    };
                    let dir = CPoint::new(dir)?;
                    let (nz, nv, ne) = line_max(&h, space.domain(), &z, &dir, horizon);
                    evals += ne;
                    if nv > val {
                        val = nv;
                        z = nz;
                    }
                }
            }
            // radial ray through the current point
            if z.norm() > 1e-12 {
                let dir = z.scale(Complex64::new(1.0 / z.norm(), 0.0));
                let (nz, nv, ne) =
                    line_max(&h, space.domain(), &CPoint::zero(n), &dir, horizon);
                evals += ne;
                if nv > val {
                    val = nv;
                    z = nz;
                }
            }
        }
        if val > best.0 {
            best = (val, z);
        }
    }
    Ok(SupEstimate {
        value: best.0.exp(),
        log_value: best.0,
        argmax: best.1,
        evaluations: evals,
    })
}

fn search_horizon(space: &SpaceSpec) -> f64 {
    use crate::weight::WeightSpec;
    match space.weight() {
        WeightSpec::Fock { alpha } => 10.0 / alpha.sqrt(),
        WeightSpec::FockAniso { alphas } => {
            10.0 / alphas.iter().cloned().fold(f64::INFINITY, f64::min).sqrt()
        }
        WeightSpec::BallBergman { .. } => 1.0,
        WeightSpec::PolydiscBergman { alphas, radii, .. } => {
            let mut m: f64 = 0.0;
            for (&a, &r) in alphas.iter().zip(radii) {
                m = m.max(if r.is_finite() { r } else { 10.0 / a.sqrt() });
            }
            m
        }
    }
}

/// Maximize φ(base + t·dir) over the feasible t-interval by golden section.
fn line_max(
    h: &impl Fn(&CPoint) -> f64,
    domain: &crate::domain::DomainSpec,
    base: &CPoint,
    dir: &CPoint,
    horizon: f64,
) -> (CPoint, f64, u64) {
    let at = |t: f64| -> Option<CPoint> {
        let z = base
            .add(&dir.scale(Complex64::new(t, 0.0)))
            .expect("same dimension");
        match domain.contains(&z, SAMPLE_MARGIN) {
            Ok(true) => Some(z),
            _ => None,
        }
    };
    // shrink the endpoints into the domain
    let mut evals = 0u64;
    let feasible_end = |mut t: f64| -> f64 {
        for _ in 0..60 {
            if at(t).is_some() {
                return t;
            }
            t *= 0.5;
        }
        0.0
    };
    let mut lo = feasible_end(-horizon);
    let mut hi = feasible_end(horizon);
    if hi - lo < 1e-14 {
        let z = at(0.0).unwrap_or_else(|| base.clone());
        let v = h(&z);
        return (z, v, 1);
    }
    let phi = |t: f64, evals: &mut u64| -> f64 {
        *evals += 1;
        match at(t) {
            Some(z) => h(&z),
            None => f64::NEG_INFINITY,
        }
    };
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = phi(c, &mut evals);
    let mut fd = phi(d, &mut evals);
    for _ in 0..80 {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = phi(c, &mut evals);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = phi(d, &mut evals);
        }
    }
    let t = if fc >= fd { c } else { d };
    match at(t) {
        Some(z) => {
            let v = h(&z);
            (z, v, evals + 1)
        }
        None => {
            let z = base.clone();
            let v = h(&z);
            (z, v, evals + 1)
        }
    }
}

/// Result of estimating ‖δ₀‖* over a candidate family.
#[derive(Debug, Clone)]
pub struct Delta0Estimate {
    pub value: f64,
    pub err_est: f64,
    pub argmax_index: usize,
    pub candidates_used: usize,
    pub integration: IntegrationResult,
}

/// max over the family of |φ(0)| / ‖φ‖_{p;w}.
///
/// All candidates share one sampling stream, so a constant candidate is
/// estimated with zero variance and anchors the maximum at exactly 1 for the
/// built-in radial spaces.
pub fn delta0_estimate(
    space: &SpaceSpec,
    family: &[HoloFunction],
    settings: &EngineSettings,
    tag: u64,
) -> Result<Delta0Estimate> {
    if family.is_empty() {
        return Err(Error::Degenerate("empty candidate family".into()));
    }
    let origin = CPoint::zero(space.dim());
    let mut best: Option<Delta0Estimate> = None;
    let mut used = 0usize;
    for (i, phi) in family.iter().enumerate() {
        let q = quasinorm(phi, space, PlanChoice::Auto, settings, tag)?;
        if !(q.value > 0.0) || !q.value.is_finite() {
            continue;
        }
        used += 1;
        let log_ratio = phi.log_abs(&origin)? - q.value.ln();
        let ratio = log_ratio.exp();
        let err = ratio * q.relative_error();
        if best.as_ref().is_none_or(|b| ratio > b.value) {
            best = Some(Delta0Estimate {
                value: ratio,
                err_est: err,
                argmax_index: i,
                candidates_used: 0,
                integration: q,
            });
        }
    }
    match best {
        Some(mut b) => {
            b.candidates_used = used;
            Ok(b)
        }
        None => Err(Error::Degenerate(
            "all candidates had zero or infinite quasinorm".into(),
        )),
    }
}
