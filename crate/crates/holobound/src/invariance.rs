//! Numerical verification of the pushforward identity aμ = μ:
//! ∫ g dμ is compared with ∫ (g∘a) dμ for μ-integrable test integrands.

use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::function::HoloFunction;
use crate::integrate::sampler::{FactorLaw, SpaceLaw};
use crate::integrate::{self, EngineSettings, IntegrationResult, Method};
use crate::point::CPoint;
use crate::weight::{DensityKind, FactorKind, MeasureSpec};

/// μ-integrable closed-form test integrands, matched to the measure family.
#[derive(Debug, Clone, PartialEq)]
pub enum TestIntegrand {
    /// |h(z)|²·e^{−rate·|z|²} with h a poly-exp function (Lebesgue cases).
    GaussDamped { rate: f64, h: HoloFunction },
    /// (1−|z|²)^σ on the unit ball; integrable against the invariant
    /// measure iff σ > n.
    BoundaryPower { sigma: f64 },
    /// Π over finite factors (1−|z_j/r_j|²)^{σ_j} (σ_j > 1) and Gaussian
    /// factors e^{−σ_j|z_j|²} on infinite ones.
    FactorBoundaryPower { sigmas: Vec<f64> },
}

impl TestIntegrand {
    /// ln g(z); −∞ where g vanishes.
    pub fn log_value(&self, z: &CPoint, measure: &MeasureSpec) -> Result<f64> {
        match self {
            TestIntegrand::GaussDamped { rate, h } => {
                Ok(2.0 * h.log_abs(z)? - rate * z.norm2())
            }
            TestIntegrand::BoundaryPower { sigma } => {
                Ok(sigma * (1.0 - z.norm2()).ln())
            }
            TestIntegrand::FactorBoundaryPower { sigmas } => {
                let radii = measure_radii(measure)?;
                let mut s = 0.0;
                for ((c, &r), &sig) in z.coords().iter().zip(radii).zip(sigmas) {
                    if r.is_finite() {
                        s += sig * (1.0 - c.norm_sqr() / (r * r)).ln();
                    } else {
                        s += -sig * c.norm_sqr();
                    }
                }
                Ok(s)
            }
        }
    }
}

fn measure_radii(measure: &MeasureSpec) -> Result<&[f64]> {
    match &measure.domain {
        crate::domain::DomainSpec::Polydisc { radii, .. } => Ok(radii),
        _ => Err(Error::InvalidParameter(
            "factor integrand needs a polydisc measure".into(),
        )),
    }
}

/// Outcome of one invariance comparison.
#[derive(Debug, Clone, Copy)]
pub struct InvarianceOutcome {
    pub lhs: IntegrationResult,
    pub rhs: IntegrationResult,
    /// |lhs − rhs| / max(|lhs|, ε)
    pub rel_error: f64,
    /// √(err_lhs² + err_rhs²)
    pub combined_err: f64,
}

/// Compare ∫ g dμ against ∫ (g∘a) dμ.
///
/// Lebesgue/translation pairs run on the deterministic tensor rules; the
/// ball and polydisc invariant measures (infinite total mass, boundary
/// singularities) are estimated by importance-sampled Monte Carlo from a
/// boundary-matched reference law. A non-converged estimate is reported, not
/// errored.
pub fn invariance_check(
    map: &Automorphism,
    measure: &MeasureSpec,
    integrand: &TestIntegrand,
    settings: &EngineSettings,
    tag: u64,
) -> Result<InvarianceOutcome> {
    if map.dim() != measure.domain.dim() {
        return Err(Error::DimensionMismatch {
            expected: measure.domain.dim(),
            got: map.dim(),
        });
    }
    let (lhs, rhs) = match (measure.kind, integrand) {
        (DensityKind::Lebesgue, TestIntegrand::GaussDamped { rate, .. }) => {
            let factors = vec![FactorKind::Gauss { beta: *rate }; measure.domain.dim()];
            let lhs = integrate::det_product_integral(
                &factors,
                &|z: &CPoint| {
                    integrand.log_value(z, measure).expect("interior point") + rate * z.norm2()
                },
                settings,
            )?;
            let rhs = integrate::det_product_integral(
                &factors,
                &|z: &CPoint| {
                    let az = map.apply(z).expect("translation is entire");
                    integrand.log_value(&az, measure).expect("interior point")
                        + rate * z.norm2()
                },
                settings,
            )?;
            (lhs, rhs)
        }
        (DensityKind::BallInvariant, TestIntegrand::BoundaryPower { sigma }) => {
            let n = measure.domain.dim();
            if !(*sigma > n as f64) {
                return Err(Error::InvalidParameter(format!(
                    "boundary power {sigma} is not mu-integrable on the ball (needs > {n})"
                )));
            }
            let e_ref = sigma - (n as f64 + 1.0);
            // Reference mass C = ∫ (1−|z|²)^{e_ref} dλ, then
            // ∫ F dμ = C · E_law[F(z)·(1−|z|²)^{−(n+1)−e_ref}].
            let mass = integrate::ball_radial_integral(n, e_ref, |_| 0.0, settings)?;
            let law = SpaceLaw::Ball {
                n,
                exponent: e_ref,
            };
            let lhs_mean = integrate::mc_mean_of_law(
                &law,
                &|z: &CPoint| {
                    let lg = integrand.log_value(z, measure).expect("interior");
                    (lg - (sigma) * (1.0 - z.norm2()).ln()).exp()
                },
                settings,
                tag ^ 0x11,
            );
            let rhs_mean = integrate::mc_mean_of_law(
                &law,
                &|z: &CPoint| {
                    let az = map.apply(z).expect("ball maps to ball");
                    let lg = integrand.log_value(&az, measure).expect("interior");
                    (lg - (sigma) * (1.0 - z.norm2()).ln()).exp()
                },
                settings,
                tag ^ 0x22,
            );
            (scale_result(lhs_mean, &mass), scale_result(rhs_mean, &mass))
        }
        (DensityKind::PolydiscInvariant, TestIntegrand::FactorBoundaryPower { sigmas }) => {
            let radii = measure_radii(measure)?.to_vec();
            if sigmas.len() != radii.len() {
                return Err(Error::DimensionMismatch {
                    expected: radii.len(),
                    got: sigmas.len(),
                });
            }
            let mut mass_value = 1.0;
            let mut laws = Vec::with_capacity(radii.len());
            for (&r, &sig) in radii.iter().zip(sigmas) {
                if r.is_finite() {
                    if !(sig > 1.0) {
                        return Err(Error::InvalidParameter(format!(
                            "factor power {sig} is not mu-integrable (needs > 1)"
                        )));
                    }
                    // ∫_{rD}(1−|z/r|²)^{σ−2}dλ = πr²/(σ−1)
                    mass_value *= std::f64::consts::PI * r * r / (sig - 1.0);
                    laws.push(FactorLaw::DiscBeta {
                        radius: r,
                        gamma: sig - 2.0,
                    });
                } else {
                    if !(sig > 0.0) {
                        return Err(Error::InvalidParameter(
                            "Gaussian factor power must be positive".into(),
                        ));
                    }
                    mass_value *= std::f64::consts::PI / sig;
                    laws.push(FactorLaw::Gaussian { beta: sig });
                }
            }
            // Closed-form factor masses; quadrature error is negligible here.
            let mass = IntegrationResult {
                value: mass_value,
                error: mass_value * 1e-15,
                method: Method::RadialGauss,
                nodes: 0,
                converged: true,
            };
            let law = SpaceLaw::Product(laws);
            let log_ref = {
                let radii = radii.clone();
                let sigmas = sigmas.clone();
                move |z: &CPoint| -> f64 {
                    let mut s = 0.0;
                    for ((c, &r), &sig) in z.coords().iter().zip(&radii).zip(&sigmas) {
                        if r.is_finite() {
                            s += (sig - 2.0) * (1.0 - c.norm_sqr() / (r * r)).ln();
                        } else {
                            s += -sig * c.norm_sqr();
                        }
                    }
                    s
                }
            };
            let log_density = {
                let radii = radii.clone();
                move |z: &CPoint| -> f64 {
                    let mut s = 0.0;
                    for (c, &r) in z.coords().iter().zip(&radii) {
                        if r.is_finite() {
                            s += -2.0 * (1.0 - c.norm_sqr() / (r * r)).ln();
                        }
                    }
                    s
                }
            };
            let lhs_mean = integrate::mc_mean_of_law(
                &law,
                &|z: &CPoint| {
                    let lg = integrand.log_value(z, measure).expect("interior");
                    (lg + log_density(z) - log_ref(z)).exp()
                },
                settings,
                tag ^ 0x11,
            );
            let rhs_mean = integrate::mc_mean_of_law(
                &law,
                &|z: &CPoint| {
                    let az = map.apply(z).expect("polydisc maps to polydisc");
                    let lg = integrand.log_value(&az, measure).expect("interior");
                    (lg + log_density(z) - log_ref(z)).exp()
                },
                settings,
                tag ^ 0x22,
            );
            (scale_result(lhs_mean, &mass), scale_result(rhs_mean, &mass))
        }
        _ => {
            return Err(Error::MismatchedPair(
                "integrand family does not match the measure family".into(),
            ))
        }
    };
    let combined_err = (lhs.error * lhs.error + rhs.error * rhs.error).sqrt();
    let rel_error = (lhs.value - rhs.value).abs() / lhs.value.abs().max(1e-30);
    Ok(InvarianceOutcome {
        lhs,
        rhs,
        rel_error,
        combined_err,
    })
}

fn scale_result(mean: IntegrationResult, mass: &IntegrationResult) -> IntegrationResult {
    let value = mean.value * mass.value;
    let rel = mean.relative_error() + mass.relative_error();
    IntegrationResult {
        value,
        error: value.abs() * rel,
        ..mean
    }
}
