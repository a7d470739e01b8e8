//! The generic scheme equalities behind the bounds, checked numerically:
//! with u = ln|f|, v = w, and a moving 0 to z₀,
//!   (i)  u(z₀) − v(z₀) + v(0) = u₀^{z₀}(0),  u₀^{z₀} = u∘a + (v − v∘a);
//!   (ii) ∫ Φ∘(u−v) dμ = ∫ Φ∘(u₀^{z₀}−v) dμ  for Φ(t) = e^{st}.

use crate::automorphism::Automorphism;
use crate::checks::norms::is_even_integer;
use crate::checks::report::{exact_integration, CaseContext, EstimateReport};
use crate::checks::tol;
use crate::error::{Error, Result};
use crate::function::HoloFunction;
use crate::integrate::{self, EngineSettings, IntegrationResult, PlanChoice};
use crate::point::CPoint;
use crate::weight::SpaceSpec;

/// The abstract sextuple of the generic scheme, specialized to holomorphic
/// classes: the class sample U = {ln|f|}, the reference v = w from the space,
/// the outer maps Φ(t) = e^{st}, q(t) = e^t, Q(t) = t^{1/s}·N_s^{−1/s}, the
/// automorphism, and μ from the space.
#[derive(Debug, Clone)]
pub struct SchemeSpec {
    pub space: SpaceSpec,
    pub map: Automorphism,
    /// The rate s of Φ(t) = e^{st} (the holomorphic specialization uses the
    /// space exponent p).
    pub phi_rate: f64,
    pub class_sample: Vec<HoloFunction>,
}

impl SchemeSpec {
    pub fn validate(&self) -> Result<()> {
        if self.map.dim() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                got: self.map.dim(),
            });
        }
        if !(self.phi_rate > 0.0) || !self.phi_rate.is_finite() {
            return Err(Error::InvalidParameter("phi rate must be finite and > 0".into()));
        }
        // the outer maps must see a finite reference integral
        self.space.factorization(self.phi_rate)?;
        Ok(())
    }
}

fn context(spec: &SchemeSpec, which: &str, f: &HoloFunction) -> CaseContext {
    CaseContext {
        check: "scheme",
        geometry: spec.space.weight().variant_name().to_string(),
        n: spec.space.dim(),
        p: spec.phi_rate,
        alpha: spec.space.weight().alpha_label(),
        point: spec.map.base_point().to_string(),
        descriptor: format!("{which}:{}", f.label()),
    }
}

/// Check the two lemma equalities for one class member u = ln|f|.
/// Returns (exact-equality report, integral-equality report).
pub fn scheme_check(
    spec: &SchemeSpec,
    f: &HoloFunction,
    settings: &EngineSettings,
    tag: u64,
) -> Result<(EstimateReport, EstimateReport)> {
    spec.validate()?;
    let space = &spec.space;
    let map = &spec.map;
    let s = spec.phi_rate;
    let origin = CPoint::zero(space.dim());
    let z0 = map.base_point();

    // (i): both sides evaluated through different floating-point paths.
    let u_at = |z: &CPoint| f.log_abs(z);
    let v_at = |z: &CPoint| space.weight_at(z);
    let lhs_i = u_at(&z0)? - v_at(&z0)? + v_at(&origin)?;
    let a0 = map.apply(&origin)?;
    let rhs_i = u_at(&a0)? + v_at(&origin)? - v_at(&a0)?;
    let (dev_i, scale_i) = if lhs_i == f64::NEG_INFINITY && rhs_i == f64::NEG_INFINITY {
        (0.0, 1.0)
    } else {
        ((lhs_i - rhs_i).abs(), 1.0 + lhs_i.abs().max(rhs_i.abs()))
    };
    let report_i = context(spec, "point-equality", f).deviation_report(
        dev_i,
        tol::EXACT_IDENTITY_REL * scale_i,
        &exact_integration(),
    );

    // (ii): ∫ e^{s·u} e^{−s·v} dμ  vs  ∫ e^{s·(u∘a)} e^{−s·(v∘a)} dμ,
    // both as N_s·(weighted mean) through the shared engine.
    let smooth = f.is_zero_free() || is_even_integer(s);
    let log_lhs = |z: &CPoint| s * f.log_abs(z).expect("interior evaluation");
    let log_rhs = |z: &CPoint| {
        let az = map.apply(z).expect("automorphism maps the domain into itself");
        s * (f.log_abs(&az).expect("interior evaluation")
            - space.weight_at(&az).expect("interior weight")
            + space.weight_at(z).expect("interior weight"))
    };
    let lhs = integrate::weighted_integral(
        space,
        s,
        &log_lhs,
        smooth,
        PlanChoice::Auto,
        settings,
        tag ^ 0xa1,
    )?;
    let rhs = integrate::weighted_integral(
        space,
        s,
        &log_rhs,
        smooth,
        PlanChoice::Auto,
        settings,
        tag ^ 0xb2,
    )?;
    let combined_err = (lhs.error * lhs.error + rhs.error * rhs.error).sqrt();
    let allowance = tol::SCHEME_SIGMA * combined_err
        + tol::EXACT_IDENTITY_REL * lhs.value.abs().max(rhs.value.abs());
    let merged = IntegrationResult {
        value: lhs.value,
        error: combined_err,
        method: rhs.method,
        nodes: lhs.nodes + rhs.nodes,
        converged: lhs.converged && rhs.converged,
    };
    let report_ii = context(spec, "integral-equality", f).deviation_report(
        (lhs.value - rhs.value).abs(),
        allowance,
        &merged,
    );
    Ok((report_i, report_ii))
}

/// ‖u‖ = Q(∫Φ∘(u−v)dμ) with the exp-family outer maps; coincides with the
/// integral quasinorm when s = p.
pub fn scheme_norm(
    spec: &SchemeSpec,
    f: &HoloFunction,
    settings: &EngineSettings,
    tag: u64,
) -> Result<IntegrationResult> {
    let s = spec.phi_rate;
    let smooth = f.is_zero_free() || is_even_integer(s);
    let log_g = |z: &CPoint| s * f.log_abs(z).expect("interior evaluation");
    let mean = integrate::weighted_mean(
        &spec.space,
        s,
        &log_g,
        smooth,
        PlanChoice::Auto,
        settings,
        tag,
    )?;
    Ok(crate::checks::norms::power_transform(mean, s, settings))
}

/// q(u(y) − v(y) + v(x)) at x = 0, y = z₀ — the left side of the generic
/// bound, equal to |f(z₀)|·e^{−w(z₀)}·e^{w(0)}.
pub fn scheme_point_value(spec: &SchemeSpec, f: &HoloFunction) -> Result<f64> {
    let z0 = spec.map.base_point();
    let origin = CPoint::zero(spec.space.dim());
    Ok((f.log_abs(&z0)? - spec.space.weight_at(&z0)? + spec.space.weight_at(&origin)?).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::norms::quasinorm;
    use crate::checks::report::Verdict;
    use crate::domain::DomainSpec;
    use crate::weight::{DensityKind, MeasureSpec, WeightSpec};
    use approx::assert_relative_eq;
    use num_complex::Complex64;

    fn settings() -> EngineSettings {
        EngineSettings {
            mc_samples: 200_000,
            ..EngineSettings::default()
        }
    }

    fn fock_scheme(z0: Complex64, rate: f64) -> SchemeSpec {
        let dom = DomainSpec::full_space(1).unwrap();
        let meas = MeasureSpec::new(dom.clone(), DensityKind::Lebesgue).unwrap();
        let space = SpaceSpec::new(
            dom,
            meas,
            WeightSpec::Fock { alpha: 1.0 },
            rate,
            &settings(),
        )
        .unwrap();
        SchemeSpec {
            space,
            map: Automorphism::translation(CPoint::scalar(z0)),
            phi_rate: rate,
            class_sample: vec![],
        }
    }

    #[test]
    fn identity_map_equalities_hold_exactly() {
        let spec = fock_scheme(Complex64::new(0.0, 0.0), 2.0);
        let f = HoloFunction::from_terms(
            vec![
                crate::function::PolyExpTerm::new(
                    Complex64::new(1.0, 0.0),
                    vec![0],
                    vec![Complex64::new(0.0, 0.0)],
                )
                .unwrap(),
                crate::function::PolyExpTerm::new(
                    Complex64::new(1.0, 0.0),
                    vec![1],
                    vec![Complex64::new(0.0, 0.0)],
                )
                .unwrap(),
            ],
            "1+z",
        )
        .unwrap();
        let (r1, r2) = scheme_check(&spec, &f, &settings(), 1).unwrap();
        assert_eq!(r1.verdict, Verdict::Pass, "{r1:?}");
        assert_eq!(r2.verdict, Verdict::Pass, "{r2:?}");
        assert!(r1.lhs < 1e-14);
    }

    #[test]
    fn translation_equalities_fock() {
        // u = ln|1+ζ|, Φ = e^{2t}
        let spec = fock_scheme(Complex64::new(0.7, -0.3), 2.0);
        let f = HoloFunction::from_terms(
            vec![
                crate::function::PolyExpTerm::new(
                    Complex64::new(1.0, 0.0),
                    vec![0],
                    vec![Complex64::new(0.0, 0.0)],
                )
                .unwrap(),
                crate::function::PolyExpTerm::new(
                    Complex64::new(1.0, 0.0),
                    vec![1],
                    vec![Complex64::new(0.0, 0.0)],
                )
                .unwrap(),
            ],
            "1+z",
        )
        .unwrap();
        let (r1, r2) = scheme_check(&spec, &f, &settings(), 2).unwrap();
        assert_eq!(r1.verdict, Verdict::Pass, "{r1:?}");
        assert_eq!(r2.verdict, Verdict::Pass, "{r2:?}");
    }

    #[test]
    fn constant_class_member_on_disc_mobius() {
        let dom = DomainSpec::unit_ball(1).unwrap();
        let meas = MeasureSpec::new(dom.clone(), DensityKind::BallInvariant).unwrap();
        let space = SpaceSpec::new(
            dom,
            meas,
            WeightSpec::BallBergman { alpha: 0.0, p: 2.0 },
            2.0,
            &settings(),
        )
        .unwrap();
        let spec = SchemeSpec {
            space,
            map: Automorphism::ball_mobius(CPoint::scalar(Complex64::new(0.5, 0.0)))
                .unwrap(),
            phi_rate: 2.0,
            class_sample: vec![],
        };
        let f = HoloFunction::constant(Complex64::new(2.0, 1.0), 1);
        let (r1, r2) = scheme_check(&spec, &f, &settings(), 3).unwrap();
        assert_eq!(r1.verdict, Verdict::Pass, "{r1:?}");
        assert_eq!(r2.verdict, Verdict::Pass, "{r2:?}");
    }

    #[test]
    fn scheme_norm_reproduces_quasinorm() {
        let spec = fock_scheme(Complex64::new(1.0, 0.0), 2.0);
        let f = HoloFunction::coordinate(0, 1).unwrap();
        let a = scheme_norm(&spec, &f, &settings(), 4).unwrap();
        let b = quasinorm(&f, &spec.space, PlanChoice::Auto, &settings(), 4).unwrap();
        assert_relative_eq!(a.value, b.value, max_relative = 1e-12);
        // and the point value reproduces the (9) left side times e^{w(0)}
        let pv = scheme_point_value(&spec, &f).unwrap();
        let z0 = CPoint::scalar(Complex64::new(1.0, 0.0));
        let direct = (f.log_abs(&z0).unwrap() - spec.space.weight_at(&z0).unwrap()).exp();
        assert_relative_eq!(pv, direct, max_relative = 1e-12);
    }
}
