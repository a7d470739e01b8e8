//! Property batteries for the structural invariants: inner-product algebra,
//! exact translation re-expansion, automorphism identities, change of
//! variables, sampler laws, and quasinorm homogeneity.

use num_complex::Complex64;
use proptest::prelude::*;

use holobound::checks;
use holobound::integrate::sampler::{FactorLaw, Sampler, SpaceLaw};
use holobound::{
    Automorphism, CPoint, DensityKind, DomainSpec, EngineSettings, HoloFunction, MeasureSpec,
    PolyExpTerm, SpaceSpec, WeightSpec,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn complex_strategy(scale: f64) -> impl Strategy<Value = Complex64> {
    (-scale..scale, -scale..scale).prop_map(|(re, im)| Complex64::new(re, im))
}

fn point_strategy(n: usize, scale: f64) -> impl Strategy<Value = CPoint> {
    proptest::collection::vec(complex_strategy(scale), n)
        .prop_map(|v| CPoint::new(v).expect("finite"))
}

fn poly_exp_strategy(n: usize) -> impl Strategy<Value = HoloFunction> {
    proptest::collection::vec(
        (
            complex_strategy(2.0),
            proptest::collection::vec(0u32..4, n),
            proptest::collection::vec(complex_strategy(0.6), n),
        ),
        1..4,
    )
    .prop_map(|terms| {
        let terms = terms
            .into_iter()
            .map(|(coeff, powers, expvec)| PolyExpTerm::new(coeff, powers, expvec).unwrap())
            .collect();
        HoloFunction::from_terms(terms, "prop").unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inner_is_conjugate_symmetric(z in point_strategy(3, 5.0), w in point_strategy(3, 5.0)) {
        let zw = z.inner(&w).unwrap();
        let wz = w.inner(&z).unwrap();
        prop_assert!((zw - wz.conj()).norm() <= 1e-12 * (1.0 + zw.norm()));
    }

    #[test]
    fn norm2_matches_coordinate_sum(z in point_strategy(4, 10.0)) {
        let direct: f64 = z.coords().iter().map(|c| c.re * c.re + c.im * c.im).sum();
        prop_assert!((z.norm2() - direct).abs() <= 1e-14 * (1.0 + direct));
    }

    #[test]
    fn translation_reexpansion_matches_composition(
        f in poly_exp_strategy(2),
        z in point_strategy(2, 2.0),
        s in point_strategy(2, 2.0),
    ) {
        let g = f.translate(&s).unwrap();
        let lhs = g.eval(&z).unwrap();
        let rhs = f.eval(&z.add(&s).unwrap()).unwrap();
        let scale = 1.0 + lhs.norm().max(rhs.norm());
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale, "lhs {lhs} rhs {rhs}");
    }

    #[test]
    fn eval_is_linear_in_coefficients(
        f in poly_exp_strategy(1),
        a in complex_strategy(3.0),
        z in point_strategy(1, 2.0),
    ) {
        let scaled = f.scaled(a);
        let lhs = scaled.eval(&z).unwrap();
        let rhs = a * f.eval(&z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
    }

    #[test]
    fn mobius_anchors_origin_and_involutes(
        z0 in point_strategy(2, 0.55),
        z in point_strategy(2, 0.4),
    ) {
        prop_assume!(z0.norm() < 0.95);
        prop_assume!(z.norm() < 0.95);
        let a = Automorphism::ball_mobius(z0.clone()).unwrap();
        let at0 = a.apply(&CPoint::zero(2)).unwrap();
        let d0: f64 = at0
            .coords()
            .iter()
            .zip(z0.coords())
            .map(|(x, y)| (x - y).norm())
            .sum();
        prop_assert!(d0 <= 1e-14 * (1.0 + z0.norm()));
        let round = a.apply(&a.apply(&z).unwrap()).unwrap();
        let drt: f64 = round
            .coords()
            .iter()
            .zip(z.coords())
            .map(|(x, y)| (x - y).norm())
            .sum();
        prop_assert!(drt <= 1e-10, "involution defect {drt}");
    }

    #[test]
    fn polydisc_mobius_involutes(
        re0 in -0.8f64..0.8, im0 in -0.5f64..0.5,
        re in -0.7f64..0.7, im in -0.6f64..0.6,
    ) {
        prop_assume!((re0 * re0 + im0 * im0).sqrt() < 0.9);
        prop_assume!((re * re + im * im).sqrt() < 0.9);
        let a = Automorphism::polydisc_mobius(CPoint::scalar(c(re0, im0)), vec![1.0]).unwrap();
        let z = CPoint::scalar(c(re, im));
        let round = a.apply(&a.apply(&z).unwrap()).unwrap();
        prop_assert!((round.coord(0) - z.coord(0)).norm() <= 1e-10);
    }

    #[test]
    fn weights_are_radial_per_coordinate(
        z in point_strategy(2, 0.55),
        phases in proptest::collection::vec(0.0f64..std::f64::consts::TAU, 2),
    ) {
        prop_assume!(z.norm() < 0.9);
        let rotated = z.rotate_per_coordinate(&phases).unwrap();
        for w in [
            WeightSpec::Fock { alpha: 1.3 },
            WeightSpec::FockAniso { alphas: vec![0.7, 2.1] },
            WeightSpec::BallBergman { alpha: 0.5, p: 2.0 },
            WeightSpec::PolydiscBergman {
                alphas: vec![0.5, 1.0],
                p: 2.0,
                radii: vec![1.0, 1.0],
            },
        ] {
            let a = w.value(&z).unwrap();
            let b = w.value(&rotated).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()), "{w:?}");
        }
    }

    #[test]
    fn quasinorm_is_homogeneous(
        f in poly_exp_strategy(1),
        sc_re in -2.0f64..2.0,
        sc_im in -2.0f64..2.0,
    ) {
        let a = c(sc_re, sc_im);
        prop_assume!(a.norm() > 1e-3);
        let settings = EngineSettings {
            mc_samples: 20_000,
            ..EngineSettings::default()
        };
        let dom = DomainSpec::full_space(1).unwrap();
        let meas = MeasureSpec::new(dom.clone(), DensityKind::Lebesgue).unwrap();
        let space =
            SpaceSpec::new(dom, meas, WeightSpec::Fock { alpha: 1.0 }, 2.0, &settings).unwrap();
        let q1 = checks::quasinorm(&f, &space, Default::default(), &settings, 42).unwrap();
        let q2 =
            checks::quasinorm(&f.scaled(a), &space, Default::default(), &settings, 42).unwrap();
        prop_assert!(
            (q2.value - a.norm() * q1.value).abs() <= 1e-9 * (1.0 + q2.value),
            "{} vs {}",
            q2.value,
            a.norm() * q1.value
        );
    }
}

#[test]
fn change_of_variables_matches_density_ratio() {
    // density(m, z) = density(m, a(z)) · |real Jacobian of a at z|
    let cases: Vec<(MeasureSpec, Automorphism, CPoint)> = vec![
        (
            MeasureSpec::new(DomainSpec::unit_ball(1).unwrap(), DensityKind::BallInvariant)
                .unwrap(),
            Automorphism::ball_mobius(CPoint::scalar(c(0.5, -0.2))).unwrap(),
            CPoint::scalar(c(0.3, 0.25)),
        ),
        (
            MeasureSpec::new(DomainSpec::unit_ball(2).unwrap(), DensityKind::BallInvariant)
                .unwrap(),
            Automorphism::ball_mobius(CPoint::from_re_im(&[0.3, -0.1], &[0.1, 0.2]).unwrap())
                .unwrap(),
            CPoint::from_re_im(&[0.2, 0.3], &[-0.1, 0.15]).unwrap(),
        ),
        (
            MeasureSpec::new(
                DomainSpec::polydisc(vec![1.0, 2.0]).unwrap(),
                DensityKind::PolydiscInvariant,
            )
            .unwrap(),
            Automorphism::polydisc_mobius(
                CPoint::from_re_im(&[0.4, 0.9], &[-0.2, 0.3]).unwrap(),
                vec![1.0, 2.0],
            )
            .unwrap(),
            CPoint::from_re_im(&[0.25, -0.6], &[0.3, 0.8]).unwrap(),
        ),
        (
            MeasureSpec::new(DomainSpec::full_space(2).unwrap(), DensityKind::Lebesgue).unwrap(),
            Automorphism::translation(CPoint::from_re_im(&[1.0, -0.5], &[0.2, 0.7]).unwrap()),
            CPoint::from_re_im(&[0.4, 1.2], &[-0.9, 0.1]).unwrap(),
        ),
    ];
    for (m, a, z) in cases {
        let lhs = m.density(&z).unwrap();
        let rhs = m.density(&a.apply(&z).unwrap()).unwrap()
            * a.real_jacobian(&z, 1e-5).unwrap();
        assert!(
            (lhs - rhs).abs() <= 1e-6 * lhs.abs(),
            "pointwise pushforward identity: {lhs} vs {rhs} for {a:?}"
        );
    }
}

#[test]
fn rule_doubling_reduces_error_geometrically() {
    use holobound::weight::FactorKind;
    // smooth damped integrand: |1+z|² against e^{−|z|²}
    let log_g = |z: &CPoint| {
        let v = Complex64::new(1.0, 0.0) + z.coord(0);
        2.0 * v.norm().max(1e-300).ln()
    };
    let value_at = |nr: usize, na: usize| -> f64 {
        let settings = EngineSettings {
            det_radial_base: nr,
            det_angular_base: na,
            det_radial_max: nr * 2,
            det_angular_max: na * 2,
            max_det_nodes: 10_000_000,
            det_tol: 1e-30, // force both levels to run
            ..EngineSettings::default()
        };
        holobound::integrate::det_product_integral(
            &[FactorKind::Gauss { beta: 1.0 }],
            &log_g,
            &settings,
        )
        .unwrap()
        .value
    };
    let sizes = [(4usize, 8usize), (8, 16), (16, 32), (32, 64)];
    let values: Vec<f64> = sizes.iter().map(|&(r, a)| value_at(r, a)).collect();
    let reference = *values.last().unwrap();
    let mut prev_err = f64::INFINITY;
    for (i, v) in values.iter().enumerate().take(values.len() - 1) {
        let err = (v - reference).abs();
        if err <= 1e-12 * reference.abs() {
            break; // error floor reached
        }
        assert!(
            err <= prev_err / 4.0 || prev_err == f64::INFINITY,
            "doubling level {i} shrank error only {prev_err:.3e} -> {err:.3e}"
        );
        prev_err = err;
    }
}

#[test]
fn mc_estimates_are_unbiased_across_seeds() {
    // E|z|² = 1 under the Fock(α=1, p=2) law; pool 32 independent seeds.
    let dom = DomainSpec::full_space(1).unwrap();
    let meas = MeasureSpec::new(dom.clone(), DensityKind::Lebesgue).unwrap();
    let mut estimates = Vec::new();
    let mut variances = Vec::new();
    for seed in 0..32u64 {
        let settings = EngineSettings {
            seed: 1000 + seed,
            mc_samples: 20_000,
            ..EngineSettings::default()
        };
        let space = SpaceSpec::new(
            dom.clone(),
            meas.clone(),
            WeightSpec::Fock { alpha: 1.0 },
            2.0,
            &settings,
        )
        .unwrap();
        let r = holobound::integrate::weighted_mean(
            &space,
            2.0,
            &|z: &CPoint| z.norm2().max(1e-300).ln(),
            false,
            holobound::PlanChoice::ForceMonteCarlo,
            &settings,
            seed,
        )
        .unwrap();
        estimates.push(r.value);
        variances.push(r.error * r.error);
    }
    let mean: f64 = estimates.iter().sum::<f64>() / 32.0;
    let pooled_se = (variances.iter().sum::<f64>() / (32.0 * 32.0)).sqrt();
    assert!(
        (mean - 1.0).abs() <= 3.0 * pooled_se,
        "pooled mean {mean} vs 1 (pooled se {pooled_se:.2e})"
    );
}

#[test]
fn sampler_radial_law_chi_square() {
    // Gaussian law: |z|² ~ Exp(mean 1/β); decile bins, χ²(9) < 27.9 (99.9%)
    let beta = 1.5f64;
    let dom = DomainSpec::full_space(1).unwrap();
    let law = SpaceLaw::Product(vec![FactorLaw::Gaussian { beta }]);
    let sampler = Sampler::measure_weighted(dom, law, 2024).unwrap();
    let n = 20_000usize;
    let points = sampler.sample(n).unwrap();
    let mut counts = [0usize; 10];
    for z in &points {
        let u = 1.0 - (-beta * z.norm2()).exp(); // CDF value, uniform under H0
        let bin = ((u * 10.0) as usize).min(9);
        counts[bin] += 1;
    }
    let expected = n as f64 / 10.0;
    let chi2: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    assert!(chi2 < 27.88, "chi-square {chi2} over deciles {counts:?}");

    // disc Beta law: 1−(1−t)^{γ+1} uniform
    let gamma = 1.3f64;
    let dom = DomainSpec::unit_ball(1).unwrap();
    let law = SpaceLaw::Product(vec![FactorLaw::DiscBeta {
        radius: 1.0,
        gamma,
    }]);
    let sampler = Sampler::measure_weighted(dom, law, 2025).unwrap();
    let points = sampler.sample(n).unwrap();
    let mut counts = [0usize; 10];
    for z in &points {
        let t = z.norm2();
        let u = 1.0 - (1.0 - t).powf(gamma + 1.0);
        let bin = ((u * 10.0) as usize).min(9);
        counts[bin] += 1;
    }
    let chi2: f64 = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    assert!(chi2 < 27.88, "chi-square {chi2} over deciles {counts:?}");
}

#[test]
fn normalization_matches_brute_force_mc() {
    // ball n=2, effective exponent 0.5: engine N vs uniform-ball Monte Carlo
    let settings = EngineSettings {
        mc_samples: 400_000,
        ..EngineSettings::default()
    };
    let dom = DomainSpec::unit_ball(2).unwrap();
    let meas = MeasureSpec::new(dom.clone(), DensityKind::BallInvariant).unwrap();
    let space = SpaceSpec::new(
        dom,
        meas,
        WeightSpec::BallBergman { alpha: 0.5, p: 2.0 },
        2.0,
        &settings,
    )
    .unwrap();
    let engine_n = space.normalization().unwrap().value;

    let law = SpaceLaw::UniformBall { n: 2, radius: 1.0 - 1e-9 };
    let vol = std::f64::consts::PI.powi(2) / 2.0; // vol(B₄) = π²/2
    let mc = holobound::integrate::mc_mean_of_law(
        &law,
        &|z: &CPoint| (1.0 - z.norm2()).powf(0.5),
        &settings,
        77,
    );
    let brute = vol * mc.value;
    let se = vol * mc.error;
    assert!(
        (engine_n - brute).abs() <= 3.0 * se,
        "engine {engine_n} vs brute MC {brute} (se {se:.2e})"
    );
}
