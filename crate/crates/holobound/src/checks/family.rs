//! Candidate and extremal function families: random poly-exponential sums
//! for property batteries, Gaussian-pairing extremals for the full space, and
//! kernel-power families for the ball and polydisc.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::function::{HoloFunction, PolyExpTerm};
use crate::point::CPoint;
use crate::rng::derive_seed;
use crate::weight::WeightSpec;

/// A random finite poly-exp sum with coefficients of comparable scale,
/// monomial degrees ≤ `max_degree` per coordinate, and exponential rates of
/// magnitude ≲ `exp_scale`.
pub fn random_poly_exp(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_terms: usize,
    max_degree: u32,
    exp_scale: f64,
) -> HoloFunction {
    let nterms = rng.gen_range(1..=max_terms.max(1));
    let mut terms = Vec::with_capacity(nterms);
    for _ in 0..nterms {
        let coeff = unit_complex(rng);
        let powers = (0..n).map(|_| rng.gen_range(0..=max_degree)).collect();
        let expvec = (0..n)
            .map(|_| unit_complex(rng) * Complex64::new(exp_scale, 0.0))
            .collect();
        terms.push(PolyExpTerm {
            coeff,
            powers,
            expvec,
        });
    }
    HoloFunction::from_terms(terms, format!("rand[{nterms}]")).expect("consistent dims")
}

fn unit_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    // isotropic complex Gaussian, typical magnitude 1
    let re: f64 = rng.gen::<f64>() * 2.0 - 1.0;
    let im: f64 = rng.gen::<f64>() * 2.0 - 1.0;
    let c = Complex64::new(re, im);
    if c.norm_sqr() < 1e-6 {
        Complex64::new(0.7, -0.7)
    } else {
        c
    }
}

/// A seeded batch of random candidates.
pub fn random_family(
    seed: u64,
    tag: u64,
    count: usize,
    n: usize,
    max_terms: usize,
    max_degree: u32,
    exp_scale: f64,
) -> Vec<HoloFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, tag));
    (0..count)
        .map(|_| random_poly_exp(&mut rng, n, max_terms, max_degree, exp_scale))
        .collect()
}

/// The extremal family attaining the pointwise bound at z₀ for the given
/// weight:
///   - Gaussian weights: exp(Σ α_j ζ_j conj(z₀_j));
///   - ball: (1 − ⟨ζ,z₀⟩)^{−2(α+n+1)/p·t};
///   - polydisc: the per-coordinate product (Gaussian form on infinite
///     factors).
/// The `scale` parameter t ∈ (0,1] sweeps the family toward the extremal at
/// t = 1.
pub fn extremal_candidate(weight: &WeightSpec, z0: &CPoint, scale: f64) -> Result<HoloFunction> {
    match weight {
        WeightSpec::Fock { alpha } => {
            let rates: Vec<f64> = vec![alpha * scale; z0.dim()];
            HoloFunction::exp_pairing(&rates, z0, format!("extremal_fock(t={scale})"))
        }
        WeightSpec::FockAniso { alphas } => {
            let rates: Vec<f64> = alphas.iter().map(|a| a * scale).collect();
            HoloFunction::exp_pairing(&rates, z0, format!("extremal_aniso(t={scale})"))
        }
        WeightSpec::BallBergman { alpha, p } => {
            let n = z0.dim() as f64;
            let c = (alpha + n + 1.0) / p;
            let linear = z0.coords().iter().map(|w| -w.conj()).collect();
            HoloFunction::affine_power(
                Complex64::new(1.0, 0.0),
                linear,
                -2.0 * c * scale,
                Complex64::new(1.0, 0.0),
                format!("kernel_ball(t={scale})"),
            )
        }
        WeightSpec::PolydiscBergman { alphas, p, radii } => {
            if z0.dim() != alphas.len() {
                return Err(Error::DimensionMismatch {
                    expected: alphas.len(),
                    got: z0.dim(),
                });
            }
            let n = z0.dim();
            let mut factors = Vec::with_capacity(n);
            for (j, (&a, &r)) in alphas.iter().zip(radii).enumerate() {
                let z0j = z0.coord(j);
                if r.is_finite() {
                    let c = (a + 2.0) / p;
                    let mut linear = vec![Complex64::new(0.0, 0.0); n];
                    linear[j] = -z0j.conj() / (r * r);
                    factors.push(HoloFunction::affine_power(
                        Complex64::new(1.0, 0.0),
                        linear,
                        -2.0 * c * scale,
                        Complex64::new(1.0, 0.0),
                        format!("kernel_disc{j}"),
                    )?);
                } else {
                    let mut rates = vec![0.0; n];
                    rates[j] = a * scale;
                    factors.push(HoloFunction::exp_pairing(
                        &rates,
                        &axis_point(z0, j)?,
                        format!("extremal_gauss{j}"),
                    )?);
                }
            }
            HoloFunction::product(factors, format!("kernel_polydisc(t={scale})"))
        }
    }
}

fn axis_point(z0: &CPoint, j: usize) -> Result<CPoint> {
    let mut coords = vec![Complex64::new(0.0, 0.0); z0.dim()];
    coords[j] = z0.coord(j);
    CPoint::new(coords)
}

/// Kernel-power family sweep used for sharpness evidence.
pub fn extremal_family(
    weight: &WeightSpec,
    z0: &CPoint,
    scales: &[f64],
) -> Result<Vec<HoloFunction>> {
    scales
        .iter()
        .map(|&t| extremal_candidate(weight, z0, t))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_family_is_reproducible() {
        let a = random_family(1, 2, 5, 2, 4, 3, 0.5);
        let b = random_family(1, 2, 5, 2, 4, 3, 0.5);
        assert_eq!(a.len(), 5);
        for (x, y) in a.iter().zip(&b) {
            let z = CPoint::from_re_im(&[0.3, -0.1], &[0.2, 0.4]).unwrap();
            assert_eq!(x.eval(&z).unwrap(), y.eval(&z).unwrap());
        }
    }

    #[test]
    fn fock_extremal_value() {
        // f(ζ) = exp(αζ·conj(z0)): at ζ = z0, |f| = e^{α|z0|²}
        let w = WeightSpec::Fock { alpha: 2.0 };
        let z0 = CPoint::scalar(Complex64::new(1.0, 1.0));
        let f = extremal_candidate(&w, &z0, 1.0).unwrap();
        let la = f.log_abs(&z0).unwrap();
        approx::assert_relative_eq!(la, 2.0 * 2.0, max_relative = 1e-12);
    }

    #[test]
    fn ball_kernel_is_zero_free() {
        let w = WeightSpec::BallBergman { alpha: 0.5, p: 2.0 };
        let z0 = CPoint::from_re_im(&[0.4, 0.1], &[0.0, -0.3]).unwrap();
        let f = extremal_candidate(&w, &z0, 1.0).unwrap();
        assert!(f.is_zero_free());
        assert!(f.eval(&CPoint::zero(2)).unwrap().norm() > 0.0);
    }
}
