//! Exact samplers for the normalized space laws e^{−qw}dμ/N and the uniform
//! reference laws, plus the domain-level `Sampler` used by the test batteries.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_distr::{Beta, Distribution, StandardNormal};

use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::point::CPoint;
use crate::rng::derive_seed;
use crate::weight::{FactorKind, Factorization};

/// Boundary margin below which sampled points are rejected; keeps every
/// sample strictly interior where the invariant densities blow up.
pub const SAMPLE_MARGIN: f64 = 1e-9;

/// One complex coordinate's law.
#[derive(Debug, Clone, PartialEq)]
pub enum FactorLaw {
    /// Density ∝ e^{−β|z|²} on ℂ (complex Gaussian, E|z|² = 1/β).
    Gaussian { beta: f64 },
    /// Density ∝ (1−|z/r|²)^γ on the disc of radius r: |z/r|² ~ Beta(1, γ+1).
    DiscBeta { radius: f64, gamma: f64 },
}

/// The normalized sampling law of a weighted space (or a uniform reference).
#[derive(Debug, Clone, PartialEq)]
pub enum SpaceLaw {
    Product(Vec<FactorLaw>),
    /// Density ∝ (1−|z|²)^e on the unit ball: |z|² ~ Beta(n, e+1), uniform
    /// direction.
    Ball { n: usize, exponent: f64 },
    /// Uniform on the real 2n-ball of the given radius.
    UniformBall { n: usize, radius: f64 },
    /// Uniform (Lebesgue) on a polydisc with finite radii.
    UniformPolydisc { radii: Vec<f64> },
}

impl SpaceLaw {
    pub fn from_factorization(fact: &Factorization) -> Result<SpaceLaw> {
        Ok(match fact {
            Factorization::Product(factors) => SpaceLaw::Product(
                factors
                    .iter()
                    .map(|f| match *f {
                        FactorKind::Gauss { beta } => FactorLaw::Gaussian { beta },
                        FactorKind::Disc { radius, gamma } => {
                            FactorLaw::DiscBeta { radius, gamma }
                        }
                    })
                    .collect(),
            ),
            Factorization::Ball { n, exponent } => SpaceLaw::Ball {
                n: *n,
                exponent: *exponent,
            },
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            SpaceLaw::Product(f) => f.len(),
            SpaceLaw::Ball { n, .. } | SpaceLaw::UniformBall { n, .. } => *n,
            SpaceLaw::UniformPolydisc { radii } => radii.len(),
        }
    }

    pub fn draw(&self, rng: &mut ChaCha8Rng) -> CPoint {
        match self {
            SpaceLaw::Product(factors) => {
                let coords = factors.iter().map(|f| f.draw(rng)).collect();
                CPoint::new(coords).expect("law samples are finite")
            }
            SpaceLaw::Ball { n, exponent } => {
                let beta = Beta::new(*n as f64, exponent + 1.0)
                    .expect("validated exponent > -1");
                let t: f64 = beta.sample(rng);
                let dir = unit_sphere_direction(*n, rng);
                scale_point(&dir, t.sqrt())
            }
            SpaceLaw::UniformBall { n, radius } => {
                let u: f64 = rng.gen();
                let r = radius * u.powf(1.0 / (2.0 * *n as f64));
                let dir = unit_sphere_direction(*n, rng);
                scale_point(&dir, r)
            }
            SpaceLaw::UniformPolydisc { radii } => {
                let coords = radii
                    .iter()
                    .map(|&r| {
                        let t: f64 = rng.gen();
                        let theta = rng.gen::<f64>() * std::f64::consts::TAU;
                        Complex64::from_polar(r * t.sqrt(), theta)
                    })
                    .collect();
                CPoint::new(coords).expect("finite")
            }
        }
    }
}

impl FactorLaw {
    fn draw(&self, rng: &mut ChaCha8Rng) -> Complex64 {
        match *self {
            FactorLaw::Gaussian { beta } => {
                let sigma = (0.5 / beta).sqrt();
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(sigma * re, sigma * im)
            }
            FactorLaw::DiscBeta { radius, gamma } => {
                // Beta(1, γ+1) by inverse CDF: t = 1 − V^{1/(γ+1)}.
                let v: f64 = 1.0 - rng.gen::<f64>();
                let t = 1.0 - v.powf(1.0 / (gamma + 1.0));
                let theta = rng.gen::<f64>() * std::f64::consts::TAU;
                Complex64::from_polar(radius * t.sqrt(), theta)
            }
        }
    }
}

fn unit_sphere_direction(n: usize, rng: &mut ChaCha8Rng) -> CPoint {
    loop {
        let coords: Vec<Complex64> = (0..n)
            .map(|_| {
                let re: f64 = StandardNormal.sample(rng);
                let im: f64 = StandardNormal.sample(rng);
                Complex64::new(re, im)
            })
            .collect();
        let p = CPoint::new(coords).expect("finite");
        let norm = p.norm();
        if norm > 1e-12 {
            return p.scale(Complex64::new(1.0 / norm, 0.0));
        }
    }
}

fn scale_point(p: &CPoint, s: f64) -> CPoint {
    p.scale(Complex64::new(s, 0.0))
}

/// Point-sampling strategy over a domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Strategy {
    /// Uniform draws from a cycling exhaustion of compacts: the k-th point is
    /// uniform on the domain intersected with the ball of radius
    /// base·2^{k mod 3}.
    CompactExhaustion { base_radius: f64 },
    /// Draws from a normalized measure-weighted law.
    MeasureWeighted(SpaceLaw),
}

/// Reproducible point source for a domain. Every sample is strictly interior
/// (margin [`SAMPLE_MARGIN`]); identical seeds give identical outputs.
/// Parallel callers derive independent samplers via [`Sampler::with_stream`].
#[derive(Debug, Clone, PartialEq)]
pub struct Sampler {
    pub domain: DomainSpec,
    pub strategy: Strategy,
    pub seed: u64,
}

impl Sampler {
    pub fn uniform(domain: DomainSpec, seed: u64) -> Self {
        Sampler {
            domain,
            strategy: Strategy::CompactExhaustion { base_radius: 1.0 },
            seed,
        }
    }

    pub fn measure_weighted(domain: DomainSpec, law: SpaceLaw, seed: u64) -> Result<Self> {
        if law.dim() != domain.dim() {
            return Err(Error::DimensionMismatch {
                expected: domain.dim(),
                got: law.dim(),
            });
        }
        Ok(Sampler {
            domain,
            strategy: Strategy::MeasureWeighted(law),
            seed,
        })
    }

    /// A sampler with a seed derived for the given stream index.
    pub fn with_stream(&self, stream: u64) -> Sampler {
        Sampler {
            domain: self.domain.clone(),
            strategy: self.strategy.clone(),
            seed: derive_seed(self.seed, stream),
        }
    }

    pub fn sample(&self, count: usize) -> Result<Vec<CPoint>> {
        if count == 0 {
            return Err(Error::InvalidParameter("count must be >= 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, 0x7a3b));
        let mut out = Vec::with_capacity(count);
        for k in 0..count {
            out.push(self.draw_one(&mut rng, k)?);
        }
        Ok(out)
    }

    fn draw_one(&self, rng: &mut ChaCha8Rng, k: usize) -> Result<CPoint> {
        match &self.strategy {
            Strategy::CompactExhaustion { base_radius } => {
                let level = (k % 3) as i32;
                let radius = base_radius * f64::powi(2.0, level);
                let law = match &self.domain {
                    DomainSpec::FullSpace { n } => SpaceLaw::UniformBall { n: *n, radius },
                    DomainSpec::UnitBall { n } => SpaceLaw::UniformBall {
                        n: *n,
                        radius: radius.min(1.0 - SAMPLE_MARGIN),
                    },
                    DomainSpec::Polydisc { radii, .. } => SpaceLaw::UniformPolydisc {
                        radii: radii
                            .iter()
                            .map(|&r| {
                                if r.is_finite() {
                                    radius.min(r - SAMPLE_MARGIN.min(r * 0.5))
                                } else {
                                    radius
                                }
                            })
                            .collect(),
                    },
                };
                Ok(law.draw(rng))
            }
            Strategy::MeasureWeighted(law) => {
                for _ in 0..1000 {
                    let z = law.draw(rng);
                    if self.domain.contains(&z, SAMPLE_MARGIN)? {
                        return Ok(z);
                    }
                }
                Err(Error::Degenerate(
                    "measure-weighted sampler kept hitting the boundary margin".into(),
                ))
            }
        }
    }
}
