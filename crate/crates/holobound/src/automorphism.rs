//! Measure-preserving point automorphisms a₀^{z₀} with a(0) = z₀:
//! translations of ℂⁿ, Möbius maps of the ball and of poly-discs, and
//! per-coordinate homotheties.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::domain::DomainSpec;
use crate::error::{Error, Result};
use crate::point::CPoint;

/// One member of an automorphism family.
///
/// `BallMobius` and `PolydiscMobius` with z₀ = 0 act as the identity, so the
/// family is anchored at a(0) = z₀ for every parameter value. Both Möbius
/// variants are involutions: a(a(z)) = z.
#[derive(Debug, Clone, PartialEq)]
pub enum Automorphism {
    /// z ↦ z + z₀ on ℂⁿ.
    Translation { z0: CPoint },
    /// The Möbius automorphism φ_{z₀} of the unit ball, |z₀| < 1.
    BallMobius { z0: CPoint },
    /// Per-coordinate Möbius maps of Π_j r_j·D; translation on factors with
    /// r_j = +∞.
    PolydiscMobius { z0: CPoint, radii: Vec<f64> },
    /// z_j ↦ factor_j · z_j, factor_j > 0. Fixes the origin; carries
    /// Π r_j·D onto Π (factor_j·r_j)·D.
    Homothety { factors: Vec<f64> },
}

impl Automorphism {
    pub fn translation(z0: CPoint) -> Self {
        Automorphism::Translation { z0 }
    }

    pub fn ball_mobius(z0: CPoint) -> Result<Self> {
        if z0.norm() >= 1.0 {
            return Err(Error::InvalidParameter(
                "ball Mobius base point must satisfy |z0| < 1".into(),
            ));
        }
        Ok(Automorphism::BallMobius { z0 })
    }

    pub fn polydisc_mobius(z0: CPoint, radii: Vec<f64>) -> Result<Self> {
        if radii.len() != z0.dim() {
            return Err(Error::DimensionMismatch {
                expected: z0.dim(),
                got: radii.len(),
            });
        }
        for (c, &r) in z0.coords().iter().zip(&radii) {
            if r.is_nan() || r <= 0.0 {
                return Err(Error::InvalidParameter("radii must be positive".into()));
            }
            if r.is_finite() && c.norm() >= r {
                return Err(Error::InvalidParameter(format!(
                    "polydisc Mobius base point must satisfy |z0_j| < r_j (got |{c}| >= {r})"
                )));
            }
        }
        Ok(Automorphism::PolydiscMobius { z0, radii })
    }

    pub fn homothety(factors: Vec<f64>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|&f| !f.is_finite() || f <= 0.0) {
            return Err(Error::InvalidParameter(
                "homothety factors must be finite and positive".into(),
            ));
        }
        Ok(Automorphism::Homothety { factors })
    }

    /// The homothety carrying Π r_j·D onto the unit polydisc (identity on
    /// infinite factors).
    pub fn homothety_to_unit(radii: &[f64]) -> Result<Self> {
        Self::homothety(
            radii
                .iter()
                .map(|&r| if r.is_finite() { 1.0 / r } else { 1.0 })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        match self {
            Automorphism::Translation { z0 }
            | Automorphism::BallMobius { z0 }
            | Automorphism::PolydiscMobius { z0, .. } => z0.dim(),
            Automorphism::Homothety { factors } => factors.len(),
        }
    }

    /// The image of the origin (z₀ for the point-moving families).
    pub fn base_point(&self) -> CPoint {
        match self {
            Automorphism::Translation { z0 }
            | Automorphism::BallMobius { z0 }
            | Automorphism::PolydiscMobius { z0, .. } => z0.clone(),
            Automorphism::Homothety { factors } => CPoint::zero(factors.len()),
        }
    }

    /// The domain this automorphism acts on (None for a homothety, which maps
    /// between polydiscs).
    pub fn domain(&self) -> Option<DomainSpec> {
        match self {
            Automorphism::Translation { z0 } => Some(DomainSpec::FullSpace { n: z0.dim() }),
            Automorphism::BallMobius { z0 } => Some(DomainSpec::UnitBall { n: z0.dim() }),
            Automorphism::PolydiscMobius { radii, .. } => {
                DomainSpec::polydisc(radii.clone()).ok()
            }
            Automorphism::Homothety { .. } => None,
        }
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            Automorphism::Translation { .. } => "translation",
            Automorphism::BallMobius { .. } => "ball",
            Automorphism::PolydiscMobius { .. } => "polydisc",
            Automorphism::Homothety { .. } => "homothety",
        }
    }

    /// Apply the map to a point of its domain.
    pub fn apply(&self, z: &CPoint) -> Result<CPoint> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.dim(),
            });
        }
        match self {
            Automorphism::Translation { z0 } => z.add(z0),
            Automorphism::BallMobius { z0 } => {
                if z.norm2() >= 1.0 {
                    return Err(Error::OutOfDomain(format!("{z} not in the unit ball")));
                }
                Ok(ball_mobius_apply(z0, z))
            }
            Automorphism::PolydiscMobius { z0, radii } => {
                let mut out = Vec::with_capacity(z.dim());
                for ((&c, &r), &zj) in z0.coords().iter().zip(radii).zip(z.coords()) {
                    if r.is_finite() {
                        if zj.norm() >= r {
                            return Err(Error::OutOfDomain(format!(
                                "coordinate {zj} not in the disc of radius {r}"
                            )));
                        }
                        out.push(disc_mobius_scaled(c, r, zj));
                    } else {
                        out.push(zj + c);
                    }
                }
                CPoint::new(out)
            }
            Automorphism::Homothety { factors } => CPoint::new(
                z.coords()
                    .iter()
                    .zip(factors)
                    .map(|(&zj, &f)| zj * f)
                    .collect(),
            ),
        }
    }

    /// Determinant of the 2n×2n real derivative matrix, by central finite
    /// differences with step h·(1+|z|).
    pub fn real_jacobian(&self, z: &CPoint, h: f64) -> Result<f64> {
        let n = self.dim();
        let step = h * (1.0 + z.norm());
        let mut m = DMatrix::<f64>::zeros(2 * n, 2 * n);
        for l in 0..2 * n {
            let mut zp = z.coords().to_vec();
            let mut zm = z.coords().to_vec();
            let (j, im_part) = (l / 2, l % 2 == 1);
            if im_part {
                zp[j] += Complex64::new(0.0, step);
                zm[j] -= Complex64::new(0.0, step);
            } else {
                zp[j] += Complex64::new(step, 0.0);
                zm[j] -= Complex64::new(step, 0.0);
            }
            let fp = self
                .apply(&CPoint::new(zp)?)
                .map_err(|_| Error::StencilOutOfDomain { h: step })?;
            let fm = self
                .apply(&CPoint::new(zm)?)
                .map_err(|_| Error::StencilOutOfDomain { h: step })?;
            for k in 0..n {
                let d = (fp.coord(k) - fm.coord(k)) / (2.0 * step);
                m[(2 * k, l)] = d.re;
                m[(2 * k + 1, l)] = d.im;
            }
        }
        Ok(m.determinant())
    }
}

/// Rudin's explicit ball automorphism:
/// φ_a(z) = (a − P_a z − s_a·Q_a z) / (1 − ⟨z,a⟩), with P_a the projection
/// onto span(a), Q_a = I − P_a, s_a = √(1−|a|²). φ_a(0) = a, φ_a(a) = 0,
/// and φ_a is an involution. For a = 0 the identity is used, keeping the
/// family anchored at a(0) = z₀.
fn ball_mobius_apply(a: &CPoint, z: &CPoint) -> CPoint {
    let a2 = a.norm2();
    if a2 == 0.0 {
        return z.clone();
    }
    let za = z.inner(a).expect("dimensions checked");
    let s = (1.0 - a2).sqrt();
    let denom = Complex64::new(1.0, 0.0) - za;
    let proj = za / a2;
    let coords = a
        .coords()
        .iter()
        .zip(z.coords())
        .map(|(&aj, &zj)| {
            let p = proj * aj;
            let q = zj - p;
            (aj - p - s * q) / denom
        })
        .collect();
    CPoint::new(coords).expect("finite by construction")
}

/// One-variable Möbius factor on the disc of radius r, carrying 0 to c:
/// z ↦ r·m_{c/r}(z/r) with m_a(ζ) = (a − ζ)/(1 − ζ·conj(a)); identity for
/// c = 0.
fn disc_mobius_scaled(c: Complex64, r: f64, z: Complex64) -> Complex64 {
    if c.norm_sqr() == 0.0 {
        return z;
    }
    let a = c / r;
    let zeta = z / r;
    let one = Complex64::new(1.0, 0.0);
    r * (a - zeta) / (one - zeta * a.conj())
}
