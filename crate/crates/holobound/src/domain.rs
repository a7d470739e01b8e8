//! The three concrete geometries: ℂⁿ, the unit ball, and poly-discs /
//! poly-cylinders with per-coordinate radii in (0, +∞].

use crate::error::{Error, Result};
use crate::point::CPoint;

/// A domain D ⊂ ℂⁿ.
///
/// A polydisc whose radii are all +∞ is canonicalized to `FullSpace` at
/// construction, so the two compare equal.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainSpec {
    /// All of ℂⁿ.
    FullSpace { n: usize },
    /// The open unit ball {z : |z| < 1}.
    UnitBall { n: usize },
    /// Π_j r_j·D, where r_j ∈ (0, +∞] and (+∞)·D = ℂ.
    Polydisc { n: usize, radii: Vec<f64> },
}

impl DomainSpec {
    pub fn full_space(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(DomainSpec::FullSpace { n })
    }

    pub fn unit_ball(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(DomainSpec::UnitBall { n })
    }

    pub fn polydisc(radii: Vec<f64>) -> Result<Self> {
        check_dim(radii.len())?;
        if radii.iter().any(|&r| r.is_nan() || r <= 0.0) {
            return Err(Error::InvalidParameter(
                "polydisc radii must be positive (finite or +inf)".into(),
            ));
        }
        let n = radii.len();
        if radii.iter().all(|r| r.is_infinite()) {
            Ok(DomainSpec::FullSpace { n })
        } else {
            Ok(DomainSpec::Polydisc { n, radii })
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            DomainSpec::FullSpace { n } | DomainSpec::UnitBall { n } => *n,
            DomainSpec::Polydisc { n, .. } => *n,
        }
    }

    pub fn is_bounded(&self) -> bool {
        match self {
            DomainSpec::FullSpace { .. } => false,
            DomainSpec::UnitBall { .. } => true,
            DomainSpec::Polydisc { radii, .. } => radii.iter().all(|r| r.is_finite()),
        }
    }

    /// Distance from an interior point to the boundary (+∞ for ℂⁿ).
    ///
    /// For a product domain this is the minimum over the finite factors of
    /// r_j − |z_j|; negative when the point lies outside.
    pub fn boundary_distance(&self, z: &CPoint) -> Result<f64> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.dim(),
            });
        }
        Ok(match self {
            DomainSpec::FullSpace { .. } => f64::INFINITY,
            DomainSpec::UnitBall { .. } => 1.0 - z.norm(),
            DomainSpec::Polydisc { radii, .. } => z
                .coords()
                .iter()
                .zip(radii)
                .map(|(c, &r)| if r.is_finite() { r - c.norm() } else { f64::INFINITY })
                .fold(f64::INFINITY, f64::min),
        })
    }

    /// Membership with a safety margin: true iff z lies in the open domain
    /// with distance to the boundary ≥ margin.
    pub fn contains(&self, z: &CPoint, margin: f64) -> Result<bool> {
        if margin < 0.0 {
            return Err(Error::InvalidParameter("margin must be >= 0".into()));
        }
        let d = self.boundary_distance(z)?;
        // Open domain: boundary points (d == 0) are excluded even at margin 0.
        Ok(d > 0.0 && d >= margin)
    }
}

impl std::fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DomainSpec::FullSpace { n } => write!(f, "C^{n}"),
            DomainSpec::UnitBall { n } => write!(f, "B^{n}"),
            DomainSpec::Polydisc { radii, .. } => {
                write!(f, "D(")?;
                for (j, r) in radii.iter().enumerate() {
                    if j > 0 {
                        write!(f, ",")?;
                    }
                    if r.is_finite() {
                        write!(f, "{r}")?;
                    } else {
                        write!(f, "inf")?;
                    }
                }
                write!(f, ")")
            }
        }
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn ball_membership() {
        let b2 = DomainSpec::unit_ball(2).unwrap();
        assert!(b2.contains(&CPoint::zero(2), 0.0).unwrap());
        let b1 = DomainSpec::unit_ball(1).unwrap();
        // boundary excluded (open domain)
        assert!(!b1.contains(&CPoint::scalar(c(1.0, 0.0)), 0.0).unwrap());
    }

    #[test]
    fn polydisc_with_infinite_factor() {
        let d = DomainSpec::polydisc(vec![1.0, f64::INFINITY]).unwrap();
        let z = CPoint::new(vec![c(0.5, 0.0), c(1e3, 0.0)]).unwrap();
        assert!(d.contains(&z, 0.0).unwrap());
        let w = CPoint::new(vec![c(1.5, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(!d.contains(&w, 0.0).unwrap());
    }

    #[test]
    fn all_infinite_polydisc_is_full_space() {
        let d = DomainSpec::polydisc(vec![f64::INFINITY, f64::INFINITY]).unwrap();
        assert_eq!(d, DomainSpec::full_space(2).unwrap());
    }

    #[test]
    fn dimension_mismatch_detected() {
        let b = DomainSpec::unit_ball(2).unwrap();
        assert!(b.contains(&CPoint::zero(3), 0.0).is_err());
    }

    #[test]
    fn margin_respected() {
        let b = DomainSpec::unit_ball(1).unwrap();
        let z = CPoint::scalar(c(0.95, 0.0));
        assert!(b.contains(&z, 0.01).unwrap());
        assert!(!b.contains(&z, 0.1).unwrap());
    }
}
