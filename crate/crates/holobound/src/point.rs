//! Points of ℂⁿ and the Hermitian inner product.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A point z = (z_1, …, z_n) ∈ ℂⁿ, n ≥ 1, all coordinates finite.
#[derive(Debug, Clone, PartialEq)]
pub struct CPoint {
    coords: Vec<Complex64>,
}

impl CPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinitePoint);
        }
        Ok(Self { coords })
    }

    /// The origin of ℂⁿ.
    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn from_re_im(re: &[f64], im: &[f64]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::DimensionMismatch {
                expected: re.len(),
                got: im.len(),
            });
        }
        Self::new(
            re.iter()
                .zip(im)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect(),
        )
    }

    /// One-dimensional point.
    pub fn scalar(z: Complex64) -> Self {
        Self { coords: vec![z] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> Complex64 {
        self.coords[j]
    }

    /// Hermitian inner product ⟨z,w⟩ = Σ_j z_j·conj(w_j).
    pub fn inner(&self, other: &CPoint) -> Result<Complex64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b.conj())
            .sum())
    }

    /// Squared Euclidean norm |z|² = Σ_j |z_j|².
    pub fn norm2(&self) -> f64 {
        self.coords.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm2().sqrt()
    }

    pub fn add(&self, other: &CPoint) -> Result<CPoint> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        CPoint::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, s: Complex64) -> CPoint {
        CPoint {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// Apply per-coordinate phases e^{iθ_j} (a diagonal unitary).
    pub fn rotate_per_coordinate(&self, phases: &[f64]) -> Result<CPoint> {
        if phases.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: phases.len(),
            });
        }
        CPoint::new(
            self.coords
                .iter()
                .zip(phases)
                .map(|(c, &t)| c * Complex64::from_polar(1.0, t))
                .collect(),
        )
    }
}

impl std::fmt::Display for CPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (j, c) in self.coords.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.6}{:+.6}i", c.re, c.im)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn inner_orthonormal() {
        let z = CPoint::from_re_im(&[1.0, 0.0], &[0.0, 0.0]).unwrap();
        let w = CPoint::from_re_im(&[1.0, 0.0], &[0.0, 0.0]).unwrap();
        assert_eq!(z.inner(&w).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn inner_conjugates_second_argument() {
        let z = CPoint::scalar(c(0.0, 1.0));
        let w = CPoint::scalar(c(1.0, 0.0));
        assert_eq!(z.inner(&w).unwrap(), c(0.0, 1.0));
    }

    #[test]
    fn inner_hand_expansion() {
        // inner((1+i, 2), (0, i)) = (1+i)*0 + 2*conj(i) = -2i
        let z = CPoint::new(vec![c(1.0, 1.0), c(2.0, 0.0)]).unwrap();
        let w = CPoint::new(vec![c(0.0, 0.0), c(0.0, 1.0)]).unwrap();
        let v = z.inner(&w).unwrap();
        assert_relative_eq!(v.re, 0.0);
        assert_relative_eq!(v.im, -2.0);
    }

    #[test]
    fn inner_dimension_mismatch() {
        let z = CPoint::zero(2);
        let w = CPoint::zero(3);
        assert!(z.inner(&w).is_err());
    }

    #[test]
    fn norm2_values() {
        assert_eq!(CPoint::zero(2).norm2(), 0.0);
        let z = CPoint::new(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert_relative_eq!(z.norm2(), 25.0);
        let w = CPoint::scalar(c(1.0, 1.0));
        assert_relative_eq!(w.norm2(), 2.0);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(CPoint::new(vec![c(f64::NAN, 0.0)]).is_err());
        assert!(CPoint::new(vec![c(0.0, f64::INFINITY)]).is_err());
        assert!(CPoint::new(vec![]).is_err());
    }
}
