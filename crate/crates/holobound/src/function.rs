//! Evaluatable holomorphic functions: finite poly-exponential sums
//! c·z^k·exp(⟨b,z⟩) closed under translation, principal-branch powers of
//! zero-free affine forms, products, and composition with automorphisms.

use num_complex::Complex64;

use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::point::CPoint;

/// One term c·z₁^{k₁}···z_n^{k_n}·exp(b₁z₁+…+b_nz_n).
#[derive(Debug, Clone, PartialEq)]
pub struct PolyExpTerm {
    pub coeff: Complex64,
    pub powers: Vec<u32>,
    pub expvec: Vec<Complex64>,
}

impl PolyExpTerm {
    pub fn new(coeff: Complex64, powers: Vec<u32>, expvec: Vec<Complex64>) -> Result<Self> {
        if powers.len() != expvec.len() || powers.is_empty() {
            return Err(Error::InvalidParameter(
                "powers and expvec must have equal positive length".into(),
            ));
        }
        Ok(Self {
            coeff,
            powers,
            expvec,
        })
    }

    fn dim(&self) -> usize {
        self.powers.len()
    }

    /// ln|term| and the phase, stable against overflow.
    fn log_polar(&self, z: &CPoint) -> (f64, f64) {
        let mut log_mag = self.coeff.norm().ln();
        let mut phase = self.coeff.arg();
        for (j, (&k, &b)) in self.powers.iter().zip(&self.expvec).enumerate() {
            let zj = z.coord(j);
            if k > 0 {
                log_mag += f64::from(k) * zj.norm().ln();
                phase += f64::from(k) * zj.arg();
            }
            let e = b * zj;
            log_mag += e.re;
            phase += e.im;
        }
        (log_mag, phase)
    }

    fn eval(&self, z: &CPoint) -> Complex64 {
        let mut v = self.coeff;
        let mut arg = Complex64::new(0.0, 0.0);
        for (j, (&k, &b)) in self.powers.iter().zip(&self.expvec).enumerate() {
            let zj = z.coord(j);
            if k > 0 {
                v *= zj.powu(k);
            }
            arg += b * zj;
        }
        v * arg.exp()
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    /// Finite sum of poly-exponential terms (empty sum = the zero function).
    PolyExp(Vec<PolyExpTerm>),
    /// scale·(c₀ + Σ_j c_j z_j)^s, principal branch for non-integer s.
    AffinePower {
        constant: Complex64,
        linear: Vec<Complex64>,
        exponent: f64,
        scale: Complex64,
    },
    Product(Vec<HoloFunction>),
    Composed {
        base: Box<HoloFunction>,
        map: Automorphism,
    },
}

/// An evaluatable holomorphic function with a readable label.
///
/// Immutable after construction; evaluation is pure and thread-safe.
#[derive(Debug, Clone, PartialEq)]
pub struct HoloFunction {
    repr: Repr,
    label: String,
    zero_free: bool,
}

impl HoloFunction {
    /// The constant function c on ℂⁿ-shaped inputs of dimension n.
    pub fn constant(c: Complex64, n: usize) -> Self {
        let term = PolyExpTerm {
            coeff: c,
            powers: vec![0; n],
            expvec: vec![Complex64::new(0.0, 0.0); n],
        };
        let terms = if c.norm_sqr() == 0.0 { vec![] } else { vec![term] };
        HoloFunction {
            repr: Repr::PolyExp(terms),
            label: format!("{c}"),
            zero_free: c.norm_sqr() > 0.0,
        }
    }

    /// The coordinate function z ↦ z_j.
    pub fn coordinate(j: usize, n: usize) -> Result<Self> {
        if j >= n {
            return Err(Error::InvalidParameter(format!(
                "coordinate index {j} out of range for n={n}"
            )));
        }
        let mut powers = vec![0; n];
        powers[j] = 1;
        Ok(HoloFunction {
            repr: Repr::PolyExp(vec![PolyExpTerm {
                coeff: Complex64::new(1.0, 0.0),
                powers,
                expvec: vec![Complex64::new(0.0, 0.0); n],
            }]),
            label: format!("z{}", j + 1),
            zero_free: false,
        })
    }

    /// A finite poly-exponential sum. Terms with zero coefficient are dropped.
    pub fn from_terms(terms: Vec<PolyExpTerm>, label: impl Into<String>) -> Result<Self> {
        let terms: Vec<PolyExpTerm> =
            terms.into_iter().filter(|t| t.coeff.norm_sqr() > 0.0).collect();
        if let Some(first) = terms.first() {
            let n = first.dim();
            if terms.iter().any(|t| t.dim() != n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: terms.iter().map(PolyExpTerm::dim).find(|&d| d != n).unwrap_or(n),
                });
            }
        }
        // A single pure exponential c·e^{⟨b,z⟩} never vanishes.
        let zero_free = terms.len() == 1 && terms[0].powers.iter().all(|&k| k == 0);
        Ok(HoloFunction {
            repr: Repr::PolyExp(terms),
            label: label.into(),
            zero_free,
        })
    }

    /// exp(Σ_j a_j·z_j·conj(c_j)): the entire extremal family for Gaussian
    /// weights, peaked (after weighting) at the point c.
    pub fn exp_pairing(rates: &[f64], c: &CPoint, label: impl Into<String>) -> Result<Self> {
        if rates.len() != c.dim() {
            return Err(Error::DimensionMismatch {
                expected: c.dim(),
                got: rates.len(),
            });
        }
        let expvec = rates
            .iter()
            .zip(c.coords())
            .map(|(&a, w)| a * w.conj())
            .collect();
        Self::from_terms(
            vec![PolyExpTerm {
                coeff: Complex64::new(1.0, 0.0),
                powers: vec![0; c.dim()],
                expvec,
            }],
            label,
        )
    }

    /// scale·(constant + Σ c_j z_j)^s with the principal branch.
    ///
    /// Callers must guarantee the affine form is zero-free on the intended
    /// domain; the closed forms used here keep its real part positive.
    pub(crate) fn affine_power(
        constant: Complex64,
        linear: Vec<Complex64>,
        exponent: f64,
        scale: Complex64,
        label: impl Into<String>,
    ) -> Result<Self> {
        if linear.is_empty() {
            return Err(Error::InvalidParameter("affine form needs n >= 1".into()));
        }
        if !exponent.is_finite() || !scale.re.is_finite() || !scale.im.is_finite() {
            return Err(Error::InvalidParameter("non-finite affine power".into()));
        }
        Ok(HoloFunction {
            repr: Repr::AffinePower {
                constant,
                linear,
                exponent,
                scale,
            },
            label: label.into(),
            zero_free: true,
        })
    }

    /// Product of finitely many functions of the same dimension.
    pub fn product(factors: Vec<HoloFunction>, label: impl Into<String>) -> Result<Self> {
        let n = factors
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty product".into()))?
            .dim();
        if factors.iter().any(|f| f.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: factors.iter().map(HoloFunction::dim).find(|&d| d != n).unwrap_or(n),
            });
        }
        let zero_free = factors.iter().all(|f| f.zero_free);
        Ok(HoloFunction {
            repr: Repr::Product(factors),
            label: label.into(),
            zero_free,
        })
    }

    /// base ∘ map, evaluated by applying the automorphism first.
    pub fn compose(base: HoloFunction, map: Automorphism) -> Result<Self> {
        if base.dim() != map.dim() {
            return Err(Error::DimensionMismatch {
                expected: base.dim(),
                got: map.dim(),
            });
        }
        let zero_free = base.zero_free;
        let label = format!("{}∘{}", base.label, map.variant_name());
        Ok(HoloFunction {
            repr: Repr::Composed {
                base: Box::new(base),
                map,
            },
            label,
            zero_free,
        })
    }

    pub fn dim(&self) -> usize {
        match &self.repr {
            Repr::PolyExp(terms) => terms.first().map_or(1, PolyExpTerm::dim),
            Repr::AffinePower { linear, .. } => linear.len(),
            Repr::Product(fs) => fs[0].dim(),
            Repr::Composed { map, .. } => map.dim(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Whether the representation certifies the absence of zeros on its domain.
    pub fn is_zero_free(&self) -> bool {
        self.zero_free
    }

    pub fn terms(&self) -> Option<&[PolyExpTerm]> {
        match &self.repr {
            Repr::PolyExp(terms) => Some(terms),
            _ => None,
        }
    }

    /// Multiply by a constant.
    pub fn scaled(&self, c: Complex64) -> HoloFunction {
        match &self.repr {
            Repr::PolyExp(terms) => {
                let terms = terms
                    .iter()
                    .map(|t| PolyExpTerm {
                        coeff: t.coeff * c,
                        ..t.clone()
                    })
                    .filter(|t| t.coeff.norm_sqr() > 0.0)
                    .collect();
                HoloFunction {
                    repr: Repr::PolyExp(terms),
                    label: format!("{c}·{}", self.label),
                    zero_free: self.zero_free && c.norm_sqr() > 0.0,
                }
            }
            Repr::AffinePower {
                constant,
                linear,
                exponent,
                scale,
            } => HoloFunction {
                repr: Repr::AffinePower {
                    constant: *constant,
                    linear: linear.clone(),
                    exponent: *exponent,
                    scale: scale * c,
                },
                label: format!("{c}·{}", self.label),
                zero_free: self.zero_free && c.norm_sqr() > 0.0,
            },
            _ => HoloFunction::product(
                vec![HoloFunction::constant(c, self.dim()), self.clone()],
                format!("{c}·{}", self.label),
            )
            .expect("dimensions match"),
        }
    }

    /// Value at z. Power forms with non-integer exponent signal a branch
    /// violation if the base lands on the cut (−∞, 0].
    pub fn eval(&self, z: &CPoint) -> Result<Complex64> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.dim(),
            });
        }
        match &self.repr {
            Repr::PolyExp(terms) => Ok(terms.iter().map(|t| t.eval(z)).sum()),
            Repr::AffinePower {
                constant,
                linear,
                exponent,
                scale,
            } => {
                let u = affine_value(*constant, linear, z);
                Ok(scale * complex_power(u, *exponent)?)
            }
            Repr::Product(fs) => {
                let mut v = Complex64::new(1.0, 0.0);
                for f in fs {
                    v *= f.eval(z)?;
                }
                Ok(v)
            }
            Repr::Composed { base, map } => base.eval(&map.apply(z)?),
        }
    }

    /// ln|f(z)|, computed without overflow (−∞ at zeros).
    pub fn log_abs(&self, z: &CPoint) -> Result<f64> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.dim(),
            });
        }
        match &self.repr {
            Repr::PolyExp(terms) => Ok(log_abs_sum(terms, z)),
            Repr::AffinePower {
                constant,
                linear,
                exponent,
                scale,
            } => {
                let u = affine_value(*constant, linear, z);
                complex_power(u, *exponent)?; // branch check
                Ok(scale.norm().ln() + exponent * u.norm().ln())
            }
            Repr::Product(fs) => {
                let mut s = 0.0;
                for f in fs {
                    s += f.log_abs(z)?;
                }
                Ok(s)
            }
            Repr::Composed { base, map } => base.log_abs(&map.apply(z)?),
        }
    }

    /// Decompose into per-coordinate one-variable factors when the function
    /// is a product of single-coordinate pieces: returns the scalar prefactor
    /// and, per coordinate, the (possibly trivial) one-dimensional factor.
    /// Single poly-exp terms always separate; sums do not.
    pub fn separable_components(&self) -> Option<(Complex64, Vec<Option<HoloFunction>>)> {
        let n = self.dim();
        match &self.repr {
            Repr::PolyExp(terms) => {
                let [term] = terms.as_slice() else {
                    return None;
                };
                let mut comps: Vec<Option<HoloFunction>> = vec![None; n];
                for j in 0..n {
                    let k = term.powers[j];
                    let b = term.expvec[j];
                    if k == 0 && b.norm_sqr() == 0.0 {
                        continue;
                    }
                    comps[j] = Some(
                        HoloFunction::from_terms(
                            vec![PolyExpTerm {
                                coeff: Complex64::new(1.0, 0.0),
                                powers: vec![k],
                                expvec: vec![b],
                            }],
                            format!("{}[{j}]", self.label),
                        )
                        .expect("single term"),
                    );
                }
                Some((term.coeff, comps))
            }
            Repr::AffinePower {
                constant,
                linear,
                exponent,
                scale,
            } => {
                let mut support = linear.iter().enumerate().filter(|(_, c)| c.norm_sqr() > 0.0);
                let Some((j, &cj)) = support.next() else {
                    // constant^s
                    return Some((
                        scale * complex_power(*constant, *exponent).ok()?,
                        vec![None; n],
                    ));
                };
                if support.next().is_some() {
                    return None;
                }
                let mut comps: Vec<Option<HoloFunction>> = vec![None; n];
                comps[j] = Some(
                    HoloFunction::affine_power(
                        *constant,
                        vec![cj],
                        *exponent,
                        Complex64::new(1.0, 0.0),
                        format!("{}[{j}]", self.label),
                    )
                    .expect("one variable"),
                );
                Some((*scale, comps))
            }
            Repr::Product(fs) => {
                let mut scale = Complex64::new(1.0, 0.0);
                let mut comps: Vec<Vec<HoloFunction>> = vec![Vec::new(); n];
                for f in fs {
                    let (s, sub) = f.separable_components()?;
                    scale *= s;
                    for (j, c) in sub.into_iter().enumerate() {
                        if let Some(c) = c {
                            comps[j].push(c);
                        }
                    }
                }
                let comps = comps
                    .into_iter()
                    .enumerate()
                    .map(|(j, fs)| match fs.len() {
                        0 => None,
                        1 => Some(fs.into_iter().next().expect("one factor")),
                        _ => Some(
                            HoloFunction::product(fs, format!("{}[{j}]", self.label))
                                .expect("one-dimensional factors"),
                        ),
                    })
                    .collect();
                Some((scale, comps))
            }
            Repr::Composed { .. } => None,
        }
    }

    /// Exact re-expansion of a poly-exponential sum under z ↦ z + shift.
    pub fn translate(&self, shift: &CPoint) -> Result<HoloFunction> {
        let Repr::PolyExp(terms) = &self.repr else {
            return Err(Error::InvalidParameter(
                "translation re-expansion requires a poly-exp sum".into(),
            ));
        };
        if shift.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: shift.dim(),
            });
        }
        let mut out: Vec<PolyExpTerm> = Vec::new();
        for t in terms {
            // c·Π(z_j+s_j)^{k_j}·e^{⟨b,z+s⟩}
            //   = c·e^{Σ b_j s_j}·Σ_{m≤k} Π C(k_j,m_j) s_j^{k_j−m_j}·z^m·e^{⟨b,z⟩}
            let exp_shift: Complex64 = t
                .expvec
                .iter()
                .zip(shift.coords())
                .map(|(&b, &s)| b * s)
                .sum();
            let base_coeff = t.coeff * exp_shift.exp();
            let mut expansion: Vec<(Complex64, Vec<u32>)> =
                vec![(base_coeff, Vec::with_capacity(t.dim()))];
            for (j, &k) in t.powers.iter().enumerate() {
                let s = shift.coord(j);
                let mut next = Vec::with_capacity(expansion.len() * (k as usize + 1));
                for (coeff, powers) in &expansion {
                    for m in 0..=k {
                        let c = coeff
                            * binomial(k, m)
                            * s.powu(k - m);
                        let mut p = powers.clone();
                        p.push(m);
                        next.push((c, p));
                    }
                }
                expansion = next;
            }
            for (coeff, powers) in expansion {
                if coeff.norm_sqr() > 0.0 {
                    out.push(PolyExpTerm {
                        coeff,
                        powers,
                        expvec: t.expvec.clone(),
                    });
                }
            }
        }
        HoloFunction::from_terms(out, format!("{}(·+s)", self.label))
    }
}

fn affine_value(constant: Complex64, linear: &[Complex64], z: &CPoint) -> Complex64 {
    constant
        + linear
            .iter()
            .zip(z.coords())
            .map(|(&c, &zj)| c * zj)
            .sum::<Complex64>()
}

/// Principal-branch power; integer exponents take the entire power path.
fn complex_power(u: Complex64, s: f64) -> Result<Complex64> {
    let rounded = s.round();
    if (s - rounded).abs() < 1e-12 && rounded.abs() < 2147483647.0 {
        let k = rounded as i32;
        if k < 0 && u.norm_sqr() == 0.0 {
            return Err(Error::BranchCut { base: u });
        }
        return Ok(u.powi(k));
    }
    if u.norm_sqr() == 0.0 || (u.re <= 0.0 && u.im == 0.0) {
        return Err(Error::BranchCut { base: u });
    }
    Ok(u.powf(s))
}

/// ln|Σ terms| by factoring out the dominant term magnitude.
fn log_abs_sum(terms: &[PolyExpTerm], z: &CPoint) -> f64 {
    match terms.len() {
        0 => f64::NEG_INFINITY,
        1 => terms[0].log_polar(z).0,
        _ => {
            let polar: Vec<(f64, f64)> = terms.iter().map(|t| t.log_polar(z)).collect();
            let m = polar
                .iter()
                .map(|&(l, _)| l)
                .fold(f64::NEG_INFINITY, f64::max);
            if m == f64::NEG_INFINITY {
                return f64::NEG_INFINITY;
            }
            let s: Complex64 = polar
                .iter()
                .map(|&(l, p)| Complex64::from_polar((l - m).exp(), p))
                .sum();
            m + s.norm().ln()
        }
    }
}

fn binomial(k: u32, m: u32) -> f64 {
    let m = m.min(k - m);
    let mut v = 1.0;
    for i in 0..m {
        v = v * f64::from(k - i) / f64::from(i + 1);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn constant_evaluates_everywhere() {
        let f = HoloFunction::constant(c(1.0, 0.0), 2);
        let z = CPoint::from_re_im(&[3.0, -1.0], &[0.2, 0.4]).unwrap();
        assert_eq!(f.eval(&z).unwrap(), c(1.0, 0.0));
    }

    #[test]
    fn square_at_one_plus_i() {
        let z1 = HoloFunction::coordinate(0, 1).unwrap();
        let f = HoloFunction::from_terms(
            vec![PolyExpTerm::new(c(1.0, 0.0), vec![2], vec![c(0.0, 0.0)]).unwrap()],
            "z^2",
        )
        .unwrap();
        let v = f.eval(&CPoint::scalar(c(1.0, 1.0))).unwrap();
        assert_relative_eq!(v.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(v.im, 2.0, epsilon = 1e-15);
        // and coordinate^1 agrees
        let w = z1.eval(&CPoint::scalar(c(0.3, 0.7))).unwrap();
        assert_eq!(w, c(0.3, 0.7));
    }

    #[test]
    fn euler_identity() {
        let f = HoloFunction::from_terms(
            vec![PolyExpTerm::new(c(1.0, 0.0), vec![0], vec![c(2.0, 0.0)]).unwrap()],
            "exp(2z)",
        )
        .unwrap();
        let v = f.eval(&CPoint::scalar(c(0.0, PI / 2.0))).unwrap();
        assert_relative_eq!(v.re, -1.0, epsilon = 1e-14);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn translate_linear() {
        let f = HoloFunction::coordinate(0, 1).unwrap();
        let shifted = f.translate(&CPoint::scalar(c(2.0, 1.0))).unwrap();
        let v = shifted.eval(&CPoint::scalar(c(1.0, 0.0))).unwrap();
        assert_relative_eq!(v.re, 3.0, epsilon = 1e-15);
        assert_relative_eq!(v.im, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn translate_square_binomial() {
        // (z+1)² = z²+2z+1
        let f = HoloFunction::from_terms(
            vec![PolyExpTerm::new(c(1.0, 0.0), vec![2], vec![c(0.0, 0.0)]).unwrap()],
            "z^2",
        )
        .unwrap();
        let g = f.translate(&CPoint::scalar(c(1.0, 0.0))).unwrap();
        assert_eq!(g.terms().unwrap().len(), 3);
        for z in [c(0.0, 0.0), c(1.0, 2.0), c(-0.5, 0.3)] {
            let lhs = g.eval(&CPoint::scalar(z)).unwrap();
            let rhs = (z + 1.0) * (z + 1.0);
            assert_relative_eq!(lhs.re, rhs.re, epsilon = 1e-13);
            assert_relative_eq!(lhs.im, rhs.im, epsilon = 1e-13);
        }
    }

    #[test]
    fn translate_exponential_absorbs_shift() {
        // exp(bζ) ∘ (ζ+s) = exp(bs)·exp(bζ)
        let b = c(0.7, -0.2);
        let f = HoloFunction::from_terms(
            vec![PolyExpTerm::new(c(1.0, 0.0), vec![0], vec![b]).unwrap()],
            "exp(bz)",
        )
        .unwrap();
        let s = c(1.3, 0.4);
        let g = f.translate(&CPoint::scalar(s)).unwrap();
        let terms = g.terms().unwrap();
        assert_eq!(terms.len(), 1);
        let expected = (b * s).exp();
        assert_relative_eq!(terms[0].coeff.re, expected.re, epsilon = 1e-14);
        assert_relative_eq!(terms[0].coeff.im, expected.im, epsilon = 1e-14);
    }

    #[test]
    fn log_abs_matches_eval() {
        let f = HoloFunction::from_terms(
            vec![
                PolyExpTerm::new(c(1.0, 0.5), vec![1], vec![c(0.3, 0.0)]).unwrap(),
                PolyExpTerm::new(c(-0.2, 0.0), vec![0], vec![c(0.0, -0.1)]).unwrap(),
            ],
            "mix",
        )
        .unwrap();
        let z = CPoint::scalar(c(0.8, -1.1));
        let direct = f.eval(&z).unwrap().norm().ln();
        assert_relative_eq!(f.log_abs(&z).unwrap(), direct, epsilon = 1e-12);
    }

    #[test]
    fn log_abs_survives_huge_exponent() {
        // e^{400·z} at z=3: |f|^4 would overflow, ln|f| must not.
        let f = HoloFunction::from_terms(
            vec![PolyExpTerm::new(c(1.0, 0.0), vec![0], vec![c(400.0, 0.0)]).unwrap()],
            "exp(400z)",
        )
        .unwrap();
        let la = f.log_abs(&CPoint::scalar(c(3.0, 0.0))).unwrap();
        assert_relative_eq!(la, 1200.0, epsilon = 1e-9);
    }

    #[test]
    fn affine_power_branch() {
        let f = HoloFunction::affine_power(
            c(1.0, 0.0),
            vec![c(-1.0, 0.0)],
            0.5,
            c(1.0, 0.0),
            "sqrt(1-z)",
        )
        .unwrap();
        let ok = f.eval(&CPoint::scalar(c(0.75, 0.0))).unwrap();
        assert_relative_eq!(ok.re, 0.5, epsilon = 1e-15);
        // base = 1-2 = -1 on the cut
        assert!(matches!(
            f.eval(&CPoint::scalar(c(2.0, 0.0))),
            Err(Error::BranchCut { .. })
        ));
    }

    #[test]
    fn product_and_compose() {
        let z0 = CPoint::scalar(c(0.5, 0.0));
        let mob = Automorphism::polydisc_mobius(z0, vec![1.0]).unwrap();
        let f = HoloFunction::coordinate(0, 1).unwrap();
        let g = HoloFunction::compose(f, mob).unwrap();
        // g(0.25) = mobius(0.25) = 2/7
        let v = g.eval(&CPoint::scalar(c(0.25, 0.0))).unwrap();
        assert_relative_eq!(v.re, 2.0 / 7.0, epsilon = 1e-15);
    }

    #[test]
    fn zero_function_edge() {
        let f = HoloFunction::from_terms(vec![], "0").unwrap();
        assert_eq!(f.eval(&CPoint::zero(1)).unwrap(), c(0.0, 0.0));
        assert_eq!(f.log_abs(&CPoint::zero(1)).unwrap(), f64::NEG_INFINITY);
    }
}
