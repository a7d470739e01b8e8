//! One-dimensional Gauss rules, with weights kept in log form so huge
//! integrand/weight dynamic ranges multiply safely in log space.
//!
//! Nodes come from the Jacobi-matrix eigenvalues and are polished by Newton
//! steps on the orthonormal polynomial; weights come from the Christoffel
//! function 1/Σ p̃_k(x)² evaluated with a scaled recurrence. Eigenvector-based
//! weights would bottom out at the ~1e−16 absolute noise floor of the dense
//! eigensolver, which matters here: the far tail weights (down to e^{−500})
//! must stay accurate in log scale because integrands may grow exponentially
//! toward those nodes.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};

/// Nodes and log-weights of a positive quadrature rule.
#[derive(Debug, Clone)]
pub struct Rule1D {
    pub nodes: Vec<f64>,
    pub log_weights: Vec<f64>,
}

impl Rule1D {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn log_add_exp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// One pass of the orthonormal three-term recurrence at the point x, with
/// periodic rescaling. `diag` holds a_0..a_{n−1}; `beta` holds β_1..β_n
/// (one extra coefficient so p̃_n exists for the Newton step).
///
/// Returns (ln Σ_{k<n} p̃_k(x)², p̃_n/p̃'_n).
fn orthonormal_scan(diag: &[f64], beta: &[f64], x: f64) -> (f64, f64) {
    let n = diag.len();
    debug_assert_eq!(beta.len(), n);
    let mut p_prev = 0.0f64; // p̃_{k−1}
    let mut p_cur = 1.0f64; // p̃_k, starting at p̃_0 = 1
    let mut dp_prev = 0.0f64;
    let mut dp_cur = 0.0f64;
    let mut log_scale = 0.0f64; // true p̃ = stored · e^{log_scale}
    let mut log_sumsq = 0.0; // ln(1²) from k = 0
    let mut b_prev = 0.0f64;
    for k in 0..n {
        let b_next = beta[k].sqrt();
        let p_next = ((x - diag[k]) * p_cur - b_prev * p_prev) / b_next;
        let dp_next = (p_cur + (x - diag[k]) * dp_cur - b_prev * dp_prev) / b_next;
        p_prev = p_cur;
        p_cur = p_next;
        dp_prev = dp_cur;
        dp_cur = dp_next;
        b_prev = b_next;
        if k + 1 < n {
            let mag = p_cur.abs().max(1e-300);
            log_sumsq = log_add_exp(log_sumsq, 2.0 * (mag.ln() + log_scale));
            // rescale before the values overflow
            let m = p_cur.abs().max(p_prev.abs()).max(dp_cur.abs()).max(dp_prev.abs());
            if m > 1e120 {
                let s = 1e-120;
                p_cur *= s;
                p_prev *= s;
                dp_cur *= s;
                dp_prev *= s;
                log_scale -= s.ln();
            }
        }
    }
    (log_sumsq, p_cur / dp_cur)
}

/// Build a rule from a monic recurrence: a_0..a_{n−1}, β_1..β_n, and the
/// measure mass ln μ₀.
///
/// Bulk nodes take the Golub–Welsch eigenvector weight μ₀·v₀². Where v₀ is
/// too small for the dense eigensolver to resolve (the exponentially-damped
/// tails of Gaussian-type weights), the node is Newton-polished and the
/// weight comes from the Christoffel function w = μ₀/Σ_{k<n} p̃_k(x)²; in
/// that regime the orthonormal sequence grows with k, so the forward scan is
/// stable.
fn rule_from_recurrence(diag: &[f64], beta: &[f64], log_mu0: f64) -> Rule1D {
    let n = diag.len();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (i, &d) in diag.iter().enumerate() {
        m[(i, i)] = d;
    }
    for i in 1..n {
        let b = beta[i - 1].sqrt();
        m[(i - 1, i)] = b;
        m[(i, i - 1)] = b;
    }
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (eig.eigenvalues[i], eig.eigenvectors[(0, i)].abs()))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut nodes = Vec::with_capacity(n);
    let mut log_weights = Vec::with_capacity(n);
    for (mut x, v0) in pairs {
        if v0 > 1e-6 {
            nodes.push(x);
            log_weights.push(log_mu0 + 2.0 * v0.ln());
        } else {
            for _ in 0..3 {
                let (_, step) = orthonormal_scan(diag, beta, x);
                if step.is_finite() {
                    x -= step;
                }
            }
            let (log_sumsq, _) = orthonormal_scan(diag, beta, x);
            nodes.push(x);
            log_weights.push(log_mu0 - log_sumsq);
        }
    }
    Rule1D { nodes, log_weights }
}

/// Laguerre monic recurrence: a_k = 2k+1, β_k = k².
fn laguerre_recurrence(n: usize) -> (Vec<f64>, Vec<f64>) {
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0).collect();
    let beta: Vec<f64> = (1..=n).map(|k| (k as f64) * (k as f64)).collect();
    (diag, beta)
}

/// Shifted-Jacobi recurrence on (0,1) for the weight (1−t)^γ.
fn jacobi01_recurrence(n: usize, gamma: f64) -> (Vec<f64>, Vec<f64>) {
    let a = gamma;
    let diag: Vec<f64> = (0..n)
        .map(|k| {
            let raw = if k == 0 {
                -a / (a + 2.0)
            } else {
                let k = k as f64;
                -(a * a) / ((2.0 * k + a) * (2.0 * k + a + 2.0))
            };
            (raw + 1.0) / 2.0
        })
        .collect();
    let beta: Vec<f64> = (1..=n)
        .map(|k| {
            let k = k as f64;
            let raw = 4.0 * k * (k + a) * k * (k + a)
                / ((2.0 * k + a).powi(2) * (2.0 * k + a + 1.0) * (2.0 * k + a - 1.0));
            raw / 4.0
        })
        .collect();
    (diag, beta)
}

/// Gauss–Laguerre: ∫₀^∞ e^{−x} g(x) dx ≈ Σ w_i g(x_i).
pub fn gauss_laguerre(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidParameter("rule size must be >= 1".into()));
    }
    let (diag, beta) = laguerre_recurrence(n);
    Ok(rule_from_recurrence(&diag, &beta, 0.0))
}

/// Symmetrize a measure dσ(t) on (0, b²) into the even weight |x|·V(x²) on
/// (−b, b) (t = x², dσ = V(t)dt): the Jacobi matrix of the symmetric weight
/// has zero diagonal and squared off-diagonals c_k built from σ's monic
/// recurrence (α_k, β_k) by c_1 = α_0, c_{2k} = β_k/c_{2k−1},
/// c_{2k+1} = α_k − c_{2k}. A σ-recurrence of length n yields 2n signed
/// nodes. `alpha` needs n+1 entries and `beta` n entries so that c_{2n}
/// exists for the Newton polish.
fn symmetrized(alpha: &[f64], beta_from1: &[f64], log_mu0: f64, n_half: usize) -> Rule1D {
    let m = 2 * n_half;
    let mut c = vec![0.0; m + 1]; // c[k] holds c_k, k = 1..m
    c[1] = alpha[0];
    for k in 1..=n_half {
        c[2 * k] = beta_from1[k - 1] / c[2 * k - 1];
        if 2 * k + 1 <= m {
            c[2 * k + 1] = alpha[k] - c[2 * k];
        }
    }
    let diag = vec![0.0; m];
    let beta: Vec<f64> = c[1..=m].to_vec();
    rule_from_recurrence(&diag, &beta, log_mu0)
}

/// Signed-radius Gaussian rule: ∫_ℝ g(x)·|x|e^{−x²} dx ≈ Σ w_i g(x_i),
/// 2n symmetric nodes. Radial profiles of entire integrands stay analytic in
/// the signed radius, so the rule converges spectrally where the u = r²
/// substitution would lose half the order.
pub fn radial_gauss(n: usize) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidParameter("rule size must be >= 1".into()));
    }
    let (alpha, beta) = laguerre_recurrence(n + 1);
    Ok(symmetrized(&alpha, &beta, 0.0, n))
}

/// Signed-radius Jacobi rule: ∫_{−1}^{1} g(x)·|x|(1−x²)^γ dx ≈ Σ w_i g(x_i),
/// 2n symmetric nodes, γ > −1.
pub fn radial_jacobi(n: usize, gamma: f64) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidParameter("rule size must be >= 1".into()));
    }
    if !(gamma > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "Jacobi exponent must exceed -1, got {gamma}"
        )));
    }
    let (alpha, beta) = jacobi01_recurrence(n + 1, gamma);
    let log_mu0 = -(gamma + 1.0).ln(); // ∫₀¹(1−t)^γ dt
    Ok(symmetrized(&alpha, &beta, log_mu0, n))
}

/// Gauss–Jacobi on (0,1) for the weight (1−t)^γ, γ > −1:
/// ∫₀¹ (1−t)^γ g(t) dt ≈ Σ w_i g(t_i).
pub fn gauss_jacobi01(n: usize, gamma: f64) -> Result<Rule1D> {
    if n == 0 {
        return Err(Error::InvalidParameter("rule size must be >= 1".into()));
    }
    if !(gamma > -1.0) {
        return Err(Error::InvalidParameter(format!(
            "Jacobi exponent must exceed -1, got {gamma}"
        )));
    }
    let (diag, beta) = jacobi01_recurrence(n, gamma);
    let log_mu0 = -(gamma + 1.0).ln();
    Ok(rule_from_recurrence(&diag, &beta, log_mu0))
}

/// Equispaced angular nodes θ_k = 2πk/M with uniform weight 2π/M
/// (trapezoid rule on the period; spectrally accurate for smooth periodic
/// integrands).
pub fn angular_nodes(m: usize) -> (Vec<f64>, f64) {
    let step = std::f64::consts::TAU / m as f64;
    ((0..m).map(|k| k as f64 * step).collect(), step)
}

/// Half-circle nodes θ_k = πk/M for signed-radius polar grids: combined with
/// symmetric radial nodes these tile the full circle with 2M directions.
pub fn half_angular_nodes(m: usize) -> (Vec<f64>, f64) {
    let step = std::f64::consts::PI / m as f64;
    ((0..m).map(|k| k as f64 * step).collect(), step)
}
