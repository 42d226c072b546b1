//! Characteristic polynomials.
//!
//! The characteristic polynomial is `χ_K(t) = det(K - tI)`, stored with the
//! coefficient of `t^k` at position `k`:
//!
//! ```text
//! χ_K(t) = Σ_k (-1)^k c_{n-k} t^k,   c_0 = 1,
//! ```
//!
//! where `c_j` is the sum of the principal minors of size `j`. Two routes
//! compute it: the Faddeev–LeVerrier trace recursion (cubic per step) and
//! the direct minor sums (exponential, used as ground truth at small `n`).

use num_complex::Complex64;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::minors::all_principal_minors;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    /// Coefficient of `t^k` at position `k`.
    pub fn new(coefficients: Vec<f64>) -> Self {
        Polynomial { coefficients }
    }

    /// The characteristic polynomial with the given minor sums `c_0, …, c_n`.
    pub fn from_minor_sums(c: &[f64]) -> Self {
        let n = c.len() - 1;
        let coefficients = (0..=n)
            .map(|k| if k % 2 == 0 { c[n - k] } else { -c[n - k] })
            .collect();
        Polynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Recovers `c_j` (sum of size-`j` principal minors) from a characteristic polynomial.
    pub fn minor_sum(&self, j: usize) -> f64 {
        let n = self.degree();
        let k = n - j;
        if k & 1 == 0 {
            self.coefficients[k]
        } else {
            -self.coefficients[k]
        }
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * t + a)
    }

    /// Largest coefficientwise gap, each scaled by `max(1, |a|, |b|)`.
    pub fn max_scaled_gap(&self, other: &Polynomial) -> f64 {
        if self.coefficients.len() != other.coefficients.len() {
            return f64::INFINITY;
        }
        self.coefficients
            .iter()
            .zip(&other.coefficients)
            .fold(0.0, |m, (&a, &b)| m.max(crate::scaled_gap(a, b)))
    }
}

/// Faddeev–LeVerrier: with `p(t) = det(tI - K) = Σ a_k t^k`,
/// `M_1 = I`, `a_{n-k} = -tr(K M_k)/k`, `M_{k+1} = K M_k + a_{n-k} I`.
/// Then `χ_K = (-1)^n p`.
pub fn characteristic_polynomial(m: &Matrix) -> Polynomial {
    let n = m.dim();
    let mut a = vec![0.0; n + 1];
    a[n] = 1.0;
    let mut mk = Matrix::identity(n);
    for k in 1..=n {
        let km = m.matmul(&mk).expect("same dimension");
        let trace: f64 = (0..n).map(|i| km[(i, i)]).sum();
        a[n - k] = -trace / k as f64;
        if k < n {
            let shift = a[n - k];
            mk = Matrix::from_fn(n, |i, j| km[(i, j)] + if i == j { shift } else { 0.0 });
        }
    }
    if n % 2 == 1 {
        a.iter_mut().for_each(|x| *x = -*x);
    }
    Polynomial::new(a)
}

/// Characteristic polynomial from explicit sums of principal minors.
/// Subject to the minor enumeration cap.
pub fn characteristic_polynomial_from_minors(m: &Matrix) -> Result<Polynomial> {
    let table = all_principal_minors(m)?;
    Ok(Polynomial::from_minor_sums(&table.minor_sums()))
}
