//! The Cesàro operator in coefficient, finite-integral and semigroup form.
//!
//! ```text
//! C f(z) = Σ (1/(n+1) Σ_{k≤n} a_k) zⁿ = ∫₀¹ f(tz)/(1-tz) dt = ∫₀^∞ S_t f(z) dt
//! S_t f(z) = w_t(z) f(φ_t(z)),  w_t(z) = e^{-t}/(1-(1-e^{-t})z),  φ_t(z) = e^{-t}z/(1-(1-e^{-t})z)
//! ```
//!
//! Semi-infinite integrals run over `u = e^{-t} ∈ (0, 1]`; the kernel's `e^{-t}`
//! cancels against `dt = -du/u`.

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::functions::{AnalyticFunction, DiskPoint, PowerSeries};
use crate::numerics::{integrate_with, QuadOptions};

/// `n`-th output is the mean of the first `n + 1` inputs.
///
/// The output has the same length as the input. For a polynomial `p`, the image
/// `C p` is not a polynomial, so pad with [`PowerSeries::truncate`] first when the
/// tail matters.
pub fn cesaro_coeff(ps: &PowerSeries) -> PowerSeries {
    let mut prefix = Complex64::new(0.0, 0.0);
    let coeffs = ps
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, &a)| {
            prefix += a;
            prefix / (n + 1) as f64
        })
        .collect();
    PowerSeries::new(coeffs).expect("means of finite coefficients are finite")
}

/// `ℓ(z) = log(1/(1-z)) / z = Σ zⁿ/(n+1)` and its derivative.
fn log_kernel(p: &DiskPoint) -> (Complex64, Complex64) {
    let z = p.z;
    if z.norm() < 0.5 {
        let (mut l, mut dl) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
        for n in (0..60).rev() {
            l = l * z + 1.0 / (n + 1) as f64;
            if n > 0 {
                dl = dl * z + n as f64 / (n + 1) as f64;
            }
        }
        return (l, dl);
    }
    let l = -p.one_minus_z.ln() / z;
    (l, (p.one_minus_z.inv() - l) / z)
}

/// Closed form of `C p` for a polynomial `p`.
///
/// With `p(ξ) = p(1) + (ξ-1) q(ξ)`, `C p(z) = p(1) ℓ(z) - (1/z)∫₀^z q`, where
/// `ℓ(z) = log(1/(1-z))/z`. Unlike the truncated coefficient form this stays
/// exact up to the boundary. Returns `(C p(z), (C p)'(z))`.
pub fn poly_image_at(ps: &PowerSeries, p: &DiskPoint) -> (Complex64, Complex64) {
    let a = ps.coeffs();
    let p1: Complex64 = a.iter().sum();
    // (1/z)∫₀^z q = Σ_j q_j z^j/(j+1), q_j = Σ_{k>j} a_k
    let mut tail = Complex64::new(0.0, 0.0);
    let mut avg = vec![Complex64::new(0.0, 0.0); a.len().saturating_sub(1)];
    for j in (0..avg.len()).rev() {
        tail += a[j + 1];
        avg[j] = tail / (j + 1) as f64;
    }
    let (mut v, mut dv) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for (j, &c) in avg.iter().enumerate().rev() {
        v = v * p.z + c;
        if j > 0 {
            dv = dv * p.z + c * j as f64;
        }
    }
    let (l, dl) = log_kernel(p);
    (p1 * l - v, p1 * dl - dv)
}

/// Kernel of the weighted composition semigroup at time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemigroupKernel {
    t: f64,
    u: f64,
    one_minus_u: f64,
}

/// `D = 1 - (1-u) z` written without cancellation near `z = 1`.
fn kernel_denominator(u: f64, p: &DiskPoint) -> Complex64 {
    p.one_minus_z + p.z * u
}

/// `φ = u z / D` with `1 ∓ φ` formed from the stored factors of `z`.
fn kernel_image(u: f64, one_minus_u: f64, p: &DiskPoint, d: Complex64) -> DiskPoint {
    let inv = d.inv();
    let phi = p.z * u * inv;
    let one_minus_phi = p.one_minus_z * inv;
    // D + u z, choosing the form whose terms do not cancel
    let num = if p.z.re >= 0.0 {
        p.one_minus_z + p.z * (2.0 * u)
    } else {
        p.one_plus_z - p.z * (2.0 * one_minus_u)
    };
    DiskPoint::from_parts(phi, one_minus_phi, num * inv)
}

impl SemigroupKernel {
    pub fn new(t: f64) -> Result<Self> {
        if !(t >= 0.0) || !t.is_finite() {
            return domain(format!("semigroup time must be finite and nonnegative, got {t}"));
        }
        Ok(Self::from_u(t, (-t).exp(), -(-t).exp_m1()))
    }

    fn from_u(t: f64, u: f64, one_minus_u: f64) -> Self {
        Self { t, u, one_minus_u }
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// `w_t(z)`.
    pub fn weight(&self, z: Complex64) -> Complex64 {
        Complex64::new(self.u, 0.0) / (1.0 - z * self.one_minus_u)
    }

    /// `φ_t(z)`.
    pub fn map(&self, z: Complex64) -> Complex64 {
        z * self.u / (1.0 - z * self.one_minus_u)
    }

    /// `(w_t(z), φ_t(z))` at a disk point.
    pub fn at(&self, p: &DiskPoint) -> (Complex64, DiskPoint) {
        let d = kernel_denominator(self.u, p);
        (Complex64::new(self.u, 0.0) / d, kernel_image(self.u, self.one_minus_u, p, d))
    }

    pub fn apply_at(&self, f: &AnalyticFunction, p: &DiskPoint) -> Result<Complex64> {
        let (w, phi) = self.at(p);
        Ok(w * f.eval_at(&phi)?)
    }

    /// `(S_t f)' = u(1-u)/D² f(φ) + u²/D³ f'(φ)`.
    pub fn apply_derivative_at(&self, f: &AnalyticFunction, p: &DiskPoint) -> Result<Complex64> {
        let d = kernel_denominator(self.u, p);
        let phi = kernel_image(self.u, self.one_minus_u, p, d);
        let d2 = d * d;
        let a = f.eval_at(&phi)? * (self.u * self.one_minus_u) / d2;
        let b = f.eval_derivative_at(1, &phi)? * (self.u * self.u) / (d2 * d);
        Ok(a + b)
    }
}

/// `S_t f(z)`.
pub fn st_apply(f: &AnalyticFunction, t: f64, z: Complex64) -> Result<Complex64> {
    SemigroupKernel::new(t)?.apply_at(f, &DiskPoint::new(z)?)
}

/// `∫₀¹ f(tz)/(1 - tz) dt` by adaptive quadrature to absolute tolerance `tol`.
pub fn cesaro_integral(f: &AnalyticFunction, z: Complex64, tol: f64) -> Result<Complex64> {
    let p = DiskPoint::new(z)?;
    let integrand = |t: f64| -> Result<Complex64> {
        let s = 1.0 - t;
        let q = DiskPoint::from_parts(p.z * t, p.one_minus_z * t + s, p.one_plus_z * t + s);
        Ok(f.eval_at(&q)? / q.one_minus_z)
    };
    Ok(integrate_with(integrand, 0.0, 1.0, &QuadOptions::default().with_abs(tol))?.value)
}

pub(crate) fn semigroup_at(f: &AnalyticFunction, p: &DiskPoint, opts: &QuadOptions) -> Result<Complex64> {
    let integrand = |u: f64| -> Result<Complex64> {
        let d = kernel_denominator(u, p);
        let phi = kernel_image(u, 1.0 - u, p, d);
        Ok(f.eval_at(&phi)? / d)
    };
    Ok(integrate_with(integrand, 0.0, 1.0, opts)?.value)
}

/// `∫₀^∞ S_t f(z) dt`, computed as `∫₀¹ f(φ_u(z)) / (1 - (1-u) z) du`.
pub fn cesaro_semigroup(f: &AnalyticFunction, z: Complex64, tol: f64) -> Result<Complex64> {
    semigroup_at(f, &DiskPoint::new(z)?, &QuadOptions::default().with_abs(tol))
}

pub(crate) fn derivative_at(f: &AnalyticFunction, p: &DiskPoint, opts: &QuadOptions) -> Result<Complex64> {
    let integrand = |u: f64| -> Result<Complex64> {
        let one_minus_u = 1.0 - u;
        let d = kernel_denominator(u, p);
        let phi = kernel_image(u, one_minus_u, p, d);
        let d2 = d * d;
        let a = f.eval_at(&phi)? * one_minus_u / d2;
        let b = f.eval_derivative_at(1, &phi)? * u / (d2 * d);
        Ok(a + b)
    };
    Ok(integrate_with(integrand, 0.0, 1.0, opts)?.value)
}

/// `(C f)'(z)` from differentiating the semigroup integral under the sign:
/// `∫₀^∞ e^{-t}(1-e^{-t})/D² f(φ_t) + e^{-2t}/D³ f'(φ_t) dt`.
pub fn cesaro_derivative(f: &AnalyticFunction, z: Complex64, tol: f64) -> Result<Complex64> {
    derivative_at(f, &DiskPoint::new(z)?, &QuadOptions::default().with_abs(tol))
}
