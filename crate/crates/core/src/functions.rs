//! Analytic functions on the unit disk.
//!
//! Closed forms are singular at `z = ±1`, where `1 - z²` vanishes. Evaluating
//! them through a [`DiskPoint`], which carries `1 - z` and `1 + z` computed
//! without cancellation, keeps the weighted moduli accurate on the geometric
//! radius grid down to `1 - r = 2^{-40}`.

use std::f64::consts::LN_2;
use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::cesaro;
use crate::error::{domain, Error, Result};
use crate::numerics::QuadOptions;

/// Smallest admissible `1 - |z|`. The geometric grid stops at `1 - 2^{-40}`,
/// just above this guard.
pub const BOUNDARY_GAP: f64 = 1e-13;
/// Coefficient tolerance of the doubling test in [`cauchy_coefficients`].
pub const COEFF_TOL: f64 = 1e-10;
/// Default truncation degree for series-based pipelines.
pub const DEFAULT_DEGREE: usize = 256;

/// Truncated Taylor expansion `Σ coeffs[n] zⁿ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Rejects non-finite coefficients. An empty list is the zero series.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if let Some(i) = coeffs.iter().position(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return domain(format!("coefficient {i} is not finite"));
        }
        if coeffs.is_empty() {
            return Ok(Self::zero(0));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self { coeffs: vec![Complex64::new(0.0, 0.0); degree + 1] }
    }

    pub fn constant(c: Complex64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(0);
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(n, &c)| c * n as f64).collect();
        Self { coeffs }
    }

    /// The first `n + 1` coefficients, zero-padded if the series is shorter.
    pub fn truncate(&self, n: usize) -> Self {
        let coeffs = (0..=n).map(|k| self.coeff(k)).collect();
        Self { coeffs }
    }

    /// Cauchy product truncated to degree `n`.
    pub fn mul_truncated(&self, other: &Self, n: usize) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(n + 1) {
            for (j, &b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse to degree `n`; requires a nonzero constant term.
    pub fn reciprocal(&self, n: usize) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.norm() == 0.0 {
            return domain("reciprocal of a series with zero constant term");
        }
        let mut inv = vec![Complex64::new(0.0, 0.0); n + 1];
        inv[0] = c0.inv();
        for k in 1..=n {
            let s: Complex64 = (1..=k).map(|j| self.coeff(j) * inv[k - j]).sum();
            inv[k] = -s * inv[0];
        }
        Ok(Self { coeffs: inv })
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).map(|k| (self.coeff(k) - other.coeff(k)).norm()).fold(0.0, f64::max)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PowerSeries { coeffs: (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect() }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PowerSeries { coeffs: (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect() }
    }
}

impl Mul<Complex64> for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Complex64) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|&c| c * rhs).collect() }
    }
}

/// A point of the open disk with `1 - z` and `1 + z` stored separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint {
    pub z: Complex64,
    pub one_minus_z: Complex64,
    pub one_plus_z: Complex64,
}

impl DiskPoint {
    pub fn new(z: Complex64) -> Result<Self> {
        let m = z.norm();
        if !m.is_finite() || 1.0 - m < BOUNDARY_GAP {
            return domain(format!("|z| = {m} is outside the evaluation disk"));
        }
        Ok(Self::from_parts(z, Complex64::new(1.0, 0.0) - z, Complex64::new(1.0, 0.0) + z))
    }

    /// `z = r e^{iθ}` with `1 ∓ z` formed from half-angle identities.
    pub fn polar(r: f64, theta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&r) || 1.0 - r < BOUNDARY_GAP {
            return domain(format!("radius {r} is outside the evaluation disk"));
        }
        let gap = 1.0 - r;
        let (s, c) = theta.sin_cos();
        let (sh, ch) = (0.5 * theta).sin_cos();
        let z = Complex64::new(r * c, r * s);
        let one_minus_z = Complex64::new(gap + 2.0 * r * sh * sh, -r * s);
        let one_plus_z = Complex64::new(gap + 2.0 * r * ch * ch, r * s);
        Ok(Self::from_parts(z, one_minus_z, one_plus_z))
    }

    /// Caller guarantees the three parts are consistent and the point is inside.
    pub(crate) fn from_parts(z: Complex64, one_minus_z: Complex64, one_plus_z: Complex64) -> Self {
        Self { z, one_minus_z, one_plus_z }
    }

    pub fn modulus(&self) -> f64 {
        self.z.norm()
    }

    /// `1 - z²` as a product of the stored factors.
    pub fn one_minus_z_sq(&self) -> Complex64 {
        self.one_minus_z * self.one_plus_z
    }
}

/// The functions the crate can evaluate.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticFunction {
    Poly(PowerSeries),
    /// `(1 - z²)^{-α}`, `0 < α < 1`.
    KorenblumExtremal { alpha: f64 },
    /// `1 / ((1 - z²)^α log(2e^{1/α}/(1 - z²)))`, `0 < α < 1`.
    LogKorenblumExtremal { alpha: f64 },
    Constant(Complex64),
    /// `order`-th derivative of a closed form.
    Derivative { base: Box<AnalyticFunction>, order: u32 },
    /// Image under the Cesàro operator, evaluated by quadrature.
    Cesaro(Box<AnalyticFunction>),
    /// Image under the weighted composition operator `S_t`.
    Semigroup { base: Box<AnalyticFunction>, t: f64 },
}

fn check_open_unit(alpha: f64, what: &str) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        domain(format!("{what} requires 0 < alpha < 1, got {alpha}"))
    }
}

impl AnalyticFunction {
    pub fn poly(ps: PowerSeries) -> Self {
        Self::Poly(ps)
    }

    pub fn constant(c: f64) -> Self {
        Self::Constant(Complex64::new(c, 0.0))
    }

    pub fn korenblum_extremal(alpha: f64) -> Result<Self> {
        check_open_unit(alpha, "KorenblumExtremal")?;
        Ok(Self::KorenblumExtremal { alpha })
    }

    pub fn log_korenblum_extremal(alpha: f64) -> Result<Self> {
        check_open_unit(alpha, "LogKorenblumExtremal")?;
        Ok(Self::LogKorenblumExtremal { alpha })
    }

    pub fn cesaro(f: AnalyticFunction) -> Self {
        Self::Cesaro(Box::new(f))
    }

    pub fn semigroup(f: AnalyticFunction, t: f64) -> Result<Self> {
        if !(t >= 0.0) || !t.is_finite() {
            return domain(format!("semigroup time must be finite and nonnegative, got {t}"));
        }
        Ok(Self::Semigroup { base: Box::new(f), t })
    }

    /// True for variants without a finite coefficient list.
    pub fn is_closed_form(&self) -> bool {
        !matches!(self, Self::Poly(_) | Self::Constant(_))
    }

    pub fn eval_at(&self, p: &DiskPoint) -> Result<Complex64> {
        match self {
            Self::Poly(ps) => Ok(ps.eval(p.z)),
            Self::Constant(c) => Ok(*c),
            Self::KorenblumExtremal { alpha } => {
                check_open_unit(*alpha, "KorenblumExtremal")?;
                Ok(p.one_minus_z_sq().powf(-alpha))
            }
            Self::LogKorenblumExtremal { alpha } => {
                check_open_unit(*alpha, "LogKorenblumExtremal")?;
                let w = p.one_minus_z_sq();
                Ok(w.powf(-alpha) / log_factor(*alpha, w))
            }
            Self::Derivative { base, order } => eval_derivative(base, *order, p),
            Self::Cesaro(base) => match base.as_ref() {
                Self::Poly(ps) => Ok(cesaro::poly_image_at(ps, p).0),
                Self::Constant(c) => Ok(cesaro::poly_image_at(&PowerSeries::constant(*c), p).0),
                _ => cesaro::semigroup_at(base, p, &QuadOptions::default()),
            },
            Self::Semigroup { base, t } => cesaro::SemigroupKernel::new(*t)?.apply_at(base, p),
        }
    }

    pub fn evaluate(&self, z: Complex64) -> Result<Complex64> {
        self.eval_at(&DiskPoint::new(z)?)
    }

    /// Value of the `order`-th derivative at `p`.
    pub fn eval_derivative_at(&self, order: u32, p: &DiskPoint) -> Result<Complex64> {
        eval_derivative(self, order, p)
    }
}

/// `log(2e^{1/α}/w) = 1/α + log 2 - log w` on the principal branch.
pub(crate) fn log_factor(alpha: f64, w: Complex64) -> Complex64 {
    Complex64::new(1.0 / alpha + LN_2, 0.0) - w.ln()
}

fn eval_derivative(f: &AnalyticFunction, order: u32, p: &DiskPoint) -> Result<Complex64> {
    use AnalyticFunction::*;
    if order == 0 {
        return f.eval_at(p);
    }
    match f {
        Poly(ps) => {
            let mut d = ps.clone();
            for _ in 0..order {
                d = d.derivative();
            }
            Ok(d.eval(p.z))
        }
        Constant(_) => Ok(Complex64::new(0.0, 0.0)),
        Derivative { base, order: inner } => eval_derivative(base, inner + order, p),
        KorenblumExtremal { alpha } if order == 1 => {
            check_open_unit(*alpha, "KorenblumExtremal")?;
            let w = p.one_minus_z_sq();
            Ok(p.z * (2.0 * alpha) * w.powf(-alpha - 1.0))
        }
        LogKorenblumExtremal { alpha } if order == 1 => {
            check_open_unit(*alpha, "LogKorenblumExtremal")?;
            let w = p.one_minus_z_sq();
            let l = log_factor(*alpha, w);
            Ok(p.z * 2.0 * w.powf(-alpha - 1.0) / l * (*alpha - l.inv()))
        }
        Cesaro(base) if order == 1 => match base.as_ref() {
            Poly(ps) => Ok(cesaro::poly_image_at(ps, p).1),
            Constant(c) => Ok(cesaro::poly_image_at(&PowerSeries::constant(*c), p).1),
            _ => cesaro::derivative_at(base, p, &QuadOptions::default()),
        },
        Semigroup { base, t } if order == 1 => {
            cesaro::SemigroupKernel::new(*t)?.apply_derivative_at(base, p)
        }
        _ => cauchy_derivative(f, order, p),
    }
}

/// `f^{(k)}(z)` by the trapezoidal Cauchy integral on the circle of radius
/// `(1 - |z|)/2` around `z`.
fn cauchy_derivative(f: &AnalyticFunction, order: u32, p: &DiskPoint) -> Result<Complex64> {
    let rho = 0.5 * (1.0 - p.modulus());
    let m = 64.max(4 * order as usize);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let w = Complex64::from_polar(1.0, std::f64::consts::TAU * j as f64 / m as f64);
        let dz = w * rho;
        let q = DiskPoint::from_parts(p.z + dz, p.one_minus_z - dz, p.one_plus_z + dz);
        acc += f.eval_at(&q)? * w.powi(-(order as i32));
    }
    let factorial: f64 = (1..=order).map(f64::from).product();
    Ok(acc * (factorial / (m as f64 * rho.powi(order as i32))))
}

/// Pointwise evaluation; `DomainError` outside the evaluation disk.
pub fn evaluate(f: &AnalyticFunction, z: Complex64) -> Result<Complex64> {
    f.evaluate(z)
}

pub fn derivative(f: &AnalyticFunction) -> AnalyticFunction {
    use AnalyticFunction::*;
    match f {
        Poly(ps) => Poly(ps.derivative()),
        Constant(_) => Constant(Complex64::new(0.0, 0.0)),
        Derivative { base, order } => Derivative { base: base.clone(), order: order + 1 },
        other => Derivative { base: Box::new(other.clone()), order: 1 },
    }
}

/// Settings for the discrete Cauchy coefficient extraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CauchyOptions {
    /// Sampling radius; `None` picks one from the requested degree.
    pub radius: Option<f64>,
    pub coeff_tol: f64,
    pub max_points: usize,
}

impl Default for CauchyOptions {
    fn default() -> Self {
        Self { radius: None, coeff_tol: COEFF_TOL, max_points: 1 << 16 }
    }
}

/// Sampling radius for degree `n`: `1/2`, raised for large `n` so that the
/// amplification `ρ^{-n}` of rounding errors stays below `10⁴`.
pub fn cauchy_radius(n: usize) -> f64 {
    if n == 0 {
        return 0.5;
    }
    10f64.powf(-4.0 / n as f64).max(0.5)
}

/// First `n + 1` Taylor coefficients of `g` from samples on `|z| = ρ`:
/// `c_k = (1/M) Σ_j g(ρω^j) ρ^{-k} ω^{-jk}`, with `M` doubled until no
/// coefficient moves by more than the tolerance.
pub fn cauchy_coefficients<G>(g: G, n: usize, opts: &CauchyOptions) -> Result<PowerSeries>
where
    G: Fn(&DiskPoint) -> Result<Complex64> + Sync,
{
    let rho = opts.radius.unwrap_or_else(|| cauchy_radius(n));
    if !(rho > 0.0 && rho < 1.0) {
        return domain(format!("sampling radius {rho} outside (0, 1)"));
    }
    let mut planner = FftPlanner::<f64>::new();
    let mut extract = |m: usize| -> Result<PowerSeries> {
        let mut buf: Vec<Complex64> = (0..m)
            .into_par_iter()
            .map(|j| g(&DiskPoint::polar(rho, std::f64::consts::TAU * j as f64 / m as f64)?))
            .collect::<Result<_>>()?;
        let fft: Arc<dyn rustfft::Fft<f64>> = planner.plan_fft_forward(m);
        fft.process(&mut buf);
        let mut scale = 1.0 / m as f64;
        let coeffs = buf
            .iter()
            .take(n + 1)
            .map(|&c| {
                let out = c * scale;
                scale /= rho;
                out
            })
            .collect();
        PowerSeries::new(coeffs)
    };
    let mut m = (4 * (n + 1)).next_power_of_two().max(16);
    let mut prev = extract(m)?;
    loop {
        m *= 2;
        if m > opts.max_points {
            return Err(Error::Convergence(format!(
                "Taylor coefficients to degree {n} not stable at {} sample points",
                m / 2
            )));
        }
        let next = extract(m)?;
        if next.max_abs_diff(&prev) <= opts.coeff_tol {
            return Ok(next);
        }
        prev = next;
    }
}

/// First `n + 1` Taylor coefficients of `f` at the origin.
pub fn taylor_truncate(f: &AnalyticFunction, n: usize) -> Result<PowerSeries> {
    use AnalyticFunction::*;
    match f {
        Poly(ps) => Ok(ps.truncate(n)),
        Constant(c) => {
            let mut out = PowerSeries::zero(n);
            out.coeffs[0] = *c;
            Ok(out)
        }
        Cesaro(base) => Ok(cesaro::cesaro_coeff(&taylor_truncate(base, n)?)),
        _ => cauchy_coefficients(|p| f.eval_at(p), n, &CauchyOptions::default()),
    }
}

/// Whether the first `degree + 1` Taylor coefficients are real and
/// nonnegative up to `tol`.
pub fn has_nonnegative_coefficients(f: &AnalyticFunction, degree: usize, tol: f64) -> Result<bool> {
    let ps = taylor_truncate(f, degree)?;
    Ok(ps.coeffs().iter().all(|c| c.im.abs() <= tol && c.re >= -tol))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constant_and_origin_values() {
        assert_eq!(AnalyticFunction::constant(1.0).evaluate(c(0.5)).unwrap(), c(1.0));
        let k = AnalyticFunction::korenblum_extremal(0.5).unwrap();
        assert_eq!(k.evaluate(c(0.0)).unwrap(), c(1.0));
        let ps = PowerSeries::from_real(&[3.0, 1.0, -2.0]).unwrap();
        assert_eq!(ps.eval(c(0.0)), c(3.0));
    }

    #[test]
    fn korenblum_extremal_matches_binomial_series() {
        // (1 - r²)^{-1/2} = Σ binom(k - 1/2, k) r^{2k}
        let alpha = 0.5;
        let r = 0.6f64;
        let mut term = 1.0;
        let mut sum = 0.0;
        for k in 0..200 {
            sum += term * r.powi(2 * k);
            term *= (alpha + k as f64) / (k as f64 + 1.0);
        }
        let v = AnalyticFunction::korenblum_extremal(alpha).unwrap().evaluate(c(r)).unwrap();
        assert_abs_diff_eq!(v.re, sum, epsilon = 1e-12);
        assert_abs_diff_eq!(v.re, 1.25, epsilon = 1e-12);
    }

    #[test]
    fn domain_guard() {
        let f = AnalyticFunction::constant(1.0);
        assert!(matches!(f.evaluate(c(1.0)), Err(Error::Domain(_))));
        assert!(matches!(f.evaluate(Complex64::new(0.8, 0.8)), Err(Error::Domain(_))));
        assert!(DiskPoint::polar(1.0 - (-40f64).exp2(), 0.0).is_ok());
        assert!(DiskPoint::polar(1.0 - 1e-14, 0.0).is_err());
    }

    #[test]
    fn extremal_constructors_reject_bad_alpha() {
        for a in [0.0, 1.0, -0.2, 1.5, f64::NAN] {
            assert!(AnalyticFunction::korenblum_extremal(a).is_err());
            assert!(AnalyticFunction::log_korenblum_extremal(a).is_err());
        }
    }

    #[test]
    fn nonfinite_coefficients_rejected() {
        assert!(PowerSeries::from_real(&[1.0, f64::NAN]).is_err());
        assert!(PowerSeries::from_real(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn polynomial_derivative() {
        let p = AnalyticFunction::Poly(PowerSeries::from_real(&[1.0, 1.0, 1.0]).unwrap());
        assert_eq!(derivative(&p), AnalyticFunction::Poly(PowerSeries::from_real(&[1.0, 2.0]).unwrap()));
        let k = AnalyticFunction::Constant(Complex64::new(2.0, 3.0));
        assert_eq!(derivative(&k), AnalyticFunction::constant(0.0));
    }

    #[test]
    fn extremal_derivative_vanishes_at_origin() {
        for f in [
            AnalyticFunction::korenblum_extremal(0.3).unwrap(),
            AnalyticFunction::log_korenblum_extremal(0.3).unwrap(),
        ] {
            assert_eq!(derivative(&f).evaluate(c(0.0)).unwrap().norm(), 0.0);
        }
    }

    #[test]
    fn closed_form_derivatives_match_finite_differences() {
        let z = Complex64::new(0.3, -0.4);
        let h = 1e-5;
        for f in [
            AnalyticFunction::korenblum_extremal(0.3).unwrap(),
            AnalyticFunction::log_korenblum_extremal(0.7).unwrap(),
        ] {
            let fd = (f.evaluate(z + h).unwrap() - f.evaluate(z - h).unwrap()) / (2.0 * h);
            let d = derivative(&f).evaluate(z).unwrap();
            assert!((fd - d).norm() < 1e-8, "{fd} vs {d}");
        }
    }

    #[test]
    fn second_derivative_via_cauchy_circle() {
        // (1-z²)^{-α}'' = 2α(1-z²)^{-α-1} + 4α(α+1) z² (1-z²)^{-α-2}
        let a = 0.4;
        let f = AnalyticFunction::korenblum_extremal(a).unwrap();
        let d2 = derivative(&derivative(&f));
        let z = Complex64::new(0.5, 0.2);
        let w = 1.0 - z * z;
        let exact = w.powf(-a - 1.0) * (2.0 * a) + z * z * w.powf(-a - 2.0) * (4.0 * a * (a + 1.0));
        assert!((d2.evaluate(z).unwrap() - exact).norm() < 1e-10);
    }

    #[test]
    fn taylor_of_constants_and_extremals() {
        let t = taylor_truncate(&AnalyticFunction::constant(1.0), 3).unwrap();
        assert_eq!(t, PowerSeries::from_real(&[1.0, 0.0, 0.0, 0.0]).unwrap());

        let a = 0.37;
        let t = taylor_truncate(&AnalyticFunction::korenblum_extremal(a).unwrap(), 2).unwrap();
        let expected = PowerSeries::from_real(&[1.0, 0.0, a]).unwrap();
        assert!(t.max_abs_diff(&expected) < 1e-12);

        let t = taylor_truncate(&AnalyticFunction::log_korenblum_extremal(a).unwrap(), 0).unwrap();
        assert_abs_diff_eq!(t.coeff(0).re, 1.0 / (1.0 / a + LN_2), epsilon = 1e-12);
    }

    #[test]
    fn log_extremal_coefficients_match_series_arithmetic() {
        // (1-w)^{-α} · 1/(1/α + log 2 + Σ w^k/k), w = z²
        let a = 0.3;
        let n = 40;
        let half = n / 2;
        let mut binom = vec![1.0];
        for k in 0..half {
            binom.push(binom[k] * (a + k as f64) / (k as f64 + 1.0));
        }
        let mut log = vec![1.0 / a + LN_2];
        log.extend((1..=half).map(|k| 1.0 / k as f64));
        let p = PowerSeries::from_real(&binom).unwrap();
        let l = PowerSeries::from_real(&log).unwrap().reciprocal(half).unwrap();
        let in_w = p.mul_truncated(&l, half);
        let f = AnalyticFunction::log_korenblum_extremal(a).unwrap();
        let t = taylor_truncate(&f, n).unwrap();
        for k in 0..=n {
            let expected = if k % 2 == 0 { in_w.coeff(k / 2) } else { c(0.0) };
            assert!((t.coeff(k) - expected).norm() < 1e-10, "k={k}: {} vs {expected}", t.coeff(k));
        }
    }

    #[test]
    fn series_reciprocal_of_geometric() {
        let one_minus_z = PowerSeries::from_real(&[1.0, -1.0]).unwrap();
        let inv = one_minus_z.reciprocal(5).unwrap();
        assert_eq!(inv, PowerSeries::from_real(&[1.0; 6]).unwrap());
        assert!(PowerSeries::from_real(&[0.0, 1.0]).unwrap().reciprocal(3).is_err());
    }

    #[test]
    fn cauchy_radius_policy() {
        assert_eq!(cauchy_radius(0), 0.5);
        assert_eq!(cauchy_radius(8), 0.5);
        let r = cauchy_radius(256);
        assert!(r.powi(-256) <= 1.0001e4);
    }

    #[test]
    fn polar_points_are_consistent() {
        for (r, th) in [(0.3, 1.0), (1.0 - 1e-9, 0.0), (0.999, 3.0), (0.5, -2.0)] {
            let p = DiskPoint::polar(r, th).unwrap();
            assert!((p.one_minus_z - (1.0 - p.z)).norm() < 1e-15);
            assert!((p.one_plus_z - (1.0 + p.z)).norm() < 1e-15);
        }
    }
}
