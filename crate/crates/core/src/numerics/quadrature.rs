//! Globally adaptive Gauss–Kronrod (10/21 point) quadrature.
//!
//! The interval is bisected at the panel with the largest error estimate until
//! the summed estimate drops below `max(abs_tol, rel_tol * |I|)`. Only interior
//! nodes are evaluated, so integrable endpoint singularities are resolved by
//! repeated bisection towards the endpoint.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Kronrod abscissae on [-1, 1]; odd indices are the 10-point Gauss nodes.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_745_108_736,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Default cap on the number of panels.
pub const DEFAULT_MAX_PANELS: usize = 10_000;

/// Values that can be integrated: real or complex.
pub trait QuadValue:
    Copy + Send + Sync + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(&self) -> f64;
    fn is_finite_value(&self) -> bool;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Tolerances and budget of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_panels: usize,
}

impl QuadOptions {
    pub fn absolute(tol: f64) -> Self {
        Self { abs_tol: tol, rel_tol: 0.0, max_panels: DEFAULT_MAX_PANELS }
    }

    pub fn with_abs(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_rel(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-12, max_panels: DEFAULT_MAX_PANELS }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub subdivisions: usize,
}

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One Gauss–Kronrod 10/21 panel with the QUADPACK error rescaling.
fn gk21<T, G>(g: &G, a: f64, b: f64) -> Result<(T, f64)>
where
    T: QuadValue,
    G: Fn(f64) -> Result<T>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = g(center)?;
    let mut res_k = f_center * WGK[10];
    let mut res_g = T::zero();
    let mut res_abs = f_center.magnitude() * WGK[10];
    let mut fv1 = [T::zero(); 10];
    let mut fv2 = [T::zero(); 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = g(center - dx)?;
        let f2 = g(center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        res_k = res_k + (f1 + f2) * WGK[j];
        res_abs += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            res_g = res_g + (f1 + f2) * WG[j / 2];
        }
    }
    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (f_center - mean).magnitude();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).magnitude() + (fv2[j] - mean).magnitude());
    }
    let scale = half.abs();
    let value = res_k * half;
    res_abs *= scale;
    res_asc *= scale;
    let mut err = ((res_k - res_g) * half).magnitude();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    if !value.is_finite_value() || !err.is_finite() {
        return Err(Error::Convergence(format!(
            "non-finite integrand value on [{a:e}, {b:e}]"
        )));
    }
    Ok((value, err))
}

/// Integrates a fallible integrand over `[a, b]`.
pub fn integrate_with<T, G>(g: G, a: f64, b: f64, opts: &QuadOptions) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    G: Fn(f64) -> Result<T>,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::Domain(format!("invalid integration interval [{a}, {b}]")));
    }
    let (v0, e0) = gk21(&g, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value: v0, error: e0 });
    let mut total = v0;
    let mut total_err = e0;
    let mut panels = 1usize;
    loop {
        let target = opts.abs_tol.max(opts.rel_tol * total.magnitude());
        if total_err <= target {
            break;
        }
        if panels >= opts.max_panels {
            return Err(Error::Convergence(format!(
                "quadrature error {total_err:e} above tolerance {target:e} after {panels} panels"
            )));
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            return Err(Error::Convergence(format!(
                "panel [{:e}, {:e}] cannot be bisected further (error {:e})",
                worst.a, worst.b, worst.error
            )));
        }
        let (vl, el) = gk21(&g, worst.a, mid)?;
        let (vr, er) = gk21(&g, mid, worst.b)?;
        total = total - worst.value + vl + vr;
        total_err += el + er - worst.error;
        heap.push(Panel { a: worst.a, b: mid, value: vl, error: el });
        heap.push(Panel { a: mid, b: worst.b, value: vr, error: er });
        panels += 1;
        // running sums drift; resum occasionally
        if panels % 256 == 0 {
            total = heap.iter().fold(T::zero(), |acc, p| acc + p.value);
            total_err = heap.iter().map(|p| p.error).sum();
        }
    }
    let mut items: Vec<Panel<T>> = heap.into_vec();
    items.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = items.iter().fold(T::zero(), |acc, p| acc + p.value);
    let error_estimate = items.iter().map(|p| p.error).sum();
    Ok(QuadratureResult { value, error_estimate, subdivisions: panels })
}

/// Integrates `g` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate_finite<T, G>(g: G, a: f64, b: f64, tol: f64) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    G: Fn(f64) -> T,
{
    integrate_with(|x| Ok(g(x)), a, b, &QuadOptions::absolute(tol))
}

/// `∫₀^∞ g(t) dt` through `u = e^{-t}`, i.e. `∫₀¹ g(-ln u) / u du`.
///
/// The unit interval is integrated in full; the open rule never evaluates
/// `u = 0`, and panels adjacent to it are bisected until their contribution is
/// below tolerance.
pub fn integrate_halfline_exp<T, G>(g: G, tol: f64) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    G: Fn(f64) -> T,
{
    integrate_halfline_exp_with(|t| Ok(g(t)), &QuadOptions::absolute(tol))
}

pub fn integrate_halfline_exp_with<T, G>(g: G, opts: &QuadOptions) -> Result<QuadratureResult<T>>
where
    T: QuadValue,
    G: Fn(f64) -> Result<T>,
{
    integrate_with(|u: f64| Ok(g(-u.ln())? * (1.0 / u)), 0.0, 1.0, opts)
}
