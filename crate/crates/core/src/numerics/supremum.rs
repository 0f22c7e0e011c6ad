//! Supremum of a radial profile `h` over `[0, 1)`.
//!
//! Radii come from the geometric grid `1 - 2^{-k}` (which resolves suprema
//! approached only as `r → 1⁻`) merged with a uniform grid. The best grid
//! point is refined by golden-section search on its neighbouring radii, and
//! the tail of the geometric grid is extrapolated to estimate `lim_{r→1⁻} h`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Values above this are taken as evidence that the supremum is infinite.
pub const DIVERGENCE_THRESHOLD: f64 = 1e12;
/// Largest `k` of the geometric radius grid `1 - 2^{-k}`.
pub const GEOMETRIC_LEVELS: i32 = 40;
/// Number of geometric radii used by the boundary extrapolation.
pub const EXTRAPOLATION_POINTS: usize = 5;
const UNIFORM_RADII: usize = 64;
/// Successive-difference ratio at or above which growth is treated as unbounded.
const GROWTH_RATIO: f64 = 0.999;

/// `r_k = 1 - 2^{-k}` for `k = 0..=40`.
pub fn geometric_radii() -> Vec<f64> {
    (0..=GEOMETRIC_LEVELS).map(|k| 1.0 - (-k as f64).exp2()).collect()
}

/// Geometric grid merged with `j / 64`, sorted and deduplicated.
pub fn search_radii() -> Vec<f64> {
    let mut radii = geometric_radii();
    radii.extend((1..UNIFORM_RADII).map(|j| j as f64 / UNIFORM_RADII as f64));
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    radii
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Divergence {
    /// Radius at which blow-up was detected.
    pub radius: f64,
    /// Profile value at that radius.
    pub value: f64,
    /// Ratio of successive differences along the geometric tail, when the
    /// detection came from growth rather than the overflow guard.
    pub growth_ratio: Option<f64>,
}

/// Limit of a sequence sampled at `1 - 2^{-k}` for consecutive `k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundaryLimit {
    /// `None` when the tail grows without bound or falls to `-∞`.
    pub limit: Option<f64>,
    /// Spread between the two most recent limit estimates.
    pub residual: f64,
    /// Estimated ratio of successive differences (`2^{-p}` for an error `~ (1-r)^p`).
    pub ratio: Option<f64>,
    pub divergent: bool,
}

/// Extrapolates the tail values `v_k` of a profile on the geometric grid.
///
/// The error is modelled as `c (1-r)^p` with the exponent estimated from the
/// data: if `q = Δ_{k+1}/Δ_k` then `L = v_{k+1} + Δ_{k+1} q/(1-q)`. An unknown
/// exponent matters here because boundary limits of weighted integrals
/// typically converge like `(1-r)^α` with fractional `α`.
pub fn boundary_extrapolate(values: &[f64]) -> BoundaryLimit {
    let n = values.len();
    let last = values[n - 1];
    let scale = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let noise = 64.0 * f64::EPSILON * scale.max(f64::MIN_POSITIVE);
    let diffs: Vec<f64> = values.windows(2).map(|w| w[1] - w[0]).collect();
    if diffs.is_empty() || diffs.iter().all(|d| d.abs() <= noise) {
        let residual = diffs.iter().fold(0.0f64, |m, d| m.max(d.abs()));
        return BoundaryLimit { limit: Some(last), residual, ratio: None, divergent: false };
    }
    let m = diffs.len();
    let d_last = diffs[m - 1];
    let estimate = |i: usize| -> Option<(f64, f64)> {
        // uses diffs[i-1], diffs[i]; extrapolates from values[i+1]
        if i == 0 || diffs[i - 1].abs() <= noise {
            return None;
        }
        let q = diffs[i] / diffs[i - 1];
        if !q.is_finite() || q <= 0.0 {
            return None;
        }
        Some((q, values[i + 1] + diffs[i] * q / (1.0 - q)))
    };
    match estimate(m - 1) {
        Some((q, _)) if q >= GROWTH_RATIO => {
            let divergent = d_last > 0.0;
            BoundaryLimit { limit: None, residual: f64::INFINITY, ratio: Some(q), divergent }
        }
        Some((q, l1)) => {
            let residual = match m.checked_sub(2).and_then(estimate) {
                Some((q0, l0)) if q0 < GROWTH_RATIO => (l1 - l0).abs(),
                _ => d_last.abs(),
            };
            BoundaryLimit { limit: Some(l1), residual, ratio: Some(q), divergent: false }
        }
        None => BoundaryLimit {
            limit: Some(last),
            residual: d_last.abs(),
            ratio: None,
            divergent: false,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupEstimate {
    /// Largest sampled value of the profile.
    pub value: f64,
    pub argmax_radius: f64,
    pub converged: bool,
    /// Extrapolated `lim_{r→1⁻} h(r)`, reported whether or not the maximiser
    /// sits at the boundary.
    pub extrapolated_limit: Option<f64>,
    /// True when the best grid value is at the largest radius.
    pub boundary_maximizer: bool,
    /// Last golden-section bracket width, or the extrapolation spread when the
    /// maximiser is the boundary.
    pub residual: f64,
    pub evaluations: usize,
    pub divergence: Option<Divergence>,
    /// Grid radii and profile values, in increasing radius.
    #[serde(skip)]
    pub samples: Vec<(f64, f64)>,
}

impl SupEstimate {
    /// The supremum: the boundary limit when the profile peaks at the
    /// boundary, otherwise the largest sampled value. Infinite if divergent.
    pub fn supremum(&self) -> f64 {
        if self.divergence.is_some() {
            return f64::INFINITY;
        }
        match self.extrapolated_limit {
            Some(l) if self.boundary_maximizer => l.max(self.value),
            _ => self.value,
        }
    }

    pub fn is_divergent(&self) -> bool {
        self.divergence.is_some()
    }
}

/// Golden-section search for a maximum of `h` on `[a, b]`.
///
/// Returns the best sampled point, its value, the number of evaluations and
/// the final bracket width.
pub fn golden_section_max<F>(h: F, a: f64, b: f64, xtol: f64) -> Result<(f64, f64, usize, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let (mut lo, mut hi) = (a.min(b), a.max(b));
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = h(x1)?;
    let mut f2 = h(x2)?;
    let mut evals = 2;
    let (mut best_x, mut best_f) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    while hi - lo > xtol && evals < 200 {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = h(x1)?;
            if f1 > best_f {
                best_x = x1;
                best_f = f1;
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = h(x2)?;
            if f2 > best_f {
                best_x = x2;
                best_f = f2;
            }
        }
        evals += 1;
        if !(lo < x1 && x1 < hi) {
            break;
        }
    }
    Ok((best_x, best_f, evals, hi - lo))
}

/// Supremum of `h` over `[0, 1)`.
///
/// Flags divergence (rather than failing) when a value exceeds
/// [`DIVERGENCE_THRESHOLD`] or the geometric tail keeps growing.
pub fn sup_over_radius<F>(h: F, tol: f64) -> Result<SupEstimate>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    let radii = search_radii();
    let values: Vec<f64> = radii.par_iter().map(|&r| h(r)).collect::<Result<Vec<_>>>()?;
    let mut evaluations = radii.len();
    let samples: Vec<(f64, f64)> = radii.iter().copied().zip(values.iter().copied()).collect();

    if let Some(&(radius, value)) =
        samples.iter().find(|(_, v)| v.is_nan() || *v > DIVERGENCE_THRESHOLD)
    {
        if value.is_nan() {
            return Err(Error::Convergence(format!("profile is NaN at r = {radius}")));
        }
        let best = samples.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
        return Ok(SupEstimate {
            value: best,
            argmax_radius: radius,
            converged: false,
            extrapolated_limit: None,
            boundary_maximizer: true,
            residual: f64::INFINITY,
            evaluations,
            divergence: Some(Divergence { radius, value, growth_ratio: None }),
            samples,
        });
    }

    let n = radii.len();
    let best_idx = (0..n).fold(0, |b, i| if values[i] > values[b] { i } else { b });
    let tail = boundary_extrapolate(&values[n - EXTRAPOLATION_POINTS..]);
    let boundary_maximizer = best_idx == n - 1;

    let mut value = values[best_idx];
    let mut argmax = radii[best_idx];
    let residual;
    if boundary_maximizer {
        residual = tail.residual;
    } else {
        let lo = radii[best_idx.saturating_sub(1)];
        let hi = radii[(best_idx + 1).min(n - 1)];
        let (x, fx, evals, width) = golden_section_max(&h, lo, hi, tol.clamp(1e-12, 1e-9))?;
        evaluations += evals;
        if fx > value {
            value = fx;
            argmax = x;
        }
        residual = width;
    }

    let divergence = tail.divergent.then(|| Divergence {
        radius: radii[n - 1],
        value: values[n - 1],
        growth_ratio: tail.ratio,
    });
    let converged = divergence.is_none() && (!boundary_maximizer || tail.residual <= tol);
    Ok(SupEstimate {
        value,
        argmax_radius: argmax,
        converged,
        extrapolated_limit: tail.limit,
        boundary_maximizer,
        residual,
        evaluations,
        divergence,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn geometric_grid_endpoints() {
        let g = geometric_radii();
        assert_eq!(g.len(), 41);
        assert_eq!(g[0], 0.0);
        assert_eq!(g[1], 0.5);
        assert_eq!(1.0 - g[40], (-40f64).exp2());
    }

    #[test]
    fn boundary_supremum_of_identity() {
        let est = sup_over_radius(Ok, 1e-10).unwrap();
        assert!(est.boundary_maximizer);
        assert!(est.value < 1.0 && est.value > 1.0 - 1e-12);
        assert_abs_diff_eq!(est.extrapolated_limit.unwrap(), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(est.supremum(), 1.0, epsilon = 1e-15);
        assert!(est.converged);
    }

    #[test]
    fn interior_maximum() {
        let est = sup_over_radius(|r| Ok(r * (1.0 - r)), 1e-10).unwrap();
        assert!(!est.boundary_maximizer);
        assert_abs_diff_eq!(est.value, 0.25, epsilon = 1e-15);
        assert_abs_diff_eq!(est.argmax_radius, 0.5, epsilon = 1e-7);
    }

    #[test]
    fn bloch_profile_maximum() {
        // (1+r)^2 (1-r) peaks at r = 1/3 with value 32/27
        let est = sup_over_radius(|r| Ok((1.0 + r).powi(2) * (1.0 - r)), 1e-10).unwrap();
        assert_abs_diff_eq!(est.value, 32.0 / 27.0, epsilon = 1e-14);
        assert_abs_diff_eq!(est.argmax_radius, 1.0 / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn fractional_power_tail_is_extrapolated() {
        // 3 - (1-r)^{0.1}: integer-power Richardson would miss this by ~6%
        let est = sup_over_radius(|r| Ok(3.0 - (1.0 - r).powf(0.1)), 1e-8).unwrap();
        assert_abs_diff_eq!(est.extrapolated_limit.unwrap(), 3.0, epsilon = 1e-9);
        assert!(est.value < 2.95);
    }

    #[test]
    fn growth_is_flagged_as_divergence() {
        let est = sup_over_radius(|r| Ok((1.0 - r).powf(-0.5)), 1e-8).unwrap();
        let d = est.divergence.expect("divergence");
        assert!(d.growth_ratio.unwrap() > 1.0);
        assert_eq!(est.supremum(), f64::INFINITY);
    }

    #[test]
    fn overflow_guard_flags_divergence() {
        let est = sup_over_radius(|r| Ok(1.0 / (1.0 - r).powi(2)), 1e-8).unwrap();
        let d = est.divergence.unwrap();
        assert!(d.value > DIVERGENCE_THRESHOLD);
        assert!(d.growth_ratio.is_none());
    }

    #[test]
    fn logarithmic_growth_is_divergent() {
        let est = sup_over_radius(|r| Ok((1.0 / (1.0 - r)).ln()), 1e-8).unwrap();
        assert!(est.is_divergent());
    }

    #[test]
    fn errors_propagate() {
        let err = sup_over_radius(|r| if r > 0.9 { Err(Error::Domain("x".into())) } else { Ok(r) }, 1e-8);
        assert!(err.is_err());
    }

    #[test]
    fn golden_section_finds_parabola_vertex() {
        let (x, fx, _, width) = golden_section_max(|x| Ok(-(x - 0.3) * (x - 0.3)), 0.0, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-7);
        assert_abs_diff_eq!(fx, 0.0, epsilon = 1e-14);
        assert!(width <= 1e-9);
    }
}
