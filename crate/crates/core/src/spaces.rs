//! Weights and numerical sup-norms of the spaces the operator acts on.
//!
//! | space | norm |
//! |---|---|
//! | `H∞` | `sup |f|` |
//! | `H∞_α` | `sup (1-|z|²)^α |f(z)|` |
//! | `H∞_{α,log}` | `sup (1-|z|²)^α log(2e^{1/α}/(1-|z|²)) |f(z)|` |
//! | `B^α` | `|f(0)| + sup (1-|z|²)^α |f'(z)|` |

use std::f64::consts::{LN_2, TAU};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::functions::{has_nonnegative_coefficients, AnalyticFunction, DiskPoint};
use crate::numerics::{
    boundary_extrapolate, golden_section_max, search_radii, sup_over_radius, Divergence,
    SupEstimate, DIVERGENCE_THRESHOLD, EXTRAPOLATION_POINTS,
};

/// Angles on the first pass of the disk search.
pub const INITIAL_ANGLES: usize = 256;
/// Largest angular grid tried before giving up.
pub const MAX_ANGLES: usize = 8192;
/// Degree to which coefficient signs are checked before a radial search.
pub const SIGN_CHECK_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "space", content = "alpha")]
pub enum SpaceSpec {
    HardyInf,
    Korenblum(f64),
    KorenblumLog(f64),
    BlochAlpha(f64),
}

impl SpaceSpec {
    pub fn korenblum(alpha: f64) -> Result<Self> {
        Self::Korenblum(alpha).validated()
    }

    pub fn korenblum_log(alpha: f64) -> Result<Self> {
        Self::KorenblumLog(alpha).validated()
    }

    pub fn bloch(alpha: f64) -> Result<Self> {
        Self::BlochAlpha(alpha).validated()
    }

    /// Checks the parameter range; a variant built directly may hold any value.
    pub fn validated(self) -> Result<Self> {
        match self {
            Self::HardyInf => Ok(self),
            Self::Korenblum(a) | Self::KorenblumLog(a) if a > 0.0 && a < 1.0 => Ok(self),
            Self::BlochAlpha(a) if a > 0.0 && a.is_finite() => Ok(self),
            Self::BlochAlpha(a) => domain(format!("B^alpha requires alpha > 0, got {a}")),
            Self::Korenblum(a) | Self::KorenblumLog(a) => {
                domain(format!("{self} requires 0 < alpha < 1, got {a}"))
            }
        }
    }

    pub fn alpha(&self) -> Option<f64> {
        match *self {
            Self::HardyInf => None,
            Self::Korenblum(a) | Self::KorenblumLog(a) | Self::BlochAlpha(a) => Some(a),
        }
    }

    /// Whether the norm weighs `f'` rather than `f`.
    pub fn uses_derivative(&self) -> bool {
        matches!(self, Self::BlochAlpha(_))
    }

    /// Parses the names used on the command line (`hardy`, `korenblum`,
    /// `korenblum-log`, `bloch`) together with a parameter.
    pub fn from_name(name: &str, alpha: f64) -> Result<Self> {
        match name {
            "hardy" | "hinf" => Ok(Self::HardyInf),
            "korenblum" => Self::korenblum(alpha),
            "korenblum-log" => Self::korenblum_log(alpha),
            "bloch" => Self::bloch(alpha),
            other => domain(format!("unknown space '{other}'")),
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::HardyInf => write!(f, "H^inf"),
            Self::Korenblum(a) => write!(f, "H^inf_{a}"),
            Self::KorenblumLog(a) => write!(f, "H^inf_{a},log"),
            Self::BlochAlpha(a) => write!(f, "B^{a}"),
        }
    }
}

impl FromStr for SpaceSpec {
    type Err = Error;

    /// `hardy`, or `name:alpha` for the parametrised spaces.
    fn from_str(s: &str) -> Result<Self> {
        let (name, alpha) = match s.split_once(':') {
            Some((n, a)) => {
                let a = a.parse::<f64>().map_err(|e| Error::Domain(format!("bad alpha '{a}': {e}")))?;
                (n, a)
            }
            None => (s, f64::NAN),
        };
        Self::from_name(name, alpha)
    }
}

/// `log(2e^{1/α}/x) = 1/α + log 2 - log x`.
pub fn log_weight_factor(alpha: f64, x: f64) -> f64 {
    1.0 / alpha + LN_2 - x.ln()
}

/// `(1-r²)` written as `(1-r)(1+r)` to keep relative accuracy near `r = 1`.
fn one_minus_r_sq(r: f64) -> f64 {
    (1.0 - r) * (1.0 + r)
}

fn weight_from_gap(space: &SpaceSpec, x: f64) -> f64 {
    match *space {
        SpaceSpec::HardyInf => 1.0,
        SpaceSpec::Korenblum(a) | SpaceSpec::BlochAlpha(a) => x.powf(a),
        SpaceSpec::KorenblumLog(a) => x.powf(a) * log_weight_factor(a, x),
    }
}

/// The radial weight of `space` at `|z| = r`.
pub fn weight_at(space: &SpaceSpec, r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return domain(format!("radius {r} outside [0, 1)"));
    }
    Ok(weight_from_gap(space, one_minus_r_sq(r)))
}

/// Weighted modulus at a disk point: `weight · |f|`, or `weight · |f'|` for `B^α`.
fn weighted_modulus(f: &AnalyticFunction, space: &SpaceSpec, p: &DiskPoint) -> Result<f64> {
    let r = p.modulus();
    let x = one_minus_r_sq(r.min(1.0));
    let value = if space.uses_derivative() { f.eval_derivative_at(1, p)? } else { f.eval_at(p)? };
    Ok(weight_from_gap(space, x) * value.norm())
}

/// `|f(0)|` for `B^α`, zero otherwise.
fn norm_offset(f: &AnalyticFunction, space: &SpaceSpec) -> Result<f64> {
    if space.uses_derivative() {
        Ok(f.eval_at(&DiskPoint::polar(0.0, 0.0)?)?.norm())
    } else {
        Ok(0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormEstimate {
    /// The norm: largest weighted modulus found, or the boundary limit when
    /// the profile increases towards the circle. Includes `|f(0)|` for `B^α`.
    pub value: f64,
    pub argmax_radius: f64,
    pub argmax_angle: f64,
    pub radial_points: usize,
    pub angular_points: usize,
    /// Change in the value at the last angular refinement.
    pub refinement_residual: f64,
    /// Extrapolated boundary value along the maximising ray, when the
    /// maximum sits at the largest radius.
    pub boundary_limit: Option<f64>,
    pub divergence: Option<Divergence>,
    /// Degree of the series standing in for the function, if any.
    pub truncation_degree: Option<usize>,
}

impl NormEstimate {
    pub fn is_divergent(&self) -> bool {
        self.divergence.is_some()
    }

    /// The value, or infinity when divergence was detected.
    pub fn norm(&self) -> f64 {
        if self.is_divergent() {
            f64::INFINITY
        } else {
            self.value
        }
    }

    fn from_sup(sup: &SupEstimate, offset: f64, truncation_degree: Option<usize>) -> Self {
        let value = if sup.is_divergent() { sup.value } else { sup.supremum() };
        Self {
            value: value + offset,
            argmax_radius: sup.argmax_radius,
            argmax_angle: 0.0,
            radial_points: sup.samples.len(),
            angular_points: 1,
            refinement_residual: if sup.boundary_maximizer { 0.0 } else { sup.residual },
            boundary_limit: sup.boundary_maximizer.then_some(sup.extrapolated_limit).flatten(),
            divergence: sup.divergence,
            truncation_degree,
        }
    }
}

fn truncation_degree(f: &AnalyticFunction) -> Option<usize> {
    match f {
        AnalyticFunction::Poly(ps) => Some(ps.degree()),
        AnalyticFunction::Cesaro(b) | AnalyticFunction::Semigroup { base: b, .. } => truncation_degree(b),
        AnalyticFunction::Derivative { base, .. } => truncation_degree(base),
        _ => None,
    }
}

/// One pass over `radii × angles`: the grid maximum and its indices.
struct Grid {
    values: Vec<f64>,
    angles: usize,
}

impl Grid {
    fn at(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.angles + j]
    }

    fn argmax(&self) -> (usize, usize, f64) {
        let k = (0..self.values.len()).fold(0, |b, k| if self.values[k] > self.values[b] { k } else { b });
        (k / self.angles, k % self.angles, self.values[k])
    }
}

fn sample_grid<H>(h: &H, radii: &[f64], angles: usize, previous: Option<&Grid>) -> Result<Grid>
where
    H: Fn(f64, f64) -> Result<f64> + Sync,
{
    let values = (0..radii.len() * angles)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / angles, k % angles);
            // reuse the even angles of the previous pass
            match previous {
                Some(g) if j % 2 == 0 => Ok(g.at(i, j / 2)),
                _ => h(radii[i], TAU * j as f64 / angles as f64),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Grid { values, angles })
}

/// Alternating golden-section refinement in `r` and `θ` around a grid
/// maximum, repeated until a sweep stops improving the value.
fn refine<H>(h: &H, radii: &[f64], i: usize, theta: f64, dtheta: f64, tol: f64) -> Result<(f64, f64, f64)>
where
    H: Fn(f64, f64) -> Result<f64>,
{
    const MAX_SWEEPS: usize = 200;
    let xtol = tol.clamp(1e-12, 1e-9);
    let n = radii.len();
    let (r_lo, r_hi) = (radii[i.saturating_sub(1)], radii[(i + 1).min(n - 1)]);
    let mut r = radii[i];
    let mut th = theta;
    let mut best = h(r, th)?;
    for _ in 0..MAX_SWEEPS {
        let start = best;
        let (rx, fr, _, _) = golden_section_max(|x| h(x, th), r_lo, r_hi, xtol)?;
        if fr > best {
            best = fr;
            r = rx;
        }
        let (tx, ft, _, _) = golden_section_max(|t| h(r, t), th - dtheta, th + dtheta, xtol)?;
        if ft > best {
            best = ft;
            th = tx.rem_euclid(TAU);
        }
        if best - start <= 1e-3 * tol * best.abs().max(1.0) {
            break;
        }
    }
    Ok((r, th, best))
}

/// Numerical norm of `f` in `space` over the whole disk.
///
/// Radii come from [`search_radii`]; angles start at [`INITIAL_ANGLES`] and
/// are doubled until the refined maximum moves by at most `tol`. If the
/// maximum sits on the largest radius the tail along that ray is
/// extrapolated, which also detects unbounded growth.
pub fn space_norm(f: &AnalyticFunction, space: &SpaceSpec, tol: f64) -> Result<NormEstimate> {
    space.validated()?;
    if !(tol > 0.0) {
        return domain(format!("tolerance must be positive, got {tol}"));
    }
    let offset = norm_offset(f, space)?;
    let h = |r: f64, th: f64| -> Result<f64> { weighted_modulus(f, space, &DiskPoint::polar(r, th)?) };
    let radii = search_radii();
    let n = radii.len();

    let mut angles = INITIAL_ANGLES;
    let mut grid = sample_grid(&h, &radii, angles, None)?;
    let mut previous: Option<f64> = None;
    loop {
        let (i, j, grid_max) = grid.argmax();
        if grid_max.is_nan() {
            return Err(Error::Convergence("weighted modulus is NaN".into()));
        }
        let theta = TAU * j as f64 / angles as f64;
        if grid_max > DIVERGENCE_THRESHOLD {
            return Ok(divergent_estimate(grid_max, radii[i], theta, n, angles, offset, None, f));
        }
        let (value, r, th, boundary_limit, divergence) = if i == n - 1 {
            let dtheta = TAU / angles as f64;
            let (tx, edge, _, _) =
                golden_section_max(|t| h(radii[i], t), theta - dtheta, theta + dtheta, tol.clamp(1e-12, 1e-9))?;
            let (th, edge) = if edge > grid_max { (tx.rem_euclid(TAU), edge) } else { (theta, grid_max) };
            let ray = (n - EXTRAPOLATION_POINTS..n).map(|k| h(radii[k], th)).collect::<Result<Vec<_>>>()?;
            let tail = boundary_extrapolate(&ray);
            if tail.divergent {
                let d = Divergence { radius: radii[i], value: edge, growth_ratio: tail.ratio };
                return Ok(divergent_estimate(edge, radii[i], th, n, angles, offset, Some(d), f));
            }
            let limit = tail.limit.unwrap_or(edge);
            (edge.max(limit), radii[i], th, tail.limit, None)
        } else {
            let (r, th, v) = refine(&h, &radii, i, theta, TAU / angles as f64, tol)?;
            (v.max(grid_max), r, th, None, None)
        };
        let residual = previous.map_or(f64::INFINITY, |p| (value - p).abs());
        if residual <= tol {
            return Ok(NormEstimate {
                value: value + offset,
                argmax_radius: r,
                argmax_angle: th,
                radial_points: n,
                angular_points: angles,
                refinement_residual: residual,
                boundary_limit,
                divergence,
                truncation_degree: truncation_degree(f),
            });
        }
        if angles * 2 > MAX_ANGLES {
            return Err(Error::Convergence(format!(
                "disk supremum moved by {residual:.3e} at {angles} angles (tol {tol:.1e})"
            )));
        }
        previous = Some(value);
        angles *= 2;
        grid = sample_grid(&h, &radii, angles, Some(&grid))?;
    }
}

#[allow(clippy::too_many_arguments)]
fn divergent_estimate(
    value: f64,
    radius: f64,
    angle: f64,
    radial_points: usize,
    angular_points: usize,
    offset: f64,
    divergence: Option<Divergence>,
    f: &AnalyticFunction,
) -> NormEstimate {
    NormEstimate {
        value: value + offset,
        argmax_radius: radius,
        argmax_angle: angle,
        radial_points,
        angular_points,
        refinement_residual: 0.0,
        boundary_limit: None,
        divergence: Some(divergence.unwrap_or(Divergence { radius, value, growth_ratio: None })),
        truncation_degree: truncation_degree(f),
    }
}

/// Norm of `f` computed along `[0, 1)` only.
///
/// For nonnegative Taylor coefficients `|f(z)| ≤ f(|z|)` (and likewise for
/// `f'`), so the positive radius carries the supremum. The sign pattern is
/// checked up to [`SIGN_CHECK_DEGREE`].
pub fn radial_sup_norm(f: &AnalyticFunction, space: &SpaceSpec, tol: f64) -> Result<NormEstimate> {
    space.validated()?;
    if !has_nonnegative_coefficients(f, SIGN_CHECK_DEGREE, crate::functions::COEFF_TOL)? {
        return Err(Error::Precondition(
            "radial norm needs real nonnegative Taylor coefficients".into(),
        ));
    }
    radial_profile_norm(f, space, tol)
}

/// Radial norm without the coefficient check.
pub(crate) fn radial_profile_norm(f: &AnalyticFunction, space: &SpaceSpec, tol: f64) -> Result<NormEstimate> {
    let offset = norm_offset(f, space)?;
    let sup = sup_over_radius(|r| weighted_modulus(f, space, &DiskPoint::polar(r, 0.0)?), tol)?;
    Ok(NormEstimate::from_sup(&sup, offset, truncation_degree(f)))
}

/// Pointwise growth bound for `f ∈ B^α` at `|z| = r`:
/// `((1-r)^{1-α} - 1)/(α - 1) · seminorm + |f(0)|`, or
/// `log(1/(1-r)) · seminorm + |f(0)|` when `α = 1`.
pub fn bloch_growth_bound(seminorm: f64, f0: f64, r: f64, alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return domain(format!("radius {r} outside [0, 1)"));
    }
    if !(seminorm >= 0.0 && f0 >= 0.0 && alpha > 0.0) {
        return domain("growth bound needs seminorm >= 0, |f(0)| >= 0 and alpha > 0");
    }
    let s = 1.0 - r;
    let factor = if alpha == 1.0 {
        -s.ln()
    } else {
        ((1.0 - alpha) * s.ln()).exp_m1() / (alpha - 1.0)
    };
    Ok(factor * seminorm + f0)
}

/// `sup (1-|z|²)^α |f'(z)|` on its own.
pub fn bloch_seminorm(f: &AnalyticFunction, alpha: f64, tol: f64) -> Result<NormEstimate> {
    let space = SpaceSpec::bloch(alpha)?;
    let mut est = space_norm(f, &space, tol)?;
    est.value -= norm_offset(f, &space)?;
    Ok(est)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::PowerSeries;
    use approx::assert_abs_diff_eq;

    #[test]
    fn weight_examples() {
        assert_eq!(weight_at(&SpaceSpec::Korenblum(0.5), 0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(
            weight_at(&SpaceSpec::KorenblumLog(0.5), 0.0).unwrap(),
            2.0 + LN_2,
            epsilon = 1e-15
        );
        assert_eq!(weight_at(&SpaceSpec::HardyInf, 0.9).unwrap(), 1.0);
        assert!(weight_at(&SpaceSpec::Korenblum(0.25), 1.0).is_err());
        assert!(weight_at(&SpaceSpec::Korenblum(0.25), -0.1).is_err());
        let w: Vec<f64> = [0.9, 0.99, 0.999, 1.0 - 1e-9]
            .iter()
            .map(|&r| weight_at(&SpaceSpec::Korenblum(0.25), r).unwrap())
            .collect();
        assert!(w.windows(2).all(|p| p[1] < p[0]));
        assert!(w[3] < 1e-2);
    }

    #[test]
    fn parameter_ranges() {
        assert!(SpaceSpec::korenblum(1.0).is_err());
        assert!(SpaceSpec::korenblum_log(0.0).is_err());
        assert!(SpaceSpec::bloch(3.0).is_ok());
        assert!(SpaceSpec::bloch(-1.0).is_err());
        assert_eq!("korenblum:0.3".parse::<SpaceSpec>().unwrap(), SpaceSpec::Korenblum(0.3));
        assert_eq!("hardy".parse::<SpaceSpec>().unwrap(), SpaceSpec::HardyInf);
        assert!("korenblum".parse::<SpaceSpec>().is_err());
    }

    #[test]
    fn extremal_functions_have_unit_norm() {
        for alpha in [0.2, 0.4] {
            let f = AnalyticFunction::korenblum_extremal(alpha).unwrap();
            let est = space_norm(&f, &SpaceSpec::Korenblum(alpha), 1e-8).unwrap();
            assert_abs_diff_eq!(est.value, 1.0, epsilon = 1e-8);
        }
        let f = AnalyticFunction::log_korenblum_extremal(0.5).unwrap();
        let est = space_norm(&f, &SpaceSpec::KorenblumLog(0.5), 1e-8).unwrap();
        assert_abs_diff_eq!(est.value, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn constant_in_bloch_space() {
        let est = space_norm(&AnalyticFunction::constant(1.0), &SpaceSpec::BlochAlpha(1.5), 1e-8).unwrap();
        assert_eq!(est.value, 1.0);
    }

    #[test]
    fn radial_examples() {
        let f = AnalyticFunction::korenblum_extremal(0.3).unwrap();
        let est = radial_sup_norm(&f, &SpaceSpec::Korenblum(0.3), 1e-8).unwrap();
        assert_abs_diff_eq!(est.value, 1.0, epsilon = 1e-12);
        let one = radial_sup_norm(&AnalyticFunction::constant(1.0), &SpaceSpec::HardyInf, 1e-8).unwrap();
        assert_eq!(one.value, 1.0);
        let z = AnalyticFunction::Poly(PowerSeries::from_real(&[0.0, 1.0]).unwrap());
        let est = radial_sup_norm(&z, &SpaceSpec::HardyInf, 1e-8).unwrap();
        assert_abs_diff_eq!(est.value, 1.0, epsilon = 1e-12);
        assert!(est.argmax_radius > 1.0 - 1e-11);
    }

    #[test]
    fn radial_norm_rejects_negative_coefficients() {
        let f = AnalyticFunction::Poly(PowerSeries::from_real(&[1.0, -1.0]).unwrap());
        assert!(matches!(
            radial_sup_norm(&f, &SpaceSpec::HardyInf, 1e-8),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn disk_norm_finds_off_axis_maximum() {
        // |1 - z| peaks at z = -1
        let f = AnalyticFunction::Poly(PowerSeries::from_real(&[1.0, -1.0]).unwrap());
        let est = space_norm(&f, &SpaceSpec::HardyInf, 1e-9).unwrap();
        assert_abs_diff_eq!(est.value, 2.0, epsilon = 1e-9);
        assert_abs_diff_eq!(est.argmax_angle, std::f64::consts::PI, epsilon = 1e-6);
        let g = AnalyticFunction::Poly(PowerSeries::from_real(&[0.0, 1.0]).unwrap());
        let est = space_norm(&g, &SpaceSpec::Korenblum(0.5), 1e-10).unwrap();
        // max of r sqrt(1-r²) is 1/2 at r = 1/√2
        assert_abs_diff_eq!(est.value, 0.5, epsilon = 1e-10);
        assert_abs_diff_eq!(est.argmax_radius, 0.5f64.sqrt(), epsilon = 1e-5);
    }

    #[test]
    fn growth_bound_examples() {
        assert_eq!(bloch_growth_bound(2.0, 0.7, 0.0, 0.5).unwrap(), 0.7);
        assert_abs_diff_eq!(bloch_growth_bound(1.0, 0.0, 0.5, 1.0).unwrap(), LN_2, epsilon = 1e-15);
        assert_abs_diff_eq!(bloch_growth_bound(1.0, 0.0, 0.75, 2.0).unwrap(), 3.0, epsilon = 1e-14);
        assert!(bloch_growth_bound(1.0, 0.0, 1.0, 2.0).is_err());
    }

    #[test]
    fn divergent_bloch_norm_is_flagged() {
        let f = AnalyticFunction::cesaro(AnalyticFunction::constant(1.0));
        let est = radial_sup_norm(&f, &SpaceSpec::BlochAlpha(0.5), 1e-8).unwrap();
        assert!(est.is_divergent());
        let est = radial_sup_norm(&f, &SpaceSpec::BlochAlpha(1.0), 1e-8).unwrap();
        assert_abs_diff_eq!(est.value, 3.0, epsilon = 1e-6);
    }
}
