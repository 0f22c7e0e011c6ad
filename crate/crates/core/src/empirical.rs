//! Monte-Carlo lower bounds for operator norms of `C`.
//!
//! Random polynomials are normalised in the source space, pushed through the
//! operator and measured in the target space. The known extremal function of
//! the source space is always part of the sample, so the bound is never
//! weaker than the classical witness.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::{has_nonnegative_coefficients, AnalyticFunction, PowerSeries, COEFF_TOL};
use crate::spaces::{radial_profile_norm, space_norm, NormEstimate, SpaceSpec, SIGN_CHECK_DEGREE};
use crate::theorems::{bloch_upper_bound, korenblum_sup_integral, log_to_log_norm, log_to_plain_norm};

/// Tolerance used for every norm computed by this module.
pub const NORM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    pub count: usize,
    pub max_degree: usize,
    /// Coefficient `n` is scaled by `(n+1)^{-decay_exponent}`.
    pub decay_exponent: f64,
}

impl SampleConfig {
    pub fn new(seed: u64, count: usize) -> Self {
        Self { seed, count, max_degree: 64, decay_exponent: 1.0 }
    }

    pub fn with_degree(mut self, max_degree: usize) -> Self {
        self.max_degree = max_degree;
        self
    }
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self::new(0, 200)
    }
}

/// Random coefficient lists, generated sequentially from the seed.
pub fn sample_coefficients(cfg: &SampleConfig) -> Vec<PowerSeries> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.count)
        .map(|_| {
            let coeffs = (0..=cfg.max_degree)
                .map(|n| {
                    let scale = ((n + 1) as f64).powf(-cfg.decay_exponent);
                    let re: f64 = rng.gen_range(-1.0..1.0);
                    let im: f64 = rng.gen_range(-1.0..1.0);
                    Complex64::new(re, im) * scale
                })
                .collect();
            PowerSeries::new(coeffs).expect("sampled coefficients are finite")
        })
        .collect()
}

/// The norm-one witness appended to every sample of `space`.
pub fn extremal_function(space: &SpaceSpec) -> Result<AnalyticFunction> {
    match *space {
        SpaceSpec::Korenblum(a) => AnalyticFunction::korenblum_extremal(a),
        SpaceSpec::KorenblumLog(a) => AnalyticFunction::log_korenblum_extremal(a),
        SpaceSpec::HardyInf | SpaceSpec::BlochAlpha(_) => Ok(AnalyticFunction::constant(1.0)),
    }
}

/// Norm with the radial shortcut when the Taylor coefficients are
/// nonnegative.
pub fn norm_in(f: &AnalyticFunction, space: &SpaceSpec) -> Result<NormEstimate> {
    if has_nonnegative_coefficients(f, SIGN_CHECK_DEGREE, COEFF_TOL)? {
        radial_profile_norm(f, space, NORM_TOL)
    } else {
        space_norm(f, space, NORM_TOL)
    }
}

/// `cfg.count` random polynomials of unit norm in `space`, followed by the
/// space's extremal function.
pub fn sample_unit_ball(space: &SpaceSpec, cfg: &SampleConfig) -> Result<Vec<AnalyticFunction>> {
    space.validated()?;
    let raw = sample_coefficients(cfg);
    let mut out = raw
        .into_par_iter()
        .map(|ps| {
            let norm = space_norm(&AnalyticFunction::Poly(ps.clone()), space, NORM_TOL)?.norm();
            if !(norm.is_finite() && norm > 0.0) {
                return Err(Error::Convergence(format!("sample norm {norm} cannot be normalised")));
            }
            Ok(AnalyticFunction::Poly(&ps * Complex64::new(1.0 / norm, 0.0)))
        })
        .collect::<Result<Vec<_>>>()?;
    out.push(extremal_function(space)?);
    Ok(out)
}

fn same_alpha(a: &SpaceSpec, b: &SpaceSpec) -> bool {
    a.alpha() == b.alpha()
}

/// Whether `(source, target)` is one of the pairs with a known norm or bound.
pub fn check_pair(source: &SpaceSpec, target: &SpaceSpec) -> Result<()> {
    use SpaceSpec::*;
    let ok = match (source, target) {
        (Korenblum(_), Korenblum(_))
        | (KorenblumLog(_), Korenblum(_))
        | (KorenblumLog(_), KorenblumLog(_))
        | (BlochAlpha(_), BlochAlpha(_)) => same_alpha(source, target),
        (HardyInf, BlochAlpha(_)) => true,
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("no norm result for the pair {source} -> {target}")))
    }
}

/// Known upper value for `‖C‖` on the pair: the exact norm or the upper
/// bound. `None` for unbounded pairs.
///
/// For `H∞_α` with `α > 1/2` and the two log-weighted pairs this is the
/// numerically evaluated sup-integral.
pub fn theoretical_upper(source: &SpaceSpec, target: &SpaceSpec) -> Result<Option<f64>> {
    use SpaceSpec::*;
    check_pair(source, target)?;
    let sup_tol = 1e-9;
    Ok(match (*source, *target) {
        (Korenblum(a), Korenblum(_)) if a <= 0.5 => Some(1.0 / a),
        (Korenblum(a), Korenblum(_)) => Some(korenblum_sup_integral(a, sup_tol)?.supremum()),
        (KorenblumLog(a), Korenblum(_)) => Some(log_to_plain_norm(a, sup_tol)?.supremum()),
        (KorenblumLog(a), KorenblumLog(_)) => Some(log_to_log_norm(a, sup_tol)?.supremum()),
        (BlochAlpha(a), BlochAlpha(_)) if a > 1.0 => Some(bloch_upper_bound(a)?),
        (HardyInf, BlochAlpha(a)) if a >= 1.0 => Some(4.0),
        _ => None,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmpiricalBound {
    /// Norm estimate of `C f` for the best sample.
    pub best: NormEstimate,
    pub best_index: usize,
    /// `‖C f‖ / ‖f‖` per sample, the extremal function last.
    pub ratios: Vec<f64>,
}

impl EmpiricalBound {
    /// The lower bound, infinite when divergence was detected.
    pub fn value(&self) -> f64 {
        self.best.norm()
    }

    pub fn is_divergent(&self) -> bool {
        self.best.is_divergent()
    }

    pub fn extremal_ratio(&self) -> f64 {
        *self.ratios.last().expect("extremal function is always sampled")
    }
}

/// `max ‖C f‖_target` over the unit-ball sample of `source`.
pub fn operator_norm_lower_bound(
    source: &SpaceSpec,
    target: &SpaceSpec,
    cfg: &SampleConfig,
) -> Result<EmpiricalBound> {
    source.validated()?;
    target.validated()?;
    check_pair(source, target)?;
    let samples = sample_unit_ball(source, cfg)?;
    let estimates = samples
        .par_iter()
        .map(|f| {
            let source_norm = norm_in(f, source)?.norm();
            let est = norm_in(&AnalyticFunction::cesaro(f.clone()), target)?;
            Ok((est.norm() / source_norm, est))
        })
        .collect::<Result<Vec<_>>>()?;
    let best_index = (0..estimates.len()).fold(0, |b, i| if estimates[i].0 > estimates[b].0 { i } else { b });
    let ratios = estimates.iter().map(|e| e.0).collect();
    let best = estimates.into_iter().nth(best_index).expect("sample is nonempty").1;
    Ok(EmpiricalBound { best, best_index, ratios })
}
