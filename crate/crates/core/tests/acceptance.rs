use std::f64::consts::LN_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cesaro::cesaro::{cesaro_coeff, cesaro_integral, cesaro_semigroup};
use cesaro::empirical::{operator_norm_lower_bound, theoretical_upper, SampleConfig};
use cesaro::functions::{AnalyticFunction, PowerSeries};
use cesaro::numerics::{boundary_extrapolate, sup_over_radius};
use cesaro::spaces::{log_weight_factor, radial_sup_norm, SpaceSpec};
use cesaro::theorems::{
    bloch_upper_bound, c1_bloch_norm, h_closed_form, h_series_coeff, h_taylor_coefficients, hardy_bloch_witness,
    korenblum_sup_integral, log_to_log_norm, log_to_plain_lower_bound, log_to_plain_norm, WITNESS_RADIUS,
};
use cesaro::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg)
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within_time(start: Instant, limit: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < limit, format!("took {spent:.2?}, limit {limit:?}"))
}

fn korenblum_exact_norm() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for alpha in [0.1, 0.25, 0.5] {
        let est = korenblum_sup_integral(alpha, 1e-9).map_err(err)?;
        let limit = est.extrapolated_limit.ok_or_else(|| format!("no boundary limit at alpha {alpha}"))?;
        let exact = 1.0 / alpha;
        ensure(
            (limit - exact).abs() <= 0.01 * exact,
            format!("alpha {alpha}: limit {limit} vs {exact}"),
        )?;
        parts.push(format!("{alpha}:{limit:.6}"));
    }
    within_time(start, Duration::from_secs(10))?;
    Ok(format!("{} in {:.2?}", parts.join(" "), start.elapsed()))
}

fn representation_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let polys: Vec<PowerSeries> = (0..100)
        .map(|_| {
            let degree = rng.gen_range(0..=32);
            let coeffs = (0..=degree)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            PowerSeries::new(coeffs).unwrap()
        })
        .collect();
    let points: Vec<Complex64> = (0..64)
        .map(|_| {
            let r = 0.95 * rng.gen::<f64>().sqrt();
            Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU))
        })
        .collect();
    let mut worst = 0.0f64;
    for p in &polys {
        let coeff_form = cesaro_coeff(&p.truncate(1024));
        let f = AnalyticFunction::Poly(p.clone());
        for &z in &points {
            let a = coeff_form.eval(z);
            let b = cesaro_integral(&f, z, 1e-12).map_err(err)?;
            let c = cesaro_semigroup(&f, z, 1e-12).map_err(err)?;
            worst = worst.max((a - b).norm()).max((a - c).norm()).max((b - c).norm());
        }
    }
    ensure(worst <= 1e-8, format!("max discrepancy {worst:e}"))?;
    within_time(start, Duration::from_secs(30))?;
    Ok(format!("max discrepancy {worst:.2e} in {:.2?}", start.elapsed()))
}

fn fixed_point_and_constant() -> Outcome {
    let ones = PowerSeries::from_real(&[1.0; 64]).map_err(err)?;
    ensure(cesaro_coeff(&ones) == ones, "geometric series is not fixed".into())?;
    let c1 = cesaro_integral(&AnalyticFunction::constant(1.0), Complex64::new(0.5, 0.0), 1e-13).map_err(err)?;
    let gap = (c1 - Complex64::new(2.0 * LN_2, 0.0)).norm();
    ensure(gap <= 1e-9, format!("|C(1)(0.5) - 2 log 2| = {gap:e}"))?;
    Ok(format!("geometric series fixed, |C(1)(0.5) - 2 log 2| = {gap:.2e}"))
}

fn semigroup_contraction() -> Outcome {
    let mut worst = f64::NEG_INFINITY;
    for alpha in [0.1, 0.3, 0.5] {
        let space = SpaceSpec::korenblum(alpha).map_err(err)?;
        let f = AnalyticFunction::korenblum_extremal(alpha).map_err(err)?;
        for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
            let st = AnalyticFunction::semigroup(f.clone(), t).map_err(err)?;
            let norm = radial_sup_norm(&st, &space, 1e-10).map_err(err)?.norm();
            let bound = (-alpha * t).exp();
            ensure(norm <= bound + 1e-6, format!("alpha {alpha}, t {t}: {norm} > {bound}"))?;
            worst = worst.max(norm - bound);
        }
    }
    Ok(format!("max of norm - e^(-alpha t) = {worst:.2e}"))
}

fn log_to_plain_bound() -> Outcome {
    let mut parts = Vec::new();
    for alpha in [0.2, 0.5, 0.8] {
        let sup = log_to_plain_norm(alpha, 1e-9).map_err(err)?.supremum();
        let lower = log_to_plain_lower_bound(alpha).map_err(err)?;
        ensure(sup >= lower - 1e-6, format!("alpha {alpha}: sup {sup} < {lower}"))?;
        if alpha == 0.5 {
            ensure(sup >= 0.3714, format!("alpha 0.5: sup {sup} < 0.3714"))?;
        }
        parts.push(format!("{alpha}:{sup:.4}>={lower:.4}"));
    }
    Ok(parts.join(" "))
}

fn log_to_log_limit() -> Outcome {
    let mut parts = Vec::new();
    for alpha in [0.25, 0.5] {
        let est = log_to_log_norm(alpha, 1e-9).map_err(err)?;
        ensure(!est.is_divergent(), format!("alpha {alpha}: divergence reported"))?;
        let limit = est.extrapolated_limit.ok_or_else(|| format!("no boundary limit at alpha {alpha}"))?;
        ensure(
            limit.is_finite() && limit >= 0.99 / alpha,
            format!("alpha {alpha}: limit {limit} < {}", 0.99 / alpha),
        )?;
        parts.push(format!("{alpha}:{limit:.4}"));
    }
    Ok(parts.join(" "))
}

fn bloch_bounds() -> Outcome {
    let b2 = bloch_upper_bound(2.0).map_err(err)?;
    ensure(b2 == 4.0, format!("upper bound at 2 is {b2}"))?;
    let space = SpaceSpec::bloch(1.5).map_err(err)?;
    let est = operator_norm_lower_bound(&space, &space, &SampleConfig::new(0, 200)).map_err(err)?;
    let upper = bloch_upper_bound(1.5).map_err(err)?;
    let value = est.value();
    ensure(
        value >= 1.5 - 1e-3 && value <= upper,
        format!("empirical {value} outside [{}, {upper}]", 1.5 - 1e-3),
    )?;
    Ok(format!("upper(2) = 4, empirical {value:.4} in [1.499, {upper:.4}]"))
}

fn hardy_to_bloch() -> Outcome {
    let norm = c1_bloch_norm(1.0, 1e-10).map_err(err)?.norm();
    ensure((norm - 3.0).abs() <= 1e-3, format!("norm in B^1 is {norm}"))?;
    let witness = hardy_bloch_witness(WITNESS_RADIUS, 0.5).map_err(err)?;
    ensure(witness > 100.0, format!("witness {witness} at 1 - 1e-6"))?;
    let half = c1_bloch_norm(0.5, 1e-10).map_err(err)?;
    ensure(half.is_divergent(), "no divergence flag for alpha 0.5".into())?;
    Ok(format!("norm in B^1 = {norm:.9}, witness {witness:.1} at 1 - 1e-6, B^0.5 divergent"))
}

fn h_machinery() -> Outcome {
    let coeffs = h_taylor_coefficients(49).map_err(err)?;
    let worst = (0..50).map(|n| (coeffs.coeff(n).re - h_series_coeff(n)).abs()).fold(0.0, f64::max);
    ensure(worst <= 1e-10, format!("coefficient error {worst:e}"))?;
    let tail = (26..31).map(|k| h_closed_form(1.0 - (-(k as f64)).exp2())).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let limit = boundary_extrapolate(&tail).limit.ok_or("h(1-) did not extrapolate")?;
    ensure((limit - 3.0).abs() <= 1e-4, format!("h(1-) = {limit}"))?;
    for alpha in [1.5, 2.0, 3.0] {
        let est = sup_over_radius(|r| Ok((1.0 + r).powf(alpha) * (1.0 - r).powf(alpha - 1.0)), 1e-12).map_err(err)?;
        let target = 1.0 / (2.0 * alpha - 1.0);
        ensure(
            (est.argmax_radius - target).abs() <= 1e-6,
            format!("alpha {alpha}: argmax {} vs {target}", est.argmax_radius),
        )?;
    }
    Ok(format!("coefficient error {worst:.2e}, h(1-) = {limit:.8}, argmax matches"))
}

fn monotonicity() -> Outcome {
    let xs: Vec<f64> = (1..=1000).map(|i| 2.0 * i as f64 / 1001.0).collect();
    for k in 1..=9 {
        let alpha = k as f64 / 10.0;
        let g: Vec<f64> = xs.iter().map(|&x| x.powf(alpha) * log_weight_factor(alpha, x)).collect();
        if let Some(i) = g.windows(2).position(|w| w[1] <= w[0]) {
            return Err(format!("alpha {alpha}: g not increasing at x = {}", xs[i]));
        }
    }
    if let Some(n) = (0..=10_000).find(|&n| h_series_coeff(n) <= 0.0) {
        return Err(format!("h coefficient {n} is not positive"));
    }
    Ok("g increasing for alpha 0.1..0.9, h coefficients positive to 10^4".into())
}

fn soundness() -> Outcome {
    let pairs = [
        (SpaceSpec::Korenblum(0.25), SpaceSpec::Korenblum(0.25)),
        (SpaceSpec::Korenblum(0.5), SpaceSpec::Korenblum(0.5)),
        (SpaceSpec::Korenblum(0.75), SpaceSpec::Korenblum(0.75)),
        (SpaceSpec::KorenblumLog(0.5), SpaceSpec::Korenblum(0.5)),
        (SpaceSpec::KorenblumLog(0.5), SpaceSpec::KorenblumLog(0.5)),
        (SpaceSpec::BlochAlpha(1.5), SpaceSpec::BlochAlpha(1.5)),
        (SpaceSpec::BlochAlpha(2.0), SpaceSpec::BlochAlpha(2.0)),
        (SpaceSpec::HardyInf, SpaceSpec::BlochAlpha(1.0)),
    ];
    let mut checked = 0;
    let mut closest = f64::NEG_INFINITY;
    for (source, target) in &pairs {
        let upper = theoretical_upper(source, target).map_err(err)?.ok_or("pair is unbounded")?;
        for seed in 1..=5 {
            let est = operator_norm_lower_bound(source, target, &SampleConfig::new(seed, 40)).map_err(err)?;
            let worst = est.ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            ensure(
                worst <= upper + 1e-3,
                format!("{source} -> {target}, seed {seed}: ratio {worst} > {upper}"),
            )?;
            closest = closest.max(worst - upper);
            checked += est.ratios.len();
        }
    }
    Ok(format!("{checked} ratios over {} pairs, max excess {closest:.2e}", pairs.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("exact norm on H-infinity-alpha", korenblum_exact_norm),
        ("representation equivalence", representation_equivalence),
        ("fixed point and C(1)", fixed_point_and_constant),
        ("semigroup contraction", semigroup_contraction),
        ("log-weighted to plain lower bound", log_to_plain_bound),
        ("log-weighted to log-weighted limit", log_to_log_limit),
        ("alpha-Bloch bounds", bloch_bounds),
        ("H-infinity to Bloch", hardy_to_bloch),
        ("h profile", h_machinery),
        ("monotonicity", monotonicity),
        ("soundness of empirical bounds", soundness),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
