//! Taylor coefficients of the extremal function `(1 - z²)^{-α}` recovered by
//! Cauchy integrals and compared with the binomial series.

use cesaro::functions::{taylor_truncate, AnalyticFunction};

fn main() -> cesaro::Result<()> {
    let alpha = 0.3;
    let f = AnalyticFunction::korenblum_extremal(alpha)?;
    let ps = taylor_truncate(&f, 12)?;
    let mut binom = 1.0;
    println!("{:>3} {:>14} {:>14}", "n", "numerical", "binomial");
    for n in 0..=12 {
        let exact = if n % 2 == 0 { binom } else { 0.0 };
        println!("{n:>3} {:>14.10} {:>14.10}", ps.coeff(n).re, exact);
        if n % 2 == 1 {
            let k = (n / 2) as f64;
            binom *= (alpha + k) / (k + 1.0);
        }
    }
    Ok(())
}
