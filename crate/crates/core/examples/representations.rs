//! The Cesàro image of a polynomial in coefficient, integral and semigroup
//! form.

use cesaro::cesaro::{cesaro_coeff, cesaro_integral, cesaro_semigroup};
use cesaro::functions::{AnalyticFunction, PowerSeries};
use cesaro::Complex64;

fn main() -> cesaro::Result<()> {
    let p = PowerSeries::from_real(&[1.0, -2.0, 0.5, 3.0])?;
    let f = AnalyticFunction::Poly(p.clone());
    let coeff_form = cesaro_coeff(&p.truncate(2048));
    for z in [Complex64::new(0.3, 0.4), Complex64::new(-0.9, 0.0), Complex64::from_polar(0.95, 2.0)] {
        let a = coeff_form.eval(z);
        let b = cesaro_integral(&f, z, 1e-13)?;
        let c = cesaro_semigroup(&f, z, 1e-13)?;
        let d = AnalyticFunction::cesaro(f.clone()).evaluate(z)?;
        println!("z = {z:.3}");
        println!("  coefficients {a:.12}");
        println!("  integral     {b:.12}");
        println!("  semigroup    {c:.12}");
        println!("  closed form  {d:.12}");
    }
    Ok(())
}
