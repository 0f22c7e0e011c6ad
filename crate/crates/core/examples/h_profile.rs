//! The profile `h(r)` bounding `(1-r²)|(Cf)'(r)|` on the unit ball of `H∞`.

use cesaro::numerics::boundary_extrapolate;
use cesaro::theorems::{h_closed_form, h_series_coeff, h_taylor_coefficients};

fn main() -> cesaro::Result<()> {
    let numeric = h_taylor_coefficients(10)?;
    for n in 0..=10 {
        println!("c_{n:<2} = {:.12}  series {:.12}", numeric.coeff(n).re, h_series_coeff(n));
    }
    let tail: Vec<f64> = (20..25).map(|k| h_closed_form(1.0 - (-(k as f64)).exp2())).collect::<Result<_, _>>()?;
    for r in [0.1, 0.5, 0.9, 0.999] {
        println!("h({r}) = {:.10}", h_closed_form(r)?);
    }
    println!("h(1-) ~ {:?}", boundary_extrapolate(&tail).limit);
    Ok(())
}
