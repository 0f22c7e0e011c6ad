//! `‖S_t f_α‖` in `H∞_α` against `e^{-αt}`.

use cesaro::functions::AnalyticFunction;
use cesaro::spaces::{radial_sup_norm, SpaceSpec};

fn main() -> cesaro::Result<()> {
    let alpha = 0.3;
    let space = SpaceSpec::korenblum(alpha)?;
    let f = AnalyticFunction::korenblum_extremal(alpha)?;
    for t in [0.0, 0.1, 0.5, 1.0, 2.0, 5.0] {
        let st = AnalyticFunction::semigroup(f.clone(), t)?;
        let norm = radial_sup_norm(&st, &space, 1e-10)?.norm();
        println!("t = {t:<4} norm {norm:.10}  e^(-alpha t) {:.10}", (-alpha * t).exp());
    }
    Ok(())
}
