//! `‖C‖` on `H∞_α`: the weighted integral, its supremum over the radius and
//! the boundary limit `1/α`.

use cesaro::theorems::{korenblum_integral, korenblum_sup_integral, verify_theorem, TheoremId};

fn main() -> cesaro::Result<()> {
    for alpha in [0.1, 0.25, 0.5, 0.75] {
        let est = korenblum_sup_integral(alpha, 1e-9)?;
        println!(
            "alpha {alpha:<5} sup {:.10}  limit {:?}  at r = {:.3e}",
            est.supremum(),
            est.extrapolated_limit,
            1.0 - est.argmax_radius
        );
    }
    for r in [0.0, 0.5, 0.9, 0.999] {
        println!("I(r = {r}) = {:.10} for alpha 0.25", korenblum_integral(r, 0.25)?);
    }
    let v = verify_theorem(TheoremId::T3_1, 0.25, TheoremId::T3_1.default_tolerance())?;
    println!("{}: computed {} against {}, passed {}", v.theorem_id, v.computed, v.theoretical, v.passed);
    Ok(())
}
