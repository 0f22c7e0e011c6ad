//! Bounds on `B^α` and from `H∞` into `B^α`, with the witness `C(1)`.

use cesaro::theorems::{
    bloch_a_constant, bloch_lower_bound, bloch_upper_bound, c1_bloch_norm, hardy_bloch_witness, hardy_to_bloch_bounds,
    WITNESS_RADIUS,
};

fn main() -> cesaro::Result<()> {
    for alpha in [1.5, 2.0, 3.0] {
        println!(
            "B^{alpha}: A = {:.6}, {} <= |C| <= {:.6}, |C(1)| = {:.6}",
            bloch_a_constant(alpha)?,
            bloch_lower_bound(),
            bloch_upper_bound(alpha)?,
            c1_bloch_norm(alpha, 1e-10)?.norm()
        );
    }
    for alpha in [0.5, 1.0, 2.0] {
        let norm = c1_bloch_norm(alpha, 1e-10)?;
        println!(
            "H -> B^{alpha}: {:?}, |C(1)| = {}, witness at 1 - 1e-6 = {:.3}",
            hardy_to_bloch_bounds(alpha)?,
            norm.norm(),
            hardy_bloch_witness(WITNESS_RADIUS, alpha)?
        );
    }
    Ok(())
}
