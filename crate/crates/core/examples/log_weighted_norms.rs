//! Norms of `C` from the log-weighted space into `H∞_α` and into itself.

use cesaro::theorems::{log_to_log_norm, log_to_plain_lower_bound, log_to_plain_norm};

fn main() -> cesaro::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12} {:>10}", "alpha", "to plain", "lower", "to log", "1/alpha");
    for alpha in [0.2, 0.25, 0.5, 0.8] {
        let plain = log_to_plain_norm(alpha, 1e-9)?.supremum();
        let lower = log_to_plain_lower_bound(alpha)?;
        let log = log_to_log_norm(alpha, 1e-9)?;
        println!(
            "{alpha:>6} {plain:>12.6} {lower:>12.6} {:>12.6} {:>10.4}",
            log.supremum(),
            1.0 / alpha
        );
    }
    Ok(())
}
