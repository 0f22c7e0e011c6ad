//! Monte-Carlo lower bounds next to the known norms.

use cesaro::empirical::{operator_norm_lower_bound, theoretical_upper, SampleConfig};
use cesaro::spaces::SpaceSpec;

fn main() -> cesaro::Result<()> {
    let cfg = SampleConfig::new(7, 24).with_degree(32);
    let pairs = [
        (SpaceSpec::Korenblum(0.25), SpaceSpec::Korenblum(0.25)),
        (SpaceSpec::KorenblumLog(0.5), SpaceSpec::Korenblum(0.5)),
        (SpaceSpec::BlochAlpha(1.5), SpaceSpec::BlochAlpha(1.5)),
        (SpaceSpec::HardyInf, SpaceSpec::BlochAlpha(1.0)),
        (SpaceSpec::HardyInf, SpaceSpec::BlochAlpha(0.5)),
    ];
    for (source, target) in pairs {
        let est = operator_norm_lower_bound(&source, &target, &cfg)?;
        let best_random = est.ratios[..est.ratios.len() - 1].iter().copied().fold(0.0, f64::max);
        println!(
            "{source} -> {target}: bound {:.6} (random samples {best_random:.6}), known {:?}",
            est.value(),
            theoretical_upper(&source, &target)?
        );
    }
    Ok(())
}
