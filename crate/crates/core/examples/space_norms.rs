//! One polynomial measured in every supported space.

use cesaro::functions::{AnalyticFunction, PowerSeries};
use cesaro::spaces::{space_norm, SpaceSpec};

fn main() -> cesaro::Result<()> {
    let p = PowerSeries::from_real(&[0.5, 0.0, -1.0, 0.25, 0.0, 0.8])?;
    let f = AnalyticFunction::Poly(p);
    let spaces = [
        SpaceSpec::HardyInf,
        SpaceSpec::korenblum(0.25)?,
        SpaceSpec::korenblum_log(0.25)?,
        SpaceSpec::bloch(0.5)?,
        SpaceSpec::bloch(1.0)?,
    ];
    for space in spaces {
        let est = space_norm(&f, &space, 1e-10)?;
        println!(
            "{space:<16} norm {:.10} at r = {:.6}, theta = {:.6} ({} angles)",
            est.norm(),
            est.argmax_radius,
            est.argmax_angle,
            est.angular_points
        );
    }
    Ok(())
}
