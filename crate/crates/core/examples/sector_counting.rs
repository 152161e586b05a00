//! Lattice points in truncated sectors against the area estimate.

use qmertens::sector::{count_points, gauss_estimate, Anchor, Angle, Sector};
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-3)?;
    let z = Anchor::Exact(AlgebraicInt::parse(f, "2+1*w")?);
    for theta in ["2pi", "pi/3", "pi/6", "0.5"] {
        let theta: Angle = theta.parse()?;
        for r in [50.0, 200.0, 800.0] {
            let s = Sector::new(z, theta, r)?;
            let n = count_points(f, &s);
            let est = gauss_estimate(f, &s);
            println!(
                "theta = {theta:<5} R = {r:<5} points = {n:>8} ratio = {:.6}",
                n as f64 / est
            );
        }
    }
    Ok(())
}
