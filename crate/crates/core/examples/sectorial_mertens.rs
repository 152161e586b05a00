//! The sectorial Mertens sum: ratio to the x^4 term, and the exact
//! full-circle identity with the ideal sum.

use qmertens::ideal::Ideal;
use qmertens::sector::{Anchor, Angle, Sector};
use qmertens::sums::{mertens_sum, sectorial_leading, sectorial_mertens_sum};
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-4)?;
    let m = Ideal::new(&AlgebraicInt::parse(f, "1+1*w")?)?;
    let z = Anchor::Exact(AlgebraicInt::parse(f, "3+1*w")?);
    for r in [100.0, 200.0, 400.0] {
        let s = Sector::new(z, Angle::pi_fraction(1, 3), r)?;
        let sum = sectorial_mertens_sum(&m, &s);
        println!(
            "R = {r:<5} sum = {sum:<16} ratio = {:.6}",
            sum.to_f64() / (sectorial_leading(&m, &s) * r.powi(4))
        );
    }
    let r = 150.0;
    let full = sectorial_mertens_sum(&m, &Sector::new(z, Angle::full_turn(), r)?);
    let ideals = mertens_sum(&m, r * r);
    println!("full circle: {full} = {} x {ideals}", f.unit_count);
    Ok(())
}
