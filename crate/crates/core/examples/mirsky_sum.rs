//! The shifted correlation sum and its normalized version against their
//! leading terms.

use qmertens::ideal::Ideal;
use qmertens::mirsky::mirsky_constant;
use qmertens::sector::{Anchor, Angle, Sector};
use qmertens::sums::{
    mirsky_leading, mirsky_sum, normalized_mirsky_leading, normalized_mirsky_sum,
};
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-4)?;
    let m = Ideal::unit(f);
    let k = AlgebraicInt::parse(f, "1+1*w")?;
    let c = mirsky_constant(&m, &k, 1e-12)?.value();
    println!("c = {c:.15}");
    for r in [50.0, 100.0, 200.0] {
        let s = Sector::new(Anchor::Exact(AlgebraicInt::one(f)), Angle::full_turn(), r)?;
        let sum = mirsky_sum(&m, &s, &k);
        let (norm, _) = normalized_mirsky_sum(&m, &s, &k);
        println!(
            "R = {r:<4} sum = {:<22} ratio = {:.5}   normalized = {:<12.4} ratio = {:.5}",
            sum.value,
            sum.value.to_f64() / (mirsky_leading(f, &s, c) * r.powi(6)),
            norm.to_f64(),
            norm.to_f64() / (normalized_mirsky_leading(f, &s, c) * r * r)
        );
    }
    Ok(())
}
