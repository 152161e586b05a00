//! The congruence Mertens sum against its x^2 term.

use qmertens::ideal::Ideal;
use qmertens::sums::{mertens_leading, mertens_sum};
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-8)?;
    for m in ["1", "1+1*w", "3"] {
        let m = Ideal::new(&AlgebraicInt::parse(f, m)?)?;
        let lead = mertens_leading(&m);
        for x in [1e3, 1e4, 1e5] {
            let s = mertens_sum(&m, x);
            println!(
                "m = {m:<8} x = {x:<8} sum = {s:<14} ratio = {:.6}",
                s.to_f64() / (lead * x * x)
            );
        }
    }
    Ok(())
}
