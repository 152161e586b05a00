//! The correlation constant by its double series and by its Euler product.

use qmertens::ideal::Ideal;
use qmertens::mirsky::{c_prime_bounds, mirsky_constant_with, ConstantOptions};
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-4)?;
    let mut opts = ConstantOptions::new(1e-12);
    opts.series_cutoff = Some(3000);
    for (m, k) in [
        ("1", "1"),
        ("1", "0"),
        ("1", "1+1*w"),
        ("1+1*w", "2"),
        ("3", "1"),
    ] {
        let m = Ideal::new(&AlgebraicInt::parse(f, m)?)?;
        let k = AlgebraicInt::parse(f, k)?;
        let r = mirsky_constant_with(&m, &k, &opts)?;
        println!(
            "m = {m:<7} k = {k:<6} product = {:.15} series = {:.6} (tail <= {:.1e})",
            r.value_product.unwrap(),
            r.value_series.unwrap(),
            r.tail_bound_series.unwrap()
        );
    }
    let m = Ideal::new(&AlgebraicInt::parse(f, "1+1*w")?)?;
    let ks: Vec<AlgebraicInt> = (0..6).map(|n| AlgebraicInt::new(f, n, 0)).collect();
    let b = c_prime_bounds(&m, &ks, 1e-10)?;
    println!(
        "m = {m}: min over sampled k = {:.6}, bound for all k = {:.6}",
        b.sampled_min, b.analytic_lower
    );
    Ok(())
}
