//! Euler and Moebius functions, divisors, c_m and zeta values.

use qmertens::ideal::{c_m, divisors, euler_phi, moebius, Ideal};
use qmertens::zeta::dedekind_zeta;
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-4)?;
    let a = Ideal::new(&AlgebraicInt::parse(f, "6+2*w")?)?;
    println!("a = {a}, N(a) = {}", a.norm());
    println!(
        "phi(a) = {}, mu(a) = {}, c_a = {}",
        euler_phi(&a),
        moebius(&a),
        c_m(&a)
    );

    let ds = divisors(&a);
    let total: u64 = ds.iter().map(euler_phi).sum();
    println!("{} divisors, sum of phi over them = {total}", ds.len());

    for s in [1.5, 2.0, 3.0] {
        println!("zeta_K({s}) = {:.15}", dedekind_zeta(f, s, 1e-13)?);
    }
    Ok(())
}
