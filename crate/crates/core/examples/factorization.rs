//! Prime splitting, factorization, gcd and the Chinese remainder theorem.

use qmertens::ring::{crt_solve, factor, gcd, primes_above, Splitting};
use qmertens::{lookup_field, AlgebraicInt, Result};

fn main() -> Result<()> {
    let f = lookup_field(-7)?;
    for p in [2, 3, 7, 11] {
        let above: Vec<String> = primes_above(f, p)?
            .iter()
            .map(|q| q.generator.to_string())
            .collect();
        println!(
            "p = {p:>2}: {:?}, {}",
            Splitting::of(f, p),
            above.join(", ")
        );
    }

    let x = AlgebraicInt::parse(f, "120+35*w")?;
    println!("{x} = {}", factor(&x)?);

    let a = AlgebraicInt::parse(f, "14")?;
    let b = AlgebraicInt::parse(f, "4+2*w")?;
    println!("gcd({a}, {b}) = {}", gcd(&a, &b)?);

    let three = AlgebraicInt::from_int(f, 3);
    let w = AlgebraicInt::omega(f);
    match crt_solve(&AlgebraicInt::one(f), &three, &AlgebraicInt::zero(f), &w)? {
        Some(s) => println!(
            "n = 1 mod 3, n = 0 mod w: n = {} + ({})O_K",
            s.base, s.modulus
        ),
        None => println!("no solution"),
    }
    Ok(())
}
