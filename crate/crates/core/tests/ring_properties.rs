use std::collections::HashSet;

use qmertens::ideal::ideals_up_to;
use qmertens::primes::primes_up_to;
use qmertens::ring::{
    crt_solve, factor, gcd, ideal_lattice_basis, is_canonical, norm_form_representations,
    primes_above, residue_system, Splitting,
};
use qmertens::{AlgebraicInt, Field, FIELDS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_element(f: &'static Field, rng: &mut ChaCha8Rng, r: i64) -> AlgebraicInt {
    loop {
        let x = AlgebraicInt::new(f, rng.random_range(-r..=r), rng.random_range(-r..=r));
        if !x.is_zero() {
            return x;
        }
    }
}

#[test]
fn norm_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for f in &FIELDS {
        for _ in 0..10_000 {
            let x = random_element(f, &mut rng, 3000);
            let y = random_element(f, &mut rng, 3000);
            assert_eq!((x * y).norm(), x.norm() * y.norm());
        }
    }
}

#[test]
fn factorizations_multiply_back_with_prime_norms() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for f in &FIELDS {
        for _ in 0..2000 {
            let x = random_element(f, &mut rng, 5000);
            let fx = factor(&x).unwrap();
            assert_eq!(fx.expand(), x);
            assert!(fx.unit.is_unit());
            for (p, _) in &fx.factors {
                assert!(is_canonical(&p.generator));
                assert!(p.norm == p.p || p.norm == p.p * p.p);
                assert_eq!(p.generator.norm(), p.norm);
            }
        }
    }
}

// Every common divisor of a and b of norm ≤ 1000 divides gcd(a, b).
#[test]
fn gcd_against_divisor_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for f in &FIELDS {
        let candidates: Vec<AlgebraicInt> = ideals_up_to(f, 1000)
            .iter()
            .map(|i| *i.generator())
            .collect();
        for _ in 0..150 {
            let (a, b) = loop {
                let a = random_element(f, &mut rng, 40);
                let b = random_element(f, &mut rng, 40);
                if a.norm() <= 1000 && b.norm() <= 1000 {
                    break (a, b);
                }
            };
            let g = gcd(&a, &b).unwrap();
            assert!(g.divides(&a) && g.divides(&b));
            let mut best = 1;
            for d in &candidates {
                if d.divides(&a) && d.divides(&b) {
                    assert!(
                        d.divides(&g),
                        "D={} a={a} b={b} d={d} g={g}",
                        f.discriminant
                    );
                    best = best.max(d.norm());
                }
            }
            assert_eq!(best, g.norm());
        }
    }
}

// m | bc ⟺ (m / (m, b)) | c
#[test]
fn gauss_lemma() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for f in &FIELDS {
        let mut hits = 0;
        for _ in 0..10_000 {
            let m = random_element(f, &mut rng, 12);
            let b = random_element(f, &mut rng, 12);
            let c = random_element(f, &mut rng, 12);
            let reduced = m.exact_div(&gcd(&m, &b).unwrap()).unwrap();
            let lhs = m.divides(&(b * c));
            assert_eq!(lhs, reduced.divides(&c));
            hits += lhs as u32;
        }
        assert!(hits > 0);
    }
}

// Canonical coordinates of x modulo the lattice with basis {(a, 0), (b, c)}.
fn residue_index(x: &AlgebraicInt, basis: ((i64, i64), (i64, i64))) -> (i64, i64) {
    let ((a, _), (b, c)) = basis;
    let j = x.v.rem_euclid(c);
    let t = (x.v - j) / c;
    ((x.u - t * b).rem_euclid(a), j)
}

// Exhaustive over canonical moduli with N(αβ) ≤ 500 and all residues α₀, β₀.
#[test]
fn crt_agrees_with_residue_scan() {
    for f in &FIELDS {
        let moduli: Vec<AlgebraicInt> = ideals_up_to(f, 500)
            .iter()
            .map(|i| *i.generator())
            .collect();
        for alpha in &moduli {
            for beta in &moduli {
                if alpha.norm() * beta.norm() > 500 {
                    continue;
                }
                let (ba, bb) = (ideal_lattice_basis(alpha), ideal_lattice_basis(beta));
                let attained: HashSet<((i64, i64), (i64, i64))> = residue_system(&(*alpha * *beta))
                    .iter()
                    .map(|n| (residue_index(n, ba), residue_index(n, bb)))
                    .collect();
                let g = gcd(alpha, beta).unwrap();
                for a0 in residue_system(alpha) {
                    for b0 in residue_system(beta) {
                        let expected =
                            attained.contains(&(residue_index(&a0, ba), residue_index(&b0, bb)));
                        match crt_solve(&a0, alpha, &b0, beta).unwrap() {
                            None => assert!(
                                !expected,
                                "D={} {a0} mod {alpha}, {b0} mod {beta}",
                                f.discriminant
                            ),
                            Some(sol) => {
                                assert!(expected);
                                assert!(
                                    alpha.divides(&(sol.base - a0))
                                        && beta.divides(&(sol.base - b0))
                                );
                                assert!(alpha.divides(&sol.modulus) && beta.divides(&sol.modulus));
                                assert_eq!(
                                    sol.modulus.norm() * g.norm(),
                                    alpha.norm() * beta.norm()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn splitting_types() {
    for f in &FIELDS {
        for p in primes_up_to(1000) {
            let above = primes_above(f, p).unwrap();
            match Splitting::of(f, p) {
                Splitting::Split => {
                    assert_eq!(above.len(), 2);
                    let (x, y) = (above[0].generator, above[1].generator);
                    assert!(!x.divides(&y));
                    assert!(x.conj().divides(&y) && y.divides(&x.conj()));
                }
                Splitting::Inert => {
                    assert_eq!(above.len(), 1);
                    assert_eq!(above[0].norm, p * p);
                    assert!(norm_form_representations(f, p).is_empty());
                }
                Splitting::Ramified => {
                    assert_eq!(above.len(), 1);
                    assert_eq!(above[0].norm, p);
                }
            }
        }
    }
}
