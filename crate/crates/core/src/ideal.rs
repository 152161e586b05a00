//! Nonzero integral ideals (as canonical generators with cached
//! factorizations) and the arithmetic functions `φ_K`, `μ_K`, divisors and
//! `c_m`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;

use crate::element::AlgebraicInt;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::primes::primes_up_to;
use crate::ring::{canonical, factor, merge_exponents, primes_above, PrimeElement};

/// A nonzero integral ideal `aO_K`.
#[derive(Debug, Clone)]
pub struct Ideal {
    field: &'static Field,
    generator: AlgebraicInt,
    factors: Vec<(PrimeElement, u32)>,
    norm: u64,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl Eq for Ideal {}

impl std::hash::Hash for Ideal {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.generator.hash(state);
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.norm, self.generator.u, self.generator.v).cmp(&(
            other.norm,
            other.generator.u,
            other.generator.v,
        ))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

fn product_of_powers(field: &'static Field, factors: &[(PrimeElement, u32)]) -> AlgebraicInt {
    let prod = factors
        .iter()
        .fold(AlgebraicInt::one(field), |acc, (p, e)| {
            acc * p.generator.pow(*e)
        });
    canonical(&prod)
}

impl Ideal {
    /// The unit ideal `O_K`.
    pub fn unit(field: &'static Field) -> Ideal {
        Ideal {
            field,
            generator: AlgebraicInt::one(field),
            factors: Vec::new(),
            norm: 1,
        }
    }

    /// The principal ideal `xO_K`.
    pub fn new(x: &AlgebraicInt) -> Result<Ideal> {
        let f = factor(x)?;
        Ok(Ideal {
            field: x.field,
            generator: canonical(x),
            factors: f.factors,
            norm: x.norm(),
        })
    }

    pub fn from_prime(p: &PrimeElement) -> Ideal {
        Ideal {
            field: p.generator.field,
            generator: p.generator,
            factors: vec![(*p, 1)],
            norm: p.norm,
        }
    }

    /// Builds `Π p^e` from a factor list sorted by prime.
    pub fn from_factors(field: &'static Field, factors: Vec<(PrimeElement, u32)>) -> Ideal {
        let norm = factors.iter().map(|(p, e)| p.norm.pow(*e)).product();
        Ideal {
            field,
            generator: product_of_powers(field, &factors),
            factors,
            norm,
        }
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn generator(&self) -> &AlgebraicInt {
        &self.generator
    }

    pub fn factors(&self) -> &[(PrimeElement, u32)] {
        &self.factors
    }

    pub fn norm(&self) -> u64 {
        self.norm
    }

    pub fn is_unit(&self) -> bool {
        self.norm == 1
    }

    pub fn exponent_of(&self, p: &PrimeElement) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// `self | other`, i.e. `other ⊂ self`.
    pub fn divides(&self, other: &Ideal) -> bool {
        self.factors.iter().all(|(p, e)| other.exponent_of(p) >= *e)
    }

    pub fn contains(&self, x: &AlgebraicInt) -> bool {
        self.generator.divides(x)
    }

    pub fn mul(&self, other: &Ideal) -> Ideal {
        Ideal::from_factors(
            self.field,
            merge_exponents(&self.factors, &other.factors, |a, b| a + b),
        )
    }

    pub fn gcd(&self, other: &Ideal) -> Ideal {
        Ideal::from_factors(
            self.field,
            merge_exponents(&self.factors, &other.factors, u32::min),
        )
    }

    pub fn lcm(&self, other: &Ideal) -> Ideal {
        Ideal::from_factors(
            self.field,
            merge_exponents(&self.factors, &other.factors, u32::max),
        )
    }

    /// `self / divisor` when `divisor | self`.
    pub fn quotient(&self, divisor: &Ideal) -> Result<Ideal> {
        if !divisor.divides(self) {
            return Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(Ideal::from_factors(
            self.field,
            merge_exponents(&self.factors, &divisor.factors, |a, b| a - b),
        ))
    }

    pub fn is_coprime(&self, other: &Ideal) -> bool {
        self.gcd(other).is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }

    pub fn pow(&self, n: u32) -> Ideal {
        let factors = self.factors.iter().map(|(p, e)| (*p, e * n)).collect();
        Ideal::from_factors(self.field, factors)
    }
}

/// `φ_K(a) = N(a) Π_{p|a} (1 − 1/N(p))`, the number of units of `O_K/a`.
pub fn euler_phi(a: &Ideal) -> u64 {
    let value = a
        .factors
        .iter()
        .fold(Ratio::from_integer(a.norm as i128), |acc, (p, _)| {
            acc * Ratio::new(p.norm as i128 - 1, p.norm as i128)
        });
    assert!(value.is_integer(), "Euler function must be integral");
    value.to_integer() as u64
}

/// Möbius function: `0` unless squarefree, else `(−1)^(number of primes)`.
pub fn moebius(a: &Ideal) -> i8 {
    if !a.is_squarefree() {
        0
    } else if a.factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All divisor ideals, sorted by `(norm, generator)`.
pub fn divisors(a: &Ideal) -> Vec<Ideal> {
    let mut lists: Vec<Vec<(PrimeElement, u32)>> = vec![Vec::new()];
    for (p, e) in &a.factors {
        let mut next = Vec::with_capacity(lists.len() * (*e as usize + 1));
        for l in &lists {
            for k in 0..=*e {
                let mut l = l.clone();
                if k > 0 {
                    l.push((*p, k));
                }
                next.push(l);
            }
        }
        lists = next;
    }
    let mut out: Vec<Ideal> = lists
        .into_iter()
        .map(|l| Ideal::from_factors(a.field, l))
        .collect();
    out.sort();
    out
}

/// `c_m = N(m) Π_{p|m} (1 + 1/N(p))`.
pub fn c_m(m: &Ideal) -> Ratio<i128> {
    m.factors
        .iter()
        .fold(Ratio::from_integer(m.norm as i128), |acc, (p, _)| {
            acc * Ratio::new(p.norm as i128 + 1, p.norm as i128)
        })
}

/// Prime ideals of norm `≤ bound`, sorted by `(norm, generator)`.
pub fn prime_ideals_up_to(field: &'static Field, bound: u64) -> Vec<PrimeElement> {
    let mut out: Vec<PrimeElement> = primes_up_to(bound)
        .into_iter()
        .flat_map(|p| primes_above(field, p).expect("sieved primes are prime"))
        .filter(|p| p.norm <= bound)
        .collect();
    out.sort();
    out
}

/// All nonzero ideals of norm `≤ bound`, sorted by `(norm, generator)`.
pub fn ideals_up_to(field: &'static Field, bound: u64) -> Vec<Ideal> {
    let primes = prime_ideals_up_to(field, bound);
    let mut out = Vec::new();
    let mut stack: Vec<(PrimeElement, u32)> = Vec::new();
    extend_ideals(field, &primes, 0, 1, bound, &mut stack, &mut out);
    out.sort();
    out
}

fn extend_ideals(
    field: &'static Field,
    primes: &[PrimeElement],
    start: usize,
    norm: u64,
    bound: u64,
    stack: &mut Vec<(PrimeElement, u32)>,
    out: &mut Vec<Ideal>,
) {
    out.push(Ideal::from_factors(field, stack.clone()));
    for (i, p) in primes.iter().enumerate().skip(start) {
        if norm * p.norm > bound {
            break;
        }
        let mut n = norm;
        let mut e = 0;
        while n * p.norm <= bound {
            n *= p.norm;
            e += 1;
            stack.push((*p, e));
            extend_ideals(field, primes, i + 1, n, bound, stack, out);
            stack.pop();
        }
    }
}
