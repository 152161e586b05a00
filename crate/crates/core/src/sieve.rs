//! Fast `φ_K` and `μ_K` of elements through a smallest-prime-factor table
//! over norms.
//!
//! For `a ≠ 0` with `p^e ‖ N(a)`, the local factor of `φ_K(a)/N(a)` is
//! `1 − 1/p²` for inert `p`, `1 − 1/p` for ramified `p`, and for split `p`
//! either `(1 − 1/p)²` (when `p | a`, i.e. both primes above `p` divide `a`)
//! or `1 − 1/p`.

use crate::element::AlgebraicInt;
use crate::field::Field;
use crate::ideal::{euler_phi, moebius, Ideal};
use crate::primes::kronecker;

pub struct NormSieve {
    field: &'static Field,
    spf: Vec<u32>,
    chi: Vec<i8>,
}

impl NormSieve {
    /// Tables for norms `≤ bound`.
    pub fn new(field: &'static Field, bound: u64) -> NormSieve {
        let n = bound.max(1) as usize;
        let mut spf = vec![0u32; n + 1];
        let mut chi = vec![0i8; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                chi[i] = kronecker(field.discriminant, i as u64) as i8;
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        NormSieve { field, spf, chi }
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn bound(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    // (p, e, p divides a) for p^e ‖ n
    fn for_each_prime(&self, a: &AlgebraicInt, mut f: impl FnMut(u64, u32, i8, bool)) {
        let mut n = a.norm() as usize;
        while n > 1 {
            let p = self.spf[n] as usize;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            let divides = a.u % p as i64 == 0 && a.v % p as i64 == 0;
            f(p as u64, e, self.chi[p], divides);
        }
    }

    /// `φ_K(aO_K)` for nonzero `a`.
    pub fn phi(&self, a: &AlgebraicInt) -> u64 {
        debug_assert!(a.field.is_same(self.field));
        assert!(!a.is_zero(), "Euler function of the zero ideal");
        let n = a.norm();
        if n > self.bound() {
            return euler_phi(&Ideal::new(a).expect("nonzero"));
        }
        let mut phi = n;
        self.for_each_prime(a, |p, _, chi, divides| match chi {
            -1 => phi = phi / (p * p) * (p * p - 1),
            0 => phi = phi / p * (p - 1),
            _ => {
                phi = phi / p * (p - 1);
                if divides {
                    phi = phi / p * (p - 1);
                }
            }
        });
        phi
    }

    /// `μ_K(aO_K)` for nonzero `a`.
    pub fn mu(&self, a: &AlgebraicInt) -> i8 {
        assert!(!a.is_zero(), "Moebius function of the zero ideal");
        if a.norm() > self.bound() {
            return moebius(&Ideal::new(a).expect("nonzero"));
        }
        let mut mu = 1i8;
        self.for_each_prime(a, |_, e, chi, divides| {
            mu *= match (chi, e) {
                (-1, 2) | (0, 1) | (1, 1) => -1,
                (1, 2) if divides => 1,
                _ => 0,
            };
        });
        mu
    }
}
