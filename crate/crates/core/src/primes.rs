//! Rational-integer helpers: prime sieves, trial-division factoring,
//! modular square roots and the Kronecker symbol.

use std::sync::OnceLock;

const TRIAL_PRIME_BOUND: usize = 1_000_000;

/// All primes `≤ n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_PRIME_BOUND as u64))
}

/// Factors `n ≥ 1` by trial division; returns `(p, e)` pairs with `p` increasing.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor 0");
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    for &p in trial_primes() {
        if p * p > n {
            break;
        }
        push(p, &mut n);
    }
    let mut d = TRIAL_PRIME_BOUND as u64 + 1;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        d += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let f = factor_u64(n);
    f.len() == 1 && f[0].1 == 1
}

pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

pub fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x.checked_mul(x).is_none_or(|sq| sq > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|sq| sq <= n) {
        x += 1;
    }
    x
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Jacobi symbol `(a/n)` for odd `n > 0`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(D/n)` for `n ≥ 1`.
pub fn kronecker_symbol(d: i64, mut n: u64) -> i32 {
    assert!(n > 0, "Kronecker symbol needs n >= 1");
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        match d.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => result = -result,
            _ => return 0,
        }
    }
    if n == 1 {
        return result;
    }
    result * jacobi(d, n)
}

/// Kronecker symbol `(D/p)` at a rational prime `p`.
pub fn kronecker(d: i64, p: u64) -> i32 {
    kronecker_symbol(d, p)
}

/// A square root of `a` modulo the odd prime `p`, if one exists.
pub fn sqrt_mod(a: i64, p: u64) -> Option<u64> {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    // Tonelli–Shanks
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_and_trial_division_agree() {
        let ps = primes_up_to(1000);
        assert_eq!(ps.len(), 168);
        for n in 1..2000u64 {
            let f = factor_u64(n);
            assert_eq!(f.iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
        }
        let big = 999_983u64 * 1_000_003;
        assert_eq!(factor_u64(big), vec![(999_983, 1), (1_000_003, 1)]);
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(-7, 2), 1);
        assert_eq!(kronecker(-8, 3), 1);
    }

    #[test]
    fn kronecker_matches_euler_criterion() {
        for d in [-3i64, -4, -7, -8, -11, -19, -43, -67, -163] {
            for &p in primes_up_to(500).iter().skip(1) {
                let a = d.rem_euclid(p as i64) as u64;
                let euler = if a == 0 {
                    0
                } else if pow_mod(a, (p - 1) / 2, p) == 1 {
                    1
                } else {
                    -1
                };
                assert_eq!(kronecker(d, p), euler, "D={d} p={p}");
            }
        }
    }

    #[test]
    fn sqrt_mod_roundtrip() {
        for &p in primes_up_to(2000).iter().skip(1) {
            for a in 0..p.min(60) {
                if let Some(r) = sqrt_mod(a as i64, p) {
                    assert_eq!(mul_mod(r, r, p), a % p);
                } else {
                    assert_eq!(jacobi(a as i64, p), -1);
                }
            }
        }
    }

    #[test]
    fn integer_square_roots() {
        for n in 0..10_000u64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert_eq!(isqrt(u64::MAX), 4_294_967_295);
        assert_eq!(isqrt_u128(10u128.pow(30)), 10u128.pow(15));
    }
}
