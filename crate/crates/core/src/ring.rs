//! Arithmetic in `O_K`: units, canonical associates, prime elements,
//! factorization, gcd and two-modulus congruences.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::element::AlgebraicInt;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::primes::{factor_u64, is_prime, isqrt_u128, kronecker, sqrt_mod};

/// Norm of an element (value of the field's norm form).
pub fn norm(x: &AlgebraicInt) -> u64 {
    x.norm()
}

/// All `(u, v)` with `u² + Buv + Cv² = n`, found by scanning
/// `|v| ≤ √(4n/|D_K|)` and solving the quadratic in `u`.
pub fn norm_form_representations(field: &'static Field, n: u64) -> Vec<AlgebraicInt> {
    let d = field.abs_disc() as u128;
    let four_n = 4 * n as u128;
    let vmax = isqrt_u128(four_n / d) as i64;
    let mut out = Vec::new();
    for v in -vmax..=vmax {
        let rest = four_n - d * (v as i128 * v as i128) as u128;
        let s = isqrt_u128(rest);
        if s * s != rest {
            continue;
        }
        // (2u + Bv)² = rest
        for w in [s as i64, -(s as i64)] {
            let num = w - field.trace * v;
            if num % 2 == 0 {
                let x = AlgebraicInt::new(field, num / 2, v);
                if !out.contains(&x) {
                    out.push(x);
                }
            }
        }
    }
    out
}

/// The `ω_K` units, listed as successive powers of a generator.
pub fn units(field: &'static Field) -> Vec<AlgebraicInt> {
    let all = norm_form_representations(field, 1);
    debug_assert_eq!(all.len(), field.unit_count as usize);
    // generator: the unit of smallest positive argument
    let generator = all
        .iter()
        .filter(|x| !x.is_one())
        .min_by(|a, b| {
            let arg = |x: &AlgebraicInt| {
                let (re, im) = x.to_complex();
                im.atan2(re).rem_euclid(std::f64::consts::TAU)
            };
            arg(a).partial_cmp(&arg(b)).unwrap_or(Ordering::Equal)
        })
        .copied()
        .expect("unit group has at least two elements");
    let mut out = Vec::with_capacity(all.len());
    let mut x = AlgebraicInt::one(field);
    for _ in 0..field.unit_count {
        out.push(x);
        x = x * generator;
    }
    out
}

/// True iff `x` is the distinguished associate of its ideal, i.e. its
/// argument lies in `[0, 2π/ω_K)`.
pub fn is_canonical(x: &AlgebraicInt) -> bool {
    if x.field.unit_count == 2 {
        x.v > 0 || (x.v == 0 && x.u > 0)
    } else {
        // the window is the cone spanned by 1 (closed side) and ω (open side)
        x.u > 0 && x.v >= 0
    }
}

/// Splits `x = unit · canonical`.
pub fn canonical_associate(x: &AlgebraicInt) -> Result<(AlgebraicInt, AlgebraicInt)> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    for unit in units(x.field) {
        let c = *x * unit.conj();
        if is_canonical(&c) {
            return Ok((unit, c));
        }
    }
    unreachable!("every nonzero element has a canonical associate")
}

pub(crate) fn canonical(x: &AlgebraicInt) -> AlgebraicInt {
    canonical_associate(x).expect("nonzero element").1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl Splitting {
    pub fn of(field: &Field, p: u64) -> Splitting {
        match kronecker(field.discriminant, p) {
            1 => Splitting::Split,
            -1 => Splitting::Inert,
            _ => Splitting::Ramified,
        }
    }
}

/// A prime element of `O_K`, stored as the canonical generator of its ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeElement {
    pub generator: AlgebraicInt,
    /// Rational prime below.
    pub p: u64,
    pub splitting: Splitting,
    /// `p` or `p²`.
    pub norm: u64,
}

impl PrimeElement {
    pub fn key(&self) -> (u64, i64, i64) {
        (self.norm, self.generator.u, self.generator.v)
    }
}

impl Ord for PrimeElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PrimeElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

type Vec2 = (i128, i128);

fn quad(field: &Field, a: Vec2) -> i128 {
    a.0 * a.0 + field.trace as i128 * a.0 * a.1 + field.omega_norm as i128 * a.1 * a.1
}

// Twice the bilinear form attached to the norm form.
fn bilinear2(field: &Field, a: Vec2, b: Vec2) -> i128 {
    2 * a.0 * b.0
        + field.trace as i128 * (a.0 * b.1 + a.1 * b.0)
        + 2 * field.omega_norm as i128 * a.1 * b.1
}

fn round_div(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    (2 * num + den).div_euclid(2 * den)
}

/// Lagrange–Gauss reduction of a rank-2 lattice for the norm form; the first
/// returned vector is a shortest nonzero vector.
fn lagrange_reduce(field: &Field, mut b1: Vec2, mut b2: Vec2) -> (Vec2, Vec2) {
    if quad(field, b1) > quad(field, b2) {
        std::mem::swap(&mut b1, &mut b2);
    }
    loop {
        let q = round_div(bilinear2(field, b1, b2), 2 * quad(field, b1));
        b2 = (b2.0 - q * b1.0, b2.1 - q * b1.1);
        if quad(field, b2) >= quad(field, b1) {
            return (b1, b2);
        }
        std::mem::swap(&mut b1, &mut b2);
    }
}

// Roots of x² − Bx + C modulo p.
fn omega_roots_mod(field: &Field, p: u64) -> Vec<u64> {
    if p == 2 {
        let (b, c) = (
            field.trace.rem_euclid(2) as u64,
            field.omega_norm.rem_euclid(2) as u64,
        );
        return (0..2u64)
            .filter(|&t| (t * t + b * t + c) % 2 == 0)
            .collect();
    }
    let s = match sqrt_mod(field.discriminant, p) {
        Some(s) => s,
        None => return Vec::new(),
    };
    let inv2 = p.div_ceil(2);
    let b = field.trace.rem_euclid(p as i64) as u64;
    let mut roots = vec![
        crate::primes::mul_mod((b + s) % p, inv2, p),
        crate::primes::mul_mod((b + p - s) % p, inv2, p),
    ];
    roots.dedup();
    roots
}

/// The prime elements above the rational prime `p`, sorted by `(norm, u, v)`.
pub fn primes_above(field: &'static Field, p: u64) -> Result<Vec<PrimeElement>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let splitting = Splitting::of(field, p);
    if splitting == Splitting::Inert {
        return Ok(vec![PrimeElement {
            generator: AlgebraicInt::from_int(field, p as i64),
            p,
            splitting,
            norm: p * p,
        }]);
    }
    let t = omega_roots_mod(field, p)[0] as i128;
    // the ideal (p, ω − t) is spanned over Z by p and ω − t
    let (short, _) = lagrange_reduce(field, (p as i128, 0), (-t, 1));
    let pi = AlgebraicInt::new(field, short.0 as i64, short.1 as i64);
    assert_eq!(
        pi.norm(),
        p,
        "reduced vector of a prime ideal must have norm p"
    );
    let first = PrimeElement {
        generator: canonical(&pi),
        p,
        splitting,
        norm: p,
    };
    let mut out = vec![first];
    if splitting == Splitting::Split {
        out.push(PrimeElement {
            generator: canonical(&pi.conj()),
            ..first
        });
    }
    out.sort();
    Ok(out)
}

/// `x = unit · Π generator^exponent` with canonical, pairwise non-associate
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: AlgebraicInt,
    pub factors: Vec<(PrimeElement, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> AlgebraicInt {
        self.factors
            .iter()
            .fold(self.unit, |acc, (pr, e)| acc * pr.generator.pow(*e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.unit)?;
        for (p, e) in &self.factors {
            if *e == 1 {
                write!(f, " * {p}")?;
            } else {
                write!(f, " * {p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors a nonzero element by factoring its norm over `Z` and peeling
/// off the prime elements above each rational prime.
pub fn factor(x: &AlgebraicInt) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rest = *x;
    let mut factors = Vec::new();
    for (p, _) in factor_u64(x.norm()) {
        for prime in primes_above(x.field, p)? {
            let mut e = 0;
            while let Some(q) = rest.checked_div(&prime.generator) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((prime, e));
            }
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(Factorization {
        unit: rest,
        factors,
    })
}

pub(crate) fn from_exponents(
    field: &'static Field,
    factors: &[(PrimeElement, u32)],
) -> AlgebraicInt {
    let prod = factors
        .iter()
        .fold(AlgebraicInt::one(field), |acc, (pr, e)| {
            acc * pr.generator.pow(*e)
        });
    canonical(&prod)
}

// Merge two sorted factor lists, combining exponents with `op`.
pub(crate) fn merge_exponents(
    a: &[(PrimeElement, u32)],
    b: &[(PrimeElement, u32)],
    op: impl Fn(u32, u32) -> u32,
) -> Vec<(PrimeElement, u32)> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    while i < a.len() || j < b.len() {
        let (prime, ea, eb) = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => match x.0.cmp(&y.0) {
                Ordering::Less => {
                    i += 1;
                    (x.0, x.1, 0)
                }
                Ordering::Greater => {
                    j += 1;
                    (y.0, 0, y.1)
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    (x.0, x.1, y.1)
                }
            },
            (Some(x), None) => {
                i += 1;
                (x.0, x.1, 0)
            }
            (None, Some(y)) => {
                j += 1;
                (y.0, 0, y.1)
            }
            (None, None) => unreachable!(),
        };
        let e = op(ea, eb);
        if e > 0 {
            out.push((prime, e));
        }
    }
    out
}

/// Canonical generator of `aO_K + bO_K`, computed from the factorizations.
pub fn gcd(a: &AlgebraicInt, b: &AlgebraicInt) -> Result<AlgebraicInt> {
    if !a.field.is_same(b.field) {
        return Err(Error::FieldMismatch(
            a.field.discriminant,
            b.field.discriminant,
        ));
    }
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::BothZero),
        (false, true) => Ok(canonical(a)),
        (true, false) => Ok(canonical(b)),
        (false, false) => {
            let fa = factor(a)?;
            let fb = factor(b)?;
            Ok(from_exponents(
                a.field,
                &merge_exponents(&fa.factors, &fb.factors, u32::min),
            ))
        }
    }
}

/// Canonical generator of `aO_K ∩ bO_K` for nonzero `a`, `b`.
pub fn lcm(a: &AlgebraicInt, b: &AlgebraicInt) -> Result<AlgebraicInt> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let fa = factor(a)?;
    let fb = factor(b)?;
    Ok(from_exponents(
        a.field,
        &merge_exponents(&fa.factors, &fb.factors, u32::max),
    ))
}

/// The coset `base + modulus·O_K` of solutions of a two-congruence system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceSolution {
    pub base: AlgebraicInt,
    pub modulus: AlgebraicInt,
}

impl CongruenceSolution {
    pub fn contains(&self, n: &AlgebraicInt) -> bool {
        self.modulus.divides(&(*n - self.base))
    }
}

/// Short representative of `x` modulo `m` (coordinatewise rounding of `x/m`).
pub fn reduce_mod(x: &AlgebraicInt, m: &AlgebraicInt) -> AlgebraicInt {
    let n = m.norm_i128();
    let num = *x * m.conj();
    let qu = round_div(num.u as i128, n) as i64;
    let qv = round_div(num.v as i128, n) as i64;
    *x - AlgebraicInt::new(x.field, qu, qv) * *m
}

struct BezoutRow {
    vec: (i64, i64),
    ca: AlgebraicInt,
    cb: AlgebraicInt,
}

impl BezoutRow {
    fn sub_multiple(&mut self, q: i64, other: &BezoutRow) {
        self.vec = (self.vec.0 - q * other.vec.0, self.vec.1 - q * other.vec.1);
        self.ca = self.ca - other.ca.scale(q);
        self.cb = self.cb - other.cb.scale(q);
    }
}

// Euclid on one coordinate across rows, leaving at most one row nonzero there.
fn euclid_column(rows: &mut [BezoutRow], coord: impl Fn(&(i64, i64)) -> i64) {
    loop {
        let mut nonzero: Vec<usize> = (0..rows.len())
            .filter(|&i| coord(&rows[i].vec) != 0)
            .collect();
        if nonzero.len() <= 1 {
            return;
        }
        nonzero.sort_by_key(|&i| coord(&rows[i].vec).abs());
        let pivot = nonzero[0];
        let pv = coord(&rows[pivot].vec);
        for &i in &nonzero[1..] {
            let q = coord(&rows[i].vec).div_euclid(pv);
            let (head, tail) = if i < pivot {
                let (h, t) = rows.split_at_mut(pivot);
                (&mut h[i], &t[0])
            } else {
                let (h, t) = rows.split_at_mut(i);
                (&mut t[0], &h[pivot])
            };
            head.sub_multiple(q, tail);
        }
    }
}

/// Finds `s, r` with `a·s + b·r = g`, where `g` generates `aO_K + bO_K`.
///
/// Works on the Z-lattice spanned by `a, aω, b, bω`, reducing it to a
/// triangular basis while tracking the coefficients.
pub fn bezout(
    a: &AlgebraicInt,
    b: &AlgebraicInt,
) -> Result<(AlgebraicInt, AlgebraicInt, AlgebraicInt)> {
    let field = a.field;
    let g = gcd(a, b)?;
    let zero = AlgebraicInt::zero(field);
    let one = AlgebraicInt::one(field);
    let w = AlgebraicInt::omega(field);
    let mk = |x: AlgebraicInt, ca: AlgebraicInt, cb: AlgebraicInt| BezoutRow {
        vec: (x.u, x.v),
        ca,
        cb,
    };
    let mut rows = vec![
        mk(*a, one, zero),
        mk(*a * w, w, zero),
        mk(*b, zero, one),
        mk(*b * w, zero, w),
    ];
    euclid_column(&mut rows, |v| v.1);
    let vpos = rows.iter().position(|r| r.vec.1 != 0);
    let (top, mut rest): (Option<BezoutRow>, Vec<BezoutRow>) = match vpos {
        Some(i) => {
            let t = rows.remove(i);
            (Some(t), rows)
        }
        None => (None, rows),
    };
    euclid_column(&mut rest, |v| v.0);
    let low = rest.into_iter().find(|r| r.vec.0 != 0);
    let (mut ca, mut cb) = (zero, zero);
    let mut target = (g.u, g.v);
    if let Some(t) = &top {
        if target.1 % t.vec.1 != 0 {
            return Err(Error::Domain("gcd not in lattice span".into()));
        }
        let k = target.1 / t.vec.1;
        target = (target.0 - k * t.vec.0, 0);
        ca = ca + t.ca.scale(k);
        cb = cb + t.cb.scale(k);
    }
    if target.0 != 0 {
        let l = low.ok_or_else(|| Error::Domain("degenerate lattice".into()))?;
        if target.0 % l.vec.0 != 0 {
            return Err(Error::Domain("gcd not in lattice span".into()));
        }
        let k = target.0 / l.vec.0;
        ca = ca + l.ca.scale(k);
        cb = cb + l.cb.scale(k);
    }
    debug_assert_eq!(*a * ca + *b * cb, g);
    Ok((g, ca, cb))
}

/// Solves `n ≡ α₀ (mod α)`, `n ≡ β₀ (mod β)`. `Ok(None)` when
/// `(α, β) ∤ α₀ − β₀`.
pub fn crt_solve(
    alpha0: &AlgebraicInt,
    alpha: &AlgebraicInt,
    beta0: &AlgebraicInt,
    beta: &AlgebraicInt,
) -> Result<Option<CongruenceSolution>> {
    if alpha.is_zero() || beta.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let (g, s, _) = bezout(alpha, beta)?;
    let delta = beta0.try_sub(alpha0)?;
    let Some(q) = delta.checked_div(&g) else {
        return Ok(None);
    };
    let modulus = lcm(alpha, beta)?;
    // α·s ≡ g (mod β), so α0 + α·s·(δ/g) hits both residues
    let step = reduce_mod(&(s * q), &(modulus.exact_div(alpha)?));
    let base = reduce_mod(&(*alpha0 + *alpha * step), &modulus);
    Ok(Some(CongruenceSolution { base, modulus }))
}

/// Lower-triangular Z-basis `{(a, 0), (b, c)}` of the lattice `mO_K`, with
/// `a, c > 0`, `0 ≤ b < a` and `a·c = N(m)`.
pub fn ideal_lattice_basis(m: &AlgebraicInt) -> ((i64, i64), (i64, i64)) {
    let zero = AlgebraicInt::zero(m.field);
    let mut rows = vec![
        BezoutRow {
            vec: (m.u, m.v),
            ca: zero,
            cb: zero,
        },
        BezoutRow {
            vec: (
                (*m * AlgebraicInt::omega(m.field)).u,
                (*m * AlgebraicInt::omega(m.field)).v,
            ),
            ca: zero,
            cb: zero,
        },
    ];
    euclid_column(&mut rows, |v| v.1);
    rows.sort_by_key(|r| r.vec.1 == 0);
    let (mut top, low) = (rows[0].vec, rows[1].vec);
    if top.1 < 0 {
        top = (-top.0, -top.1);
    }
    let a = low.0.abs();
    let b = top.0.rem_euclid(a);
    ((a, 0), (b, top.1))
}

/// Complete residue system of `O_K / mO_K`, `N(m)` elements.
pub fn residue_system(m: &AlgebraicInt) -> Vec<AlgebraicInt> {
    let ((a, _), (_, c)) = ideal_lattice_basis(m);
    let mut out = Vec::with_capacity((a * c) as usize);
    for j in 0..c {
        for i in 0..a {
            out.push(AlgebraicInt::new(m.field, i, j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{lookup_field, FIELDS};

    fn g(u: i64, v: i64) -> AlgebraicInt {
        AlgebraicInt::new(lookup_field(-4).unwrap(), u, v)
    }

    #[test]
    fn unit_examples() {
        let gauss = units(lookup_field(-4).unwrap());
        assert_eq!(gauss, vec![g(1, 0), g(0, 1), g(-1, 0), g(0, -1)]);
        let eis = lookup_field(-3).unwrap();
        let mut e: Vec<(i64, i64)> = units(eis).iter().map(|x| (x.u, x.v)).collect();
        e.sort();
        // ±1, ±ω, ±(ω − 1)
        assert_eq!(e, vec![(-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)]);
        let f7 = lookup_field(-7).unwrap();
        assert_eq!(
            units(f7),
            vec![AlgebraicInt::one(f7), -AlgebraicInt::one(f7)]
        );
        for f in &FIELDS {
            let us = units(f);
            assert_eq!(us.len(), f.unit_count as usize);
            for a in &us {
                assert_eq!(a.norm(), 1);
                for b in &us {
                    assert!(us.contains(&(*a * *b)));
                }
            }
        }
    }

    #[test]
    fn canonical_associate_examples() {
        assert_eq!(canonical_associate(&g(-3, 0)).unwrap(), (g(-1, 0), g(3, 0)));
        assert_eq!(canonical_associate(&g(0, 2)).unwrap(), (g(0, 1), g(2, 0)));
        assert_eq!(canonical_associate(&g(1, 1)).unwrap(), (g(1, 0), g(1, 1)));
        assert_eq!(canonical_associate(&g(0, 0)), Err(Error::ZeroInput));
    }

    #[test]
    fn canonical_window_is_a_bijection_on_associates() {
        for f in &FIELDS {
            let us = units(f);
            for u in -6..=6 {
                for v in -6..=6 {
                    let x = AlgebraicInt::new(f, u, v);
                    if x.is_zero() {
                        continue;
                    }
                    let n = us.iter().filter(|e| is_canonical(&(x * **e))).count();
                    assert_eq!(n, 1, "{x:?}");
                    let (e, c) = canonical_associate(&x).unwrap();
                    assert_eq!(e * c, x);
                    let (re, im) = c.to_complex();
                    let arg = im.atan2(re);
                    assert!(
                        arg >= -1e-12 && arg < std::f64::consts::TAU / f.unit_count as f64 - 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn primes_above_examples() {
        let f = lookup_field(-4).unwrap();
        let five = primes_above(f, 5).unwrap();
        assert_eq!(five.len(), 2);
        assert!(five
            .iter()
            .all(|p| p.norm == 5 && p.splitting == Splitting::Split));
        let gens: Vec<AlgebraicInt> = five.iter().map(|p| p.generator).collect();
        assert!(gens.contains(&canonical(&g(2, 1))) && gens.contains(&canonical(&g(2, -1))));

        let three = primes_above(f, 3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(
            (three[0].generator, three[0].norm, three[0].splitting),
            (g(3, 0), 9, Splitting::Inert)
        );

        let two = primes_above(f, 2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].splitting, Splitting::Ramified);
        assert_eq!(two[0].generator, g(1, 1));
        let sq = two[0].generator * two[0].generator;
        assert_eq!(canonical(&sq), g(2, 0));

        assert_eq!(primes_above(f, 15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn primes_above_agree_with_representation_search() {
        for f in &FIELDS {
            for p in crate::primes::primes_up_to(400) {
                let ps = primes_above(f, p).unwrap();
                let reps = norm_form_representations(f, p);
                match Splitting::of(f, p) {
                    Splitting::Inert => {
                        assert!(reps.is_empty());
                        assert_eq!(ps[0].norm, p * p);
                    }
                    Splitting::Ramified => {
                        assert_eq!(ps.len(), 1);
                        let sq = ps[0].generator * ps[0].generator;
                        assert_eq!(canonical(&sq), AlgebraicInt::from_int(f, p as i64));
                        assert_eq!(reps.len(), f.unit_count as usize);
                    }
                    Splitting::Split => {
                        assert_eq!(ps.len(), 2);
                        assert_ne!(ps[0].generator, ps[1].generator);
                        assert_eq!(canonical(&ps[0].generator.conj()), ps[1].generator);
                        assert_eq!(reps.len(), 2 * f.unit_count as usize);
                        for pr in &ps {
                            assert!(reps.contains(&pr.generator));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let two = factor(&g(2, 0)).unwrap();
        assert_eq!(two.unit, g(0, -1));
        assert_eq!(two.factors.len(), 1);
        assert_eq!((two.factors[0].0.generator, two.factors[0].1), (g(1, 1), 2));

        // canonical generators 2+i and 1+2i multiply to 5i
        let five = factor(&g(5, 0)).unwrap();
        assert_eq!(five.unit, g(0, -1));
        let gens: Vec<AlgebraicInt> = five.factors.iter().map(|f| f.0.generator).collect();
        assert_eq!(gens, vec![g(1, 2), g(2, 1)]);
        assert_eq!(five.factors.len(), 2);
        assert_eq!(five.expand(), g(5, 0));

        let i = factor(&g(0, 1)).unwrap();
        assert!(i.factors.is_empty());
        assert_eq!(i.unit, g(0, 1));

        assert_eq!(factor(&g(0, 0)), Err(Error::ZeroInput));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&g(-3, 0), &g(0, 0)).unwrap(), g(3, 0));
        assert_eq!(gcd(&g(1, 1), &g(2, 0)).unwrap(), g(1, 1));
        assert_eq!(gcd(&g(3, 0), &g(5, 0)).unwrap(), g(1, 0));
        assert_eq!(gcd(&g(0, 0), &g(0, 0)), Err(Error::BothZero));
        assert_eq!(lcm(&g(1, 1), &g(2, 0)).unwrap(), g(2, 0));
    }

    #[test]
    fn crt_examples() {
        let zero = g(0, 0);
        let sol = crt_solve(&zero, &g(3, 0), &zero, &g(2, 1))
            .unwrap()
            .unwrap();
        assert_eq!(sol.modulus, canonical(&g(6, 3)));
        assert!(sol.modulus.divides(&sol.base));

        assert_eq!(
            crt_solve(&g(1, 0), &g(1, 1), &zero, &g(2, 0)).unwrap(),
            None
        );

        // n ≡ 1 (mod 3), n ≡ 0 (mod 1+i): compare with a scan of residues mod 3(1+i)
        let sol = crt_solve(&g(1, 0), &g(3, 0), &zero, &g(1, 1))
            .unwrap()
            .unwrap();
        let modulus = g(3, 3);
        let scan: Vec<AlgebraicInt> = residue_system(&modulus)
            .into_iter()
            .filter(|n| g(3, 0).divides(&(*n - g(1, 0))) && g(1, 1).divides(n))
            .collect();
        assert_eq!(scan.len(), 1);
        assert!(sol.contains(&scan[0]));
        assert_eq!(canonical(&sol.modulus), canonical(&modulus));

        assert_eq!(
            crt_solve(&zero, &zero, &zero, &g(1, 0)),
            Err(Error::ZeroModulus)
        );
    }

    #[test]
    fn residue_system_has_norm_many_distinct_classes() {
        for f in &FIELDS {
            for (u, v) in [(2, 1), (3, 0), (1, 2), (4, -3), (5, 5)] {
                let m = AlgebraicInt::new(f, u, v);
                let res = residue_system(&m);
                assert_eq!(res.len() as u64, m.norm());
                for (i, a) in res.iter().enumerate() {
                    for b in &res[i + 1..] {
                        assert!(!m.divides(&(*a - *b)));
                    }
                }
            }
        }
    }
}
