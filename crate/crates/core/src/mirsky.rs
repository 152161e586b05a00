//! The shifted-correlation constant `c_{m,k}`: its defining double series,
//! its Euler product, the closed form at `m = O_K`, the auxiliary maps
//! `ψ_b`, `χ_b`, `χ*_b`, `C*`, and the tail sum `Z_{m,h}(x)`.
//!
//! Throughout, `h = kO_K` may be the zero ideal, which every ideal divides.
//!
//! Euler products are evaluated against the reference
//! `ζ_K(2)^{−2} ζ_K(3)^{[h=0]}`: for primes not dividing `m` or `h` the
//! local factor over `(1 − N^{−2})² (1 − N^{−3})^{−[h=0]}` is
//! `1 + O(N^{−4})`, so a product over `N(p) ≤ P` carries a relative tail
//! below `exp(0.69/P³) − 1`.

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::element::AlgebraicInt;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{ideals_up_to, moebius, prime_ideals_up_to, Ideal};
use crate::ring::PrimeElement;
use crate::zeta::{dedekind_zeta, ideal_sum_tail_bound};

/// Series cutoff used when a tolerance would demand more.
pub const DEFAULT_SERIES_CUTOFF: u64 = 10_000;
const MAX_PRODUCT_CUTOFF: u64 = 10_000_000;
const ZETA_TOL: f64 = 1e-13;

/// The ideal `h = kO_K`, possibly zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShiftIdeal {
    Zero(&'static Field),
    Nonzero(Ideal),
}

impl ShiftIdeal {
    pub fn new(k: &AlgebraicInt) -> ShiftIdeal {
        if k.is_zero() {
            ShiftIdeal::Zero(k.field)
        } else {
            ShiftIdeal::Nonzero(Ideal::new(k).expect("nonzero"))
        }
    }

    pub fn field(&self) -> &'static Field {
        match self {
            ShiftIdeal::Zero(f) => f,
            ShiftIdeal::Nonzero(h) => h.field(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ShiftIdeal::Zero(_))
    }

    /// `i | h`.
    pub fn divisible_by(&self, i: &Ideal) -> bool {
        match self {
            ShiftIdeal::Zero(_) => true,
            ShiftIdeal::Nonzero(h) => i.divides(h),
        }
    }

    /// Exponent of `p` in `h`; `u32::MAX` stands for the zero ideal.
    pub fn exponent_of(&self, p: &PrimeElement) -> u32 {
        match self {
            ShiftIdeal::Zero(_) => u32::MAX,
            ShiftIdeal::Nonzero(h) => h.exponent_of(p),
        }
    }

    pub fn times(&self, i: &Ideal) -> ShiftIdeal {
        match self {
            ShiftIdeal::Zero(f) => ShiftIdeal::Zero(f),
            ShiftIdeal::Nonzero(h) => ShiftIdeal::Nonzero(h.mul(i)),
        }
    }

    fn primes(&self) -> Vec<PrimeElement> {
        match self {
            ShiftIdeal::Zero(_) => Vec::new(),
            ShiftIdeal::Nonzero(h) => h.factors().iter().map(|(p, _)| *p).collect(),
        }
    }
}

/// `ψ_b(c) = (c, (m/(b, m))·(b, c))`.
pub fn psi_b(c: &Ideal, b: &Ideal, m: &Ideal) -> Ideal {
    let cofactor = m.quotient(&b.gcd(m)).expect("(b, m) divides m");
    c.gcd(&cofactor.mul(&b.gcd(c)))
}

/// `χ_b(c) = 1` iff `(c, b) | h`.
pub fn chi_b(c: &Ideal, b: &Ideal, h: &ShiftIdeal) -> bool {
    h.divisible_by(&c.gcd(b))
}

/// `χ*_b(c) = 1` iff `ψ_b(c) | (b/(b, m))·h`.
pub fn chi_b_star(c: &Ideal, b: &Ideal, m: &Ideal, h: &ShiftIdeal) -> bool {
    let target = h.times(&b.quotient(&b.gcd(m)).expect("(b, m) divides b"));
    target.divisible_by(&psi_b(c, b, m))
}

fn norm_p_gcd_m(p: &PrimeElement, m: &Ideal) -> i128 {
    if m.exponent_of(p) > 0 {
        p.norm as i128
    } else {
        1
    }
}

// (p, m) | h
fn gcd_p_m_divides_h(p: &PrimeElement, m: &Ideal, h: &ShiftIdeal) -> bool {
    m.exponent_of(p) == 0 || h.exponent_of(p) > 0
}

/// `κ_{m,h}(p)`.
pub fn kappa(p: &PrimeElement, m: &Ideal, h: &ShiftIdeal) -> Ratio<i128> {
    let n = p.norm as i128;
    if gcd_p_m_divides_h(p, m, h) {
        Ratio::new(n * n, n * n - norm_p_gcd_m(p, m))
    } else {
        Ratio::from_integer(1)
    }
}

/// `κ'_h(p)`.
pub fn kappa_prime(p: &PrimeElement, h: &ShiftIdeal) -> Ratio<i128> {
    if h.exponent_of(p) > 0 {
        Ratio::new(p.norm as i128 - 1, p.norm as i128)
    } else {
        Ratio::from_integer(1)
    }
}

/// `w_p = κ(p) κ'(p) N((p, m)) / N(p)²`.
pub fn w_p(p: &PrimeElement, m: &Ideal, h: &ShiftIdeal) -> Ratio<i128> {
    let n = p.norm as i128;
    kappa(p, m, h) * kappa_prime(p, h) * Ratio::new(norm_p_gcd_m(p, m), n * n)
}

/// Local factor of the Euler product at `p`:
/// `[(p, m) | h] (1 − N((p, m))/N(p)²) · (1 − w_p)`.
pub fn euler_factor(p: &PrimeElement, m: &Ideal, h: &ShiftIdeal) -> Ratio<i128> {
    let one = Ratio::from_integer(1);
    let n = p.norm as i128;
    let gamma = if gcd_p_m_divides_h(p, m, h) {
        one - Ratio::new(norm_p_gcd_m(p, m), n * n)
    } else {
        one
    };
    gamma * (one - w_p(p, m, h))
}

fn ratio_to_f64(r: &Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Neumaier-compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    c: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.c += (self.sum - t) + x;
        } else {
            self.c += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.c
    }
}

fn product_tail_log(p: u64) -> f64 {
    let p = p as f64;
    1.03 * 2.0 / (3.0 * p * p * p) / ((1.0 - 1.0 / (p * p)) * (1.0 - 1.0 / (p * p)))
}

struct ZetaRef {
    z2: f64,
    z3: f64,
}

impl ZetaRef {
    fn new(field: &Field) -> ZetaRef {
        ZetaRef {
            z2: dedekind_zeta(field, 2.0, ZETA_TOL).expect("s = 2"),
            z3: dedekind_zeta(field, 3.0, ZETA_TOL).expect("s = 3"),
        }
    }

    fn reference(&self, h_zero: bool) -> f64 {
        let r = 1.0 / (self.z2 * self.z2);
        if h_zero {
            r * self.z3
        } else {
            r
        }
    }
}

// log of the reference local factor (1 − N^{−2})² (1 − N^{−3})^{−[h=0]}
fn log_reference_factor(n: u64, h_zero: bool) -> f64 {
    let n = n as f64;
    let mut l = 2.0 * (-1.0 / (n * n)).ln_1p();
    if h_zero {
        l -= (-1.0 / (n * n * n)).ln_1p();
    }
    l
}

fn ln_of_factor(f: &Ratio<i128>) -> f64 {
    let one = Ratio::from_integer(1);
    (-ratio_to_f64(&(one - *f))).ln_1p()
}

/// Value of an accelerated product and its certified absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProductValue {
    pub value: f64,
    pub tail_bound: f64,
    pub cutoff: u64,
}

fn special_norm(m: &Ideal, h: &ShiftIdeal) -> u64 {
    m.factors()
        .iter()
        .map(|(p, _)| p.norm)
        .chain(h.primes().iter().map(|p| p.norm))
        .max()
        .unwrap_or(1)
}

fn accelerated_product(
    field: &'static Field,
    cutoff: u64,
    h_zero: bool,
    zr: &ZetaRef,
    prefactor: f64,
    local: impl Fn(&PrimeElement) -> Ratio<i128>,
) -> ProductValue {
    let primes = prime_ideals_up_to(field, cutoff);
    let mut log = CompensatedSum::default();
    for p in &primes {
        log.add(ln_of_factor(&local(p)) - log_reference_factor(p.norm, h_zero));
    }
    let value = prefactor * zr.reference(h_zero) * log.value().exp();
    let rel = product_tail_log(cutoff).exp_m1() + 8.0 * ZETA_TOL + primes.len() as f64 * 4e-16;
    ProductValue {
        value,
        tail_bound: value.abs() * rel,
        cutoff,
    }
}

fn product_cutoff_for(m: &Ideal, h: &ShiftIdeal, tolerance: f64) -> u64 {
    let mut p = 100u64;
    while p < MAX_PRODUCT_CUTOFF && product_tail_log(p) > tolerance / 2.0 {
        p *= 2;
    }
    p.max(special_norm(m, h))
}

/// Euler product for `c_{m,k}` over prime ideals of norm `≤ cutoff`
/// (raised to cover every prime dividing `m` or `h`).
pub fn mirsky_product(m: &Ideal, h: &ShiftIdeal, cutoff: u64) -> ProductValue {
    let field = m.field();
    let cutoff = cutoff.max(special_norm(m, h)).max(2);
    let zr = ZetaRef::new(field);
    accelerated_product(
        field,
        cutoff,
        h.is_zero(),
        &zr,
        1.0 / m.norm() as f64,
        |p| euler_factor(p, m, h),
    )
}

/// The closed form `Π_p (1 − 2/N(p)²) Π_{p|h} (1 + 1/(N(p)(N(p)² − 2)))` valid for `m = O_K`.
pub fn closed_form_unit_modulus(h: &ShiftIdeal, cutoff: u64) -> ProductValue {
    let field = h.field();
    let m = Ideal::unit(field);
    let cutoff = cutoff.max(special_norm(&m, h)).max(2);
    let zr = ZetaRef::new(field);
    accelerated_product(field, cutoff, h.is_zero(), &zr, 1.0, |p| {
        let n = p.norm as i128;
        let base = Ratio::new(n * n - 2, n * n);
        if h.exponent_of(p) > 0 {
            base * (Ratio::from_integer(1) + Ratio::new(1, n * (n * n - 2)))
        } else {
            base
        }
    })
}

/// Ideals of bounded norm stored as prime-index lists, for local
/// (prime-by-prime) evaluation of divisibility conditions.
pub struct IdealCatalogue {
    field: &'static Field,
    primes: Vec<PrimeElement>,
    start: Vec<usize>,
    idx: Vec<u32>,
    exp: Vec<u32>,
    norm: Vec<u64>,
    mu: Vec<i8>,
}

impl IdealCatalogue {
    pub fn new(field: &'static Field, bound: u64, squarefree_only: bool) -> IdealCatalogue {
        let primes = prime_ideals_up_to(field, bound);
        let mut cat = IdealCatalogue {
            field,
            primes,
            start: vec![0],
            idx: Vec::new(),
            exp: Vec::new(),
            norm: Vec::new(),
            mu: Vec::new(),
        };
        for ideal in ideals_up_to(field, bound) {
            let mu = moebius(&ideal);
            if squarefree_only && mu == 0 {
                continue;
            }
            for (p, e) in ideal.factors() {
                cat.idx.push(
                    cat.index_of(p)
                        .expect("catalogue contains all small primes") as u32,
                );
                cat.exp.push(*e);
            }
            cat.start.push(cat.idx.len());
            cat.norm.push(ideal.norm());
            cat.mu.push(mu);
        }
        cat
    }

    pub fn len(&self) -> usize {
        self.norm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.norm.is_empty()
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    fn index_of(&self, p: &PrimeElement) -> Option<usize> {
        self.primes.binary_search(p).ok()
    }

    fn entry(&self, i: usize) -> (&[u32], &[u32]) {
        let (a, b) = (self.start[i], self.start[i + 1]);
        (&self.idx[a..b], &self.exp[a..b])
    }

    /// Exponents of `h` at every catalogue prime (`u32::MAX` for `h = 0`).
    fn local_shift(&self, h: &ShiftIdeal) -> Vec<u32> {
        self.primes.iter().map(|p| h.exponent_of(p)).collect()
    }

    fn local_ideal(&self, i: &Ideal) -> Vec<u32> {
        self.primes.iter().map(|p| i.exponent_of(p)).collect()
    }

    // Walk the union of the prime supports of entries i and j.
    fn merge(&self, i: usize, j: usize, mut f: impl FnMut(usize, u32, u32) -> bool) -> bool {
        let (pi, ei) = self.entry(i);
        let (pj, ej) = self.entry(j);
        let (mut a, mut b) = (0, 0);
        while a < pi.len() || b < pj.len() {
            let (q, x, y) = match (pi.get(a), pj.get(b)) {
                (Some(&qa), Some(&qb)) if qa == qb => {
                    a += 1;
                    b += 1;
                    (qa, ei[a - 1], ej[b - 1])
                }
                (Some(&qa), Some(&qb)) if qa < qb => {
                    a += 1;
                    (qa, ei[a - 1], 0)
                }
                (Some(&qa), None) => {
                    a += 1;
                    (qa, ei[a - 1], 0)
                }
                (_, Some(&qb)) => {
                    b += 1;
                    (qb, 0, ej[b - 1])
                }
                (None, None) => unreachable!(),
            };
            if !f(q as usize, x, y) {
                return false;
            }
        }
        true
    }

    /// `N((c(b, m), m(b, c)))` when `(b, c) | h` and `(c(b, m), m(b, c)) | hb`,
    /// for catalogue entries `b = i`, `c = j`.
    fn pair_gcd_norm(&self, i: usize, j: usize, em: &[u32], eh: &[u32]) -> Option<u64> {
        let mut ng = 1u64;
        let ok = self.merge(i, j, |q, eb, ec| {
            let (m, h) = (em[q], eh[q]);
            if eb.min(ec) > h {
                return false;
            }
            let v = (ec + eb.min(m)).min(m + eb.min(ec));
            if v > h.saturating_add(eb) {
                return false;
            }
            ng *= self.primes[q].norm.pow(v);
            true
        });
        ok.then_some(ng)
    }
}

fn pair_sum(
    cat: &IdealCatalogue,
    m: &Ideal,
    h: &ShiftIdeal,
    rows: impl Fn(usize) -> bool + Sync,
    signed: bool,
) -> f64 {
    let em = cat.local_ideal(m);
    let eh = cat.local_shift(h);
    let nm = m.norm() as f64;
    let row_sums: Vec<f64> = (0..cat.len())
        .into_par_iter()
        .map(|i| {
            if !rows(i) {
                return 0.0;
            }
            let nb = cat.norm[i] as f64;
            let mut acc = CompensatedSum::default();
            for j in 0..cat.len() {
                if let Some(ng) = cat.pair_gcd_norm(i, j, &em, &eh) {
                    let nc = cat.norm[j] as f64;
                    let sign = if signed {
                        (cat.mu[i] * cat.mu[j]) as f64
                    } else {
                        1.0
                    };
                    acc.add(sign * ng as f64 / (nb * nb * nc * nc * nm));
                }
            }
            acc.value()
        })
        .collect();
    let mut total = CompensatedSum::default();
    for r in row_sums {
        total.add(r);
    }
    total.value()
}

/// `ζ_K(2) ζ_K(5/2) ζ_K(3/2)`, the constant of the tail bound for `Z_{m,h}`.
pub fn tail_constant(field: &Field) -> f64 {
    [2.0, 2.5, 1.5]
        .iter()
        .map(|&s| dedekind_zeta(field, s, ZETA_TOL).expect("s > 1"))
        .product()
}

/// A truncated series value with its certified tail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    pub tail_bound: f64,
    pub cutoff: u64,
}

/// The double series for `c_{m,k}` over squarefree `b, c` of norm `≤ cutoff`.
pub fn mirsky_series(m: &Ideal, h: &ShiftIdeal, cutoff: u64) -> SeriesValue {
    let cat = IdealCatalogue::new(m.field(), cutoff, true);
    mirsky_series_in(&cat, m, h)
}

/// As [`mirsky_series`], reusing a squarefree catalogue.
pub fn mirsky_series_in(cat: &IdealCatalogue, m: &Ideal, h: &ShiftIdeal) -> SeriesValue {
    let cutoff = cat.norm.last().copied().unwrap_or(1).max(1);
    let value = pair_sum(cat, m, h, |_| true, true);
    let tail_bound = 2.0 * tail_constant(cat.field) / (cutoff as f64).sqrt();
    SeriesValue {
        value,
        tail_bound,
        cutoff,
    }
}

/// `Z_{m,h}(x)`: the sum of the absolute values of the series terms with
/// `N(b) ≥ x`, over all (not only squarefree) `b, c` of norm `≤ inner_cutoff`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TailSum {
    pub x: f64,
    pub value: f64,
    pub bound: f64,
    pub inner_cutoff: u64,
}

pub fn tail_sum(m: &Ideal, h: &ShiftIdeal, x: f64, inner_cutoff: u64) -> Result<TailSum> {
    let cat = IdealCatalogue::new(m.field(), inner_cutoff, false);
    tail_sum_in(&cat, m, h, x, inner_cutoff)
}

/// As [`tail_sum`], reusing a full catalogue built with the same cutoff.
pub fn tail_sum_in(
    cat: &IdealCatalogue,
    m: &Ideal,
    h: &ShiftIdeal,
    x: f64,
    inner_cutoff: u64,
) -> Result<TailSum> {
    if !(x >= 1.0) {
        return Err(Error::Domain(format!("tail sum needs x >= 1, got {x}")));
    }
    let value = pair_sum(cat, m, h, |i| cat.norm[i] as f64 >= x, false);
    Ok(TailSum {
        x,
        value,
        bound: tail_constant(cat.field) / x.sqrt(),
        inner_cutoff,
    })
}

/// Series or Euler-product evaluation of `C*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CStarMode {
    Series { cutoff: u64 },
    EulerProduct,
}

/// `C*(b) = Σ_c μ(c) χ_b(c) χ*_b(c) N(ψ_b(c)) / N(c)²`, with a tail bound.
pub fn c_star(b: &Ideal, m: &Ideal, h: &ShiftIdeal, mode: CStarMode) -> (f64, f64) {
    let field = b.field();
    match mode {
        CStarMode::Series { cutoff } => {
            let cat = IdealCatalogue::new(field, cutoff, true);
            let eb = cat.local_ideal(b);
            let em = cat.local_ideal(m);
            let eh = cat.local_shift(h);
            let mut acc = CompensatedSum::default();
            for j in 0..cat.len() {
                let (ps, es) = cat.entry(j);
                let mut npsi = 1u64;
                let mut ok = true;
                for (&q, &ec) in ps.iter().zip(es) {
                    let q = q as usize;
                    let (b_, m_, h_) = (eb[q], em[q], eh[q]);
                    let v = ec.min(m_ - b_.min(m_) + b_.min(ec));
                    if ec.min(b_) > h_ || v > (b_ - b_.min(m_)).saturating_add(h_) {
                        ok = false;
                        break;
                    }
                    npsi *= cat.primes[q].norm.pow(v);
                }
                if ok {
                    let nc = cat.norm[j] as f64;
                    acc.add(cat.mu[j] as f64 * npsi as f64 / (nc * nc));
                }
            }
            let tail =
                (m.norm() * b.norm()) as f64 * ideal_sum_tail_bound(2.0, cutoff.max(2) as f64);
            (acc.value(), tail)
        }
        CStarMode::EulerProduct => {
            // primes not dividing bm contribute exactly 1 − 1/N(p)², i.e. 1/ζ_K(2)
            let z2 = dedekind_zeta(field, 2.0, ZETA_TOL).expect("s = 2");
            let one = Ratio::from_integer(1);
            let special = b.mul(m);
            let mut value = 1.0 / z2;
            for (p, _) in special.factors() {
                let n = p.norm as i128;
                let pi = Ideal::from_prime(p);
                let local = if chi_b(&pi, b, h) && chi_b_star(&pi, b, m, h) {
                    one - Ratio::new(psi_b(&pi, b, m).norm() as i128, n * n)
                } else {
                    one
                };
                value *= ratio_to_f64(&(local / (one - Ratio::new(1, n * n))));
            }
            (value, value.abs() * 4.0 * ZETA_TOL)
        }
    }
}

/// Which evaluations [`mirsky_constant_with`] performs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstantMode {
    Series,
    Product,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantOptions {
    pub tolerance: f64,
    pub mode: ConstantMode,
    /// Norm bound for `b, c`; defaults to the smallest cutoff meeting the
    /// tolerance, capped at [`DEFAULT_SERIES_CUTOFF`].
    pub series_cutoff: Option<u64>,
    /// Prime norm bound; defaults to the smallest cutoff meeting the tolerance.
    pub product_cutoff: Option<u64>,
}

impl ConstantOptions {
    pub fn new(tolerance: f64) -> ConstantOptions {
        ConstantOptions {
            tolerance,
            mode: ConstantMode::Both,
            series_cutoff: None,
            product_cutoff: None,
        }
    }
}

/// Both evaluations of `c_{m,k}` with their cutoffs and certified tails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantReport {
    pub value_series: Option<f64>,
    pub value_product: Option<f64>,
    pub cutoff_series: Option<u64>,
    pub cutoff_product: Option<u64>,
    pub tail_bound_series: Option<f64>,
    pub tail_bound_product: Option<f64>,
    /// Closed form at `m = O_K`, evaluated independently of the general product.
    pub value_closed_form: Option<f64>,
}

impl ConstantReport {
    /// Best available value (the product when computed).
    pub fn value(&self) -> f64 {
        self.value_product
            .or(self.value_series)
            .expect("at least one evaluation")
    }

    /// `|series − product| ≤ tail_series + tail_product`.
    pub fn evaluations_agree(&self) -> Option<bool> {
        Some(
            (self.value_series? - self.value_product?).abs()
                <= self.tail_bound_series? + self.tail_bound_product?,
        )
    }
}

pub fn mirsky_constant(m: &Ideal, k: &AlgebraicInt, tolerance: f64) -> Result<ConstantReport> {
    mirsky_constant_with(m, k, &ConstantOptions::new(tolerance))
}

pub fn mirsky_constant_with(
    m: &Ideal,
    k: &AlgebraicInt,
    opts: &ConstantOptions,
) -> Result<ConstantReport> {
    if !m.field().is_same(k.field) {
        return Err(Error::FieldMismatch(
            m.field().discriminant,
            k.field.discriminant,
        ));
    }
    if !(opts.tolerance > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {}",
            opts.tolerance
        )));
    }
    let h = ShiftIdeal::new(k);
    let mut report = ConstantReport {
        value_series: None,
        value_product: None,
        cutoff_series: None,
        cutoff_product: None,
        tail_bound_series: None,
        tail_bound_product: None,
        value_closed_form: None,
    };
    if opts.mode != ConstantMode::Series {
        let cutoff = opts
            .product_cutoff
            .unwrap_or_else(|| product_cutoff_for(m, &h, opts.tolerance));
        let p = mirsky_product(m, &h, cutoff);
        report.value_product = Some(p.value);
        report.cutoff_product = Some(p.cutoff);
        report.tail_bound_product = Some(p.tail_bound);
        if m.is_unit() {
            report.value_closed_form = Some(closed_form_unit_modulus(&h, p.cutoff).value);
        }
    }
    if opts.mode != ConstantMode::Product {
        let cutoff = opts.series_cutoff.unwrap_or_else(|| {
            let needed = (2.0 * tail_constant(m.field()) / opts.tolerance).powi(2);
            if needed < DEFAULT_SERIES_CUTOFF as f64 {
                needed.ceil() as u64
            } else {
                DEFAULT_SERIES_CUTOFF
            }
        });
        let s = mirsky_series(m, &h, cutoff);
        report.value_series = Some(s.value);
        report.cutoff_series = Some(s.cutoff);
        report.tail_bound_series = Some(s.tail_bound);
    }
    Ok(report)
}

/// Lower bounds for `c'_m = inf_k c_{m,k}`: the minimum over a finite sample
/// of shifts, and the shift-independent bound
/// `N(m)^{−1} Π_p (1 − N((p, m))/N(p)²) Π_{N(p) ≥ 3} (1 − 2N((p, m))/N(p)²) · 2^{−#{p : N(p) = 2}}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CPrimeBounds {
    pub sampled_min: f64,
    pub analytic_lower: f64,
}

pub fn c_prime_bounds(m: &Ideal, sample: &[AlgebraicInt], tolerance: f64) -> Result<CPrimeBounds> {
    let mut opts = ConstantOptions::new(tolerance);
    opts.mode = ConstantMode::Product;
    let mut sampled_min = f64::INFINITY;
    for k in sample {
        sampled_min = sampled_min.min(mirsky_constant_with(m, k, &opts)?.value());
    }
    let field = m.field();
    let zr = ZetaRef::new(field);
    let cutoff = product_cutoff_for(m, &ShiftIdeal::Nonzero(Ideal::unit(field)), tolerance);
    let one = Ratio::from_integer(1);
    // reference ζ_K(2)^{-3}: each generic factor is (1 − q)(1 − 2q)
    let primes = prime_ideals_up_to(field, cutoff);
    let mut log = CompensatedSum::default();
    for p in &primes {
        let n = p.norm as i128;
        let g = norm_p_gcd_m(p, m);
        let gamma = one - Ratio::new(g, n * n);
        let second = if p.norm == 2 {
            Ratio::new(1, 2)
        } else {
            one - Ratio::new(2 * g, n * n)
        };
        log.add(ln_of_factor(&(gamma * second)) - 1.5 * log_reference_factor(p.norm, false));
    }
    let analytic_lower = log.value().exp() / (zr.z2 * zr.z2 * zr.z2) / m.norm() as f64
        * (1.0 - product_tail_log(cutoff).exp_m1());
    Ok(CPrimeBounds {
        sampled_min,
        analytic_lower,
    })
}
