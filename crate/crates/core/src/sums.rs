//! Exact evaluation of the left-hand sides: ideal counts, the congruence
//! Mertens sum, its sectorial version, the shifted correlation sum and its
//! normalized variant, with the predicted leading terms.
//!
//! Sums are accumulated in `i128` and escalate to `BigInt` on overflow.
//! Rows of the coordinate box are processed in parallel and merged in row
//! order, so results do not depend on the thread count.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::element::AlgebraicInt;
use crate::field::Field;
use crate::ideal::{c_m, Ideal};
use crate::mirsky::CompensatedSum;
use crate::primes::isqrt;
use crate::ring::is_canonical;
use crate::sector::{Sector, SectorRows};
use crate::sieve::NormSieve;
use crate::zeta::dedekind_zeta;

// Sieve tables are kept below this size; larger norms are factored directly.
const MAX_SIEVE: u64 = 50_000_000;

/// Exact integer accumulator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactInt {
    Small(i128),
    Big(BigInt),
}

impl Default for ExactInt {
    fn default() -> Self {
        ExactInt::Small(0)
    }
}

impl ExactInt {
    pub fn add_i128(&mut self, x: i128) {
        match self {
            ExactInt::Small(s) => match s.checked_add(x) {
                Some(t) => *s = t,
                None => *self = ExactInt::Big(BigInt::from(*s) + x),
            },
            ExactInt::Big(b) => *b += x,
        }
    }

    pub fn add(&mut self, other: &ExactInt) {
        match other {
            ExactInt::Small(x) => self.add_i128(*x),
            ExactInt::Big(x) => *self = ExactInt::Big(self.to_bigint() + x),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            ExactInt::Small(s) => BigInt::from(*s),
            ExactInt::Big(b) => b.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactInt::Small(s) => *s as f64,
            ExactInt::Big(b) => b.to_f64().unwrap_or(f64::INFINITY),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactInt::Small(s) => *s == 0,
            ExactInt::Big(b) => b.is_zero(),
        }
    }
}

impl From<i128> for ExactInt {
    fn from(x: i128) -> Self {
        ExactInt::Small(x)
    }
}

impl PartialEq<i128> for ExactInt {
    fn eq(&self, other: &i128) -> bool {
        match self {
            ExactInt::Small(s) => s == other,
            ExactInt::Big(b) => *b == BigInt::from(*other),
        }
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactInt::Small(s) => write!(f, "{s}"),
            ExactInt::Big(b) => write!(f, "{b}"),
        }
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn merge<I: IntoIterator<Item = ExactInt>>(parts: I) -> ExactInt {
    let mut total = ExactInt::default();
    for p in parts {
        total.add(&p);
    }
    total
}

// Row sums with i128 partials; a row that overflows falls back to ExactInt.
fn row_sum(terms: impl Iterator<Item = u128>) -> ExactInt {
    let mut acc = ExactInt::default();
    for t in terms {
        match i128::try_from(t) {
            Ok(t) => acc.add_i128(t),
            Err(_) => acc.add(&ExactInt::Big(BigInt::from(t))),
        }
    }
    acc
}

/// Nonzero elements of `mO_K` with `N(a) ≤ x`, row `v` of `a = g(u + vω)`.
struct NormBall {
    generator: AlgebraicInt,
    // 4·N(d) ≤ bound4 for d = a/g
    bound4: u64,
    vmax: i64,
}

impl NormBall {
    fn new(m: &Ideal, x: f64) -> NormBall {
        let g = *m.generator();
        let bound4 = if x < 1.0 {
            0
        } else {
            (4.0 * x / g.norm() as f64).floor() as u64
        };
        let vmax = isqrt(bound4 / g.field.abs_disc()) as i64;
        NormBall {
            generator: g,
            bound4,
            vmax,
        }
    }

    // t = 2u + Bv with t² ≤ bound4 − |D|v², as a range of u
    fn u_range(&self, v: i64) -> Option<(i64, i64)> {
        let f = self.generator.field;
        let rest = self.bound4 as i64 - f.abs_disc() as i64 * v * v;
        if rest < 0 {
            return None;
        }
        let s = isqrt(rest as u64) as i64;
        let bv = f.trace * v;
        Some(((-s - bv + 1).div_euclid(2), (s - bv).div_euclid(2)))
    }

    fn row(&self, v: i64) -> impl Iterator<Item = AlgebraicInt> + '_ {
        let field = self.generator.field;
        let (lo, hi) = self.u_range(v).unwrap_or((1, 0));
        (lo..=hi).filter_map(move |u| {
            let d = AlgebraicInt::new(field, u, v);
            (!d.is_zero()).then(|| self.generator * d)
        })
    }
}

/// Number of nonzero ideals of norm `≤ x`.
pub fn count_ideals(field: &'static Field, x: f64) -> u64 {
    let ball = NormBall::new(&Ideal::unit(field), x);
    let mut elements = 0u64;
    for v in -ball.vmax..=ball.vmax {
        if let Some((lo, hi)) = ball.u_range(v) {
            elements += (hi - lo + 1) as u64;
        }
    }
    // the box always contains 0
    (elements - 1) / field.unit_count as u64
}

/// `Σ N(a)` over nonzero ideals of norm `≤ y`.
pub fn sum_norms_ideals(field: &'static Field, y: f64) -> u128 {
    let ball = NormBall::new(&Ideal::unit(field), y);
    let total: u128 = (-ball.vmax..=ball.vmax)
        .map(|v| ball.row(v).map(|a| a.norm() as u128).sum::<u128>())
        .sum();
    total / field.unit_count as u128
}

fn sieve_for(field: &'static Field, max_norm: f64) -> NormSieve {
    NormSieve::new(field, (max_norm.ceil() as u64).min(MAX_SIEVE))
}

/// `Σ φ_K(a)` over ideals `a` with `N(a) ≤ x` and `m | a`.
pub fn mertens_sum(m: &Ideal, x: f64) -> ExactInt {
    let ball = NormBall::new(m, x);
    let sieve = sieve_for(m.field(), x);
    let rows: Vec<ExactInt> = (-ball.vmax..=ball.vmax)
        .into_par_iter()
        .map(|v| {
            row_sum(
                ball.row(v)
                    .filter(is_canonical)
                    .map(|a| sieve.phi(&a) as u128),
            )
        })
        .collect();
    merge(rows)
}

/// `ρ_K / (2 ζ_K(2) c_m)`, the coefficient of `x²` in the Mertens sum.
pub fn mertens_leading(m: &Ideal) -> f64 {
    let f = m.field();
    let cm = c_m(m);
    let cm = *cm.numer() as f64 / *cm.denom() as f64;
    f.rho().value() / (2.0 * zeta2(f) * cm)
}

fn zeta2(f: &Field) -> f64 {
    dedekind_zeta(f, 2.0, 1e-13).expect("s = 2")
}

/// `Σ φ_K(a)` over the elements `a ∈ mO_K ∩ C(z, θ, R)`.
pub fn sectorial_mertens_sum(m: &Ideal, sector: &Sector) -> ExactInt {
    let rows = SectorRows::new(m, sector);
    let sieve = sieve_for(m.field(), sector.radius * sector.radius);
    let parts: Vec<ExactInt> = rows
        .rows()
        .into_par_iter()
        .map(|v| row_sum(rows.row(v).iter().map(|a| sieve.phi(a) as u128)))
        .collect();
    merge(parts)
}

/// `θ / (2√|D| ζ_K(2) c_m)`, the coefficient of `R⁴` in the sectorial sum.
pub fn sectorial_leading(m: &Ideal, sector: &Sector) -> f64 {
    let f = m.field();
    let cm = c_m(m);
    let cm = *cm.numer() as f64 / *cm.denom() as f64;
    sector.theta.value() / (2.0 * f.sqrt_abs_disc() * zeta2(f) * cm)
}

/// The correlation sum together with whether `a = −k` lay in the sector
/// (that term is taken as 0).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MirskySum {
    pub value: ExactInt,
    pub zero_shift_term: bool,
}

fn shift_sieve(m: &Ideal, sector: &Sector, k: &AlgebraicInt) -> NormSieve {
    let r = sector.radius + k.abs();
    sieve_for(m.field(), r * r)
}

/// `Σ φ_K(a) φ_K(a + k)` over `a ∈ mO_K ∩ C(z, θ, R)`.
pub fn mirsky_sum(m: &Ideal, sector: &Sector, k: &AlgebraicInt) -> MirskySum {
    let rows = SectorRows::new(m, sector);
    let sieve = shift_sieve(m, sector, k);
    let parts: Vec<(ExactInt, bool)> = rows
        .rows()
        .into_par_iter()
        .map(|v| {
            let mut hit = false;
            let row = rows.row(v);
            let terms = row.iter().filter_map(|a| {
                let b = *a + *k;
                if b.is_zero() {
                    hit = true;
                    return None;
                }
                Some(sieve.phi(a) as u128 * sieve.phi(&b) as u128)
            });
            (row_sum(terms), hit)
        })
        .collect();
    let zero_shift_term = parts.iter().any(|p| p.1);
    MirskySum {
        value: merge(parts.into_iter().map(|p| p.0)),
        zero_shift_term,
    }
}

/// `θ c_{m,k} / (3√|D|)`, the coefficient of `R⁶` in the correlation sum.
pub fn mirsky_leading(field: &Field, sector: &Sector, c: f64) -> f64 {
    sector.theta.value() * c / (3.0 * field.sqrt_abs_disc())
}

/// `θ c_{m,k} / √|D|`, the coefficient of `R²` in the normalized sum.
pub fn normalized_mirsky_leading(field: &Field, sector: &Sector, c: f64) -> f64 {
    sector.theta.value() * c / field.sqrt_abs_disc()
}

/// An exact sum of rationals kept as numerators grouped by reduced denominator.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RationalSum {
    groups: BTreeMap<u128, ExactInt>,
}

impl RationalSum {
    pub fn add(&mut self, num: u128, den: u128) {
        let g = num.gcd(&den);
        let (num, den) = (num / g, den / g);
        let num = i128::try_from(num)
            .map(ExactInt::Small)
            .unwrap_or_else(|_| ExactInt::Big(num.into()));
        self.groups.entry(den).or_default().add(&num);
    }

    pub fn merge(&mut self, other: RationalSum) {
        for (den, num) in other.groups {
            self.groups.entry(den).or_default().add(&num);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.groups.values().all(ExactInt::is_zero)
    }

    /// Number of distinct denominators.
    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// Compensated sum of the groups, each converted exactly-rounded.
    pub fn to_f64(&self) -> f64 {
        let mut acc = CompensatedSum::default();
        for (den, num) in &self.groups {
            let (q, r) = num.to_bigint().div_rem(&BigInt::from(*den));
            acc.add(q.to_f64().unwrap_or(f64::INFINITY));
            acc.add(r.to_f64().unwrap_or(0.0) / *den as f64);
        }
        acc.value()
    }

    /// The sum as a single reduced fraction; combined pairwise, which keeps
    /// the cost manageable but still grows quickly with the number of groups.
    pub fn to_big_rational(&self) -> BigRational {
        let mut parts: Vec<BigRational> = self
            .groups
            .iter()
            .map(|(den, num)| BigRational::new(num.to_bigint(), BigInt::from(*den)))
            .collect();
        if parts.is_empty() {
            return BigRational::zero();
        }
        while parts.len() > 1 {
            parts = parts
                .chunks(2)
                .map(|c| {
                    if c.len() == 2 {
                        &c[0] + &c[1]
                    } else {
                        c[0].clone()
                    }
                })
                .collect();
        }
        parts.pop().expect("nonempty")
    }
}

impl Serialize for RationalSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.to_f64())
    }
}

/// `Σ (φ_K(a)/N(a)) (φ_K(a + k)/N(a + k))` over `a ∈ mO_K ∩ C(z, θ, R)`,
/// with the `a = −k` term taken as 0.
pub fn normalized_mirsky_sum(m: &Ideal, sector: &Sector, k: &AlgebraicInt) -> (RationalSum, bool) {
    let rows = SectorRows::new(m, sector);
    let sieve = shift_sieve(m, sector, k);
    let parts: Vec<(RationalSum, bool)> = rows
        .rows()
        .into_par_iter()
        .map(|v| {
            let mut acc = RationalSum::default();
            let mut hit = false;
            for a in rows.row(v) {
                let b = a + *k;
                if b.is_zero() {
                    hit = true;
                    continue;
                }
                let num = sieve.phi(&a) as u128 * sieve.phi(&b) as u128;
                acc.add(num, a.norm() as u128 * b.norm() as u128);
            }
            (acc, hit)
        })
        .collect();
    let mut total = RationalSum::default();
    let mut hit = false;
    for (p, h) in parts {
        total.merge(p);
        hit |= h;
    }
    (total, hit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{lookup_field, FIELDS};
    use crate::ideal::{euler_phi, ideals_up_to};
    use crate::mirsky::mirsky_constant;
    use crate::ring::units;
    use crate::sector::{enumerate, Anchor, Angle};
    use proptest::prelude::*;

    fn gauss() -> &'static Field {
        lookup_field(-4).unwrap()
    }

    fn g(u: i64, v: i64) -> AlgebraicInt {
        AlgebraicInt::new(gauss(), u, v)
    }

    fn naive_phi(a: &AlgebraicInt) -> u64 {
        euler_phi(&Ideal::new(a).unwrap())
    }

    fn sector(field: &'static Field, z: (i64, i64), theta: Angle, r: f64) -> Sector {
        Sector::new(Anchor::Exact(AlgebraicInt::new(field, z.0, z.1)), theta, r).unwrap()
    }

    #[test]
    fn ideal_counts() {
        let f = gauss();
        assert_eq!(count_ideals(f, 0.5), 0);
        assert_eq!(count_ideals(f, 2.0), 2);
        for field in &FIELDS {
            for x in [1.0, 7.0, 50.0, 333.0] {
                let expected = ideals_up_to(field, x as u64).len() as u64;
                assert_eq!(count_ideals(field, x), expected);
                let s: u128 = ideals_up_to(field, x as u64)
                    .iter()
                    .map(|i| i.norm() as u128)
                    .sum();
                assert_eq!(sum_norms_ideals(field, x), s);
            }
        }
        let big = count_ideals(f, 1e6) as f64 / (std::f64::consts::FRAC_PI_4 * 1e6);
        assert!((big - 1.0).abs() < 0.005);
    }

    #[test]
    fn norm_sums() {
        let f = gauss();
        assert_eq!(sum_norms_ideals(f, 0.9), 0);
        assert_eq!(sum_norms_ideals(f, 2.0), 3);
        let y: f64 = 1e5;
        let r = sum_norms_ideals(f, y) as f64 / (std::f64::consts::FRAC_PI_4 / 2.0 * y * y);
        assert!((r - 1.0).abs() < 0.01);
    }

    #[test]
    fn mertens_examples() {
        let f = gauss();
        let unit = Ideal::unit(f);
        assert_eq!(mertens_sum(&Ideal::new(&g(3, 0)).unwrap(), 8.0), 0);
        assert_eq!(mertens_sum(&unit, 2.0), 2);
        let lead = mertens_leading(&unit);
        assert!((lead - 0.26063469649456459764).abs() < 1e-12);
        let pi = Ideal::new(&g(1, 1)).unwrap();
        assert!((mertens_leading(&pi) - lead / 3.0).abs() < 1e-14);
        let x: f64 = 1e5;
        let r = mertens_sum(&unit, x).to_f64() / (lead * x * x);
        assert!((r - 1.0).abs() < 0.02, "{r}");
    }

    #[test]
    fn mertens_matches_naive_ideal_sum() {
        for field in &FIELDS {
            for (mu, mv) in [(1, 0), (2, 0), (1, 1), (3, 1)] {
                let m = Ideal::new(&AlgebraicInt::new(field, mu, mv)).unwrap();
                let naive: u64 = ideals_up_to(field, 400)
                    .iter()
                    .filter(|a| m.divides(a))
                    .map(euler_phi)
                    .sum();
                assert_eq!(mertens_sum(&m, 400.0), naive as i128);
            }
        }
    }

    #[test]
    fn full_circle_is_unit_count_times_ideal_sum() {
        for field in &FIELDS {
            let m = Ideal::new(&AlgebraicInt::new(field, 2, 1)).unwrap();
            for r in [7.0, 23.5] {
                let s = sector(field, (1, 2), Angle::full_turn(), r);
                let mut ideal_sum = mertens_sum(&m, r * r);
                let mut omega = ExactInt::default();
                for _ in 0..field.unit_count {
                    omega.add(&ideal_sum);
                }
                ideal_sum = omega;
                assert_eq!(sectorial_mertens_sum(&m, &s), ideal_sum);
            }
        }
    }

    #[test]
    fn sectorial_ratio() {
        let f = gauss();
        let unit = Ideal::unit(f);
        let s = sector(f, (1, 0), Angle::pi_fraction(1, 3), 400.0);
        let lead = sectorial_leading(&unit, &s);
        let zeta = dedekind_zeta(f, 2.0, 1e-13).unwrap();
        assert!((lead - std::f64::consts::FRAC_PI_3 / (4.0 * zeta)).abs() < 1e-14);
        let r = sectorial_mertens_sum(&unit, &s).to_f64() / (lead * 400f64.powi(4));
        assert!((r - 1.0).abs() < 0.02, "{r}");
        assert_eq!(sectorial_mertens_sum(&unit, &s.with_radius(0.9)), 0);
    }

    #[test]
    fn mirsky_sum_matches_double_loop_oracle() {
        for field in [
            gauss(),
            lookup_field(-3).unwrap(),
            lookup_field(-7).unwrap(),
        ] {
            let unit = Ideal::unit(field);
            for k in [
                AlgebraicInt::new(field, 0, 0),
                AlgebraicInt::new(field, 1, 0),
                AlgebraicInt::new(field, 1, 1),
            ] {
                let s = sector(field, (1, 0), Angle::full_turn(), 20.0);
                let mut naive = 0u128;
                let r = 20i64;
                for v in -2 * r..=2 * r {
                    for u in -2 * r..=2 * r {
                        let a = AlgebraicInt::new(field, u, v);
                        if a.is_zero() || a.norm() > 400 || (a + k).is_zero() {
                            continue;
                        }
                        naive += naive_phi(&a) as u128 * naive_phi(&(a + k)) as u128;
                    }
                }
                let got = mirsky_sum(&unit, &s, &k);
                assert_eq!(got.value, naive as i128);
                assert_eq!(got.zero_shift_term, !k.is_zero() && k.norm() <= 400);
            }
        }
    }

    #[test]
    fn mirsky_ratio_for_unit_shift() {
        let f = gauss();
        let unit = Ideal::unit(f);
        let k = g(1, 0);
        let s = sector(f, (1, 0), Angle::full_turn(), 300.0);
        let c = mirsky_constant(&unit, &k, 1e-12)
            .unwrap()
            .value_product
            .unwrap();
        let lead = mirsky_leading(f, &s, c);
        assert!((lead - 2.0 * std::f64::consts::PI * c / 6.0).abs() < 1e-14);
        let r = mirsky_sum(&unit, &s, &k).value.to_f64() / (lead * 300f64.powi(6));
        assert!((r - 1.0).abs() < 0.03, "{r}");
    }

    #[test]
    fn normalized_sum_examples() {
        let f = gauss();
        let unit = Ideal::unit(f);
        let k = g(1, 1);
        let empty = sector(f, (1, 0), Angle::full_turn(), 0.5);
        assert!(normalized_mirsky_sum(&unit, &empty, &k).0.is_zero());
        let s = sector(f, (1, 0), Angle::pi_fraction(1, 2), 12.0);
        let (sum, _) = normalized_mirsky_sum(&unit, &s, &k);
        let n = enumerate(&unit, &s).len() as f64;
        let v = sum.to_f64();
        assert!(v > 0.0 && v <= n);
        let exact = sum.to_big_rational();
        assert!((exact.to_f64().unwrap() - v).abs() < 1e-12 * v);
        let mut naive = 0.0;
        for a in enumerate(&unit, &s) {
            naive += naive_phi(&a) as f64 / a.norm() as f64 * naive_phi(&(a + k)) as f64
                / (a + k).norm() as f64;
        }
        assert!((naive - v).abs() < 1e-10);
    }

    #[test]
    fn normalized_ratio() {
        let f = gauss();
        let unit = Ideal::unit(f);
        let k = g(1, 1);
        let s = sector(f, (1, 0), Angle::full_turn(), 300.0);
        let c = mirsky_constant(&unit, &k, 1e-12)
            .unwrap()
            .value_product
            .unwrap();
        let r = normalized_mirsky_sum(&unit, &s, &k).0.to_f64()
            / (normalized_mirsky_leading(f, &s, c) * 300.0 * 300.0);
        assert!((r - 1.0).abs() < 0.05, "{r}");
    }

    // Σ φ(a)φ(a+k) over |a| ≤ x, |a+k| ≤ x, evaluated from a and from b = a + k.
    #[test]
    fn correlation_over_the_annulus_is_symmetric() {
        let f = gauss();
        let unit = Ideal::unit(f);
        for k in [g(1, 0), g(2, 1), g(0, 3)] {
            let disc = Sector::disc(f, 30.0);
            let mut from_a = 0u128;
            let mut from_b = 0u128;
            for a in enumerate(&unit, &disc) {
                let b = a + k;
                if !b.is_zero() && b.norm() <= 900 {
                    from_a += naive_phi(&a) as u128 * naive_phi(&b) as u128;
                }
                let c = a - k;
                if !c.is_zero() && c.norm() <= 900 {
                    from_b += naive_phi(&c) as u128 * naive_phi(&a) as u128;
                }
            }
            assert_eq!(from_a, from_b);
        }
    }

    #[test]
    fn sieve_sums_match_naive_sums() {
        for field in &FIELDS {
            let unit = Ideal::unit(field);
            let s = sector(field, (2, 1), Angle::pi_fraction(3, 4), 10.0);
            let naive: u64 = enumerate(&unit, &s).iter().map(naive_phi).sum();
            assert_eq!(sectorial_mertens_sum(&unit, &s), naive as i128);
        }
    }

    #[test]
    fn exact_int_escalates() {
        let mut a = ExactInt::from(i128::MAX - 1);
        a.add_i128(5);
        assert_eq!(a.to_bigint(), BigInt::from(i128::MAX) + 4i32);
        assert_eq!(a.to_string(), (BigInt::from(i128::MAX) + 4i32).to_string());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn sectorial_sums_are_unit_invariant(fi in 0usize..9, zu in -4i64..5, zv in -4i64..5, num in 1i64..8, r in 2.0f64..15.0) {
            let f = &FIELDS[fi];
            prop_assume!(zu != 0 || zv != 0);
            let m = Ideal::new(&AlgebraicInt::new(f, 1, 1)).unwrap();
            let s = sector(f, (zu, zv), Angle::pi_fraction(num, 4), r);
            let base = sectorial_mertens_sum(&m, &s);
            for u in units(f) {
                let rotated = Sector::new(s.anchor.times(&u), s.theta, r).unwrap();
                prop_assert_eq!(sectorial_mertens_sum(&m, &rotated), base.clone());
            }
        }

        #[test]
        fn equal_sectors_partition_the_disc(fi in 0usize..9, offset in 0.0f64..6.283, r in 2.0f64..14.0) {
            let f = &FIELDS[fi];
            let unit = Ideal::unit(f);
            let full = sectorial_mertens_sum(&unit, &sector(f, (1, 0), Angle::full_turn(), r));
            let mut total = ExactInt::default();
            for j in 0..6 {
                let t = offset + j as f64 * std::f64::consts::PI / 3.0;
                let s = Sector::new(Anchor::Complex(t.cos(), t.sin()), Angle::pi_fraction(1, 3), r).unwrap();
                total.add(&sectorial_mertens_sum(&unit, &s));
            }
            prop_assert_eq!(total, full);
        }
    }
}
