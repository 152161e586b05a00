//! Elements `u + vω` of `O_K`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;

/// An element `u + vω` of the ring of integers of one of the registered
/// fields.
///
/// Coordinates are `i64`; intermediate products are formed in `i128` and
/// the `try_*` methods report [`Error::Overflow`] when a result leaves the
/// `i64` range. The operator impls panic in that case and on field mismatch.
#[derive(Clone, Copy)]
pub struct AlgebraicInt {
    pub u: i64,
    pub v: i64,
    pub field: &'static Field,
}

impl AlgebraicInt {
    pub fn new(field: &'static Field, u: i64, v: i64) -> Self {
        AlgebraicInt { u, v, field }
    }

    pub fn zero(field: &'static Field) -> Self {
        Self::new(field, 0, 0)
    }

    pub fn one(field: &'static Field) -> Self {
        Self::new(field, 1, 0)
    }

    pub fn omega(field: &'static Field) -> Self {
        Self::new(field, 0, 1)
    }

    pub fn from_int(field: &'static Field, n: i64) -> Self {
        Self::new(field, n, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.u == 0 && self.v == 0
    }

    pub fn is_one(&self) -> bool {
        self.u == 1 && self.v == 0
    }

    /// Value of the norm form, `u² + Buv + Cv²`.
    pub fn norm(&self) -> u64 {
        let n = self.norm_i128();
        u64::try_from(n).expect("norm exceeds u64")
    }

    pub(crate) fn norm_i128(&self) -> i128 {
        let (u, v) = (self.u as i128, self.v as i128);
        u * u + self.field.trace as i128 * u * v + self.field.omega_norm as i128 * v * v
    }

    pub fn is_unit(&self) -> bool {
        self.norm_i128() == 1
    }

    /// Complex conjugate, `(u + Bv) − vω`.
    pub fn conj(&self) -> Self {
        Self::new(self.field, self.u + self.field.trace * self.v, -self.v)
    }

    /// Embedding into `C` as `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let (wr, wi) = self.field.omega_complex();
        (self.u as f64 + self.v as f64 * wr, self.v as f64 * wi)
    }

    pub fn abs(&self) -> f64 {
        (self.norm_i128() as f64).sqrt()
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field.is_same(other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(
                self.field.discriminant,
                other.field.discriminant,
            ))
        }
    }

    fn from_wide(field: &'static Field, u: i128, v: i128) -> Result<Self> {
        Ok(Self::new(
            field,
            i64::try_from(u).map_err(|_| Error::Overflow)?,
            i64::try_from(v).map_err(|_| Error::Overflow)?,
        ))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Self::from_wide(
            self.field,
            self.u as i128 + other.u as i128,
            self.v as i128 + other.v as i128,
        )
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        Self::from_wide(
            self.field,
            self.u as i128 - other.u as i128,
            self.v as i128 - other.v as i128,
        )
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let (a, b) = (self.u as i128, self.v as i128);
        let (c, d) = (other.u as i128, other.v as i128);
        let bd = b.checked_mul(d).ok_or(Error::Overflow)?;
        let u = a * c - self.field.omega_norm as i128 * bd;
        let v = a * d + b * c + self.field.trace as i128 * bd;
        Self::from_wide(self.field, u, v)
    }

    /// Multiplication by a rational integer.
    pub fn scale(&self, n: i64) -> Self {
        Self::from_wide(
            self.field,
            self.u as i128 * n as i128,
            self.v as i128 * n as i128,
        )
        .expect("coordinate overflow")
    }

    /// `self / other` when `other` divides `self` exactly, `None` otherwise
    /// (including `other = 0`).
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() || !self.field.is_same(other.field) {
            return None;
        }
        // x / y = x·ȳ / N(y)
        let n = other.norm_i128();
        let c = other.conj();
        let (a, b) = (self.u as i128, self.v as i128);
        let (cu, cv) = (c.u as i128, c.v as i128);
        let bd = b * cv;
        let u = a * cu - self.field.omega_norm as i128 * bd;
        let v = a * cv + b * cu + self.field.trace as i128 * bd;
        if u % n != 0 || v % n != 0 {
            return None;
        }
        Self::from_wide(self.field, u / n, v / n).ok()
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.checked_div(self).is_some()
    }

    /// Exact division with an error when the remainder is nonzero.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if other.is_zero() {
            return Err(Error::ZeroInput);
        }
        self.checked_div(other).ok_or_else(|| Error::NotDivisible {
            dividend: self.to_string(),
            divisor: other.to_string(),
        })
    }

    /// Divisible by the rational integer `n` in `O_K`.
    pub fn divisible_by_int(&self, n: i64) -> bool {
        self.u % n == 0 && self.v % n == 0
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field);
        for _ in 0..e {
            acc = acc * *self;
        }
        acc
    }

    /// Parses `u+v*w` style strings in the given field.
    pub fn parse(field: &'static Field, s: &str) -> Result<Self> {
        let parsed: Coords = s.parse()?;
        Ok(Self::new(field, parsed.0, parsed.1))
    }
}

impl PartialEq for AlgebraicInt {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u && self.v == other.v && self.field.is_same(other.field)
    }
}

impl Eq for AlgebraicInt {}

impl Hash for AlgebraicInt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.discriminant.hash(state);
        self.u.hash(state);
        self.v.hash(state);
    }
}

impl fmt::Debug for AlgebraicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [D={}]", self, self.field.discriminant)
    }
}

impl fmt::Display for AlgebraicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u, self.v) {
            (u, 0) => write!(f, "{u}"),
            (0, v) => write!(f, "{v}*w"),
            (u, v) if v < 0 => write!(f, "{u}-{}*w", v.unsigned_abs()),
            (u, v) => write!(f, "{u}+{v}*w"),
        }
    }
}

impl Add for AlgebraicInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("AlgebraicInt addition")
    }
}

impl Sub for AlgebraicInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("AlgebraicInt subtraction")
    }
}

impl Mul for AlgebraicInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("AlgebraicInt multiplication")
    }
}

impl Neg for AlgebraicInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.field, -self.u, -self.v)
    }
}

/// Field-free coordinates parsed from `u+v*w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coords(pub i64, pub i64);

impl FromStr for Coords {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty element"));
        }
        let (mut u, mut v) = (0i64, 0i64);
        let bytes = compact.as_bytes();
        let mut start = 0;
        let mut terms = Vec::new();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'*')
            {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        for term in terms {
            let (sign, body) = match term.as_bytes()[0] {
                b'-' => (-1, &term[1..]),
                b'+' => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            if let Some(coef) = body.strip_suffix('w') {
                let coef = coef.strip_suffix('*').unwrap_or(coef);
                let c: i64 = if coef.is_empty() {
                    1
                } else {
                    coef.parse().map_err(|_| err("bad coefficient of w"))?
                };
                v = v.checked_add(sign * c).ok_or_else(|| err("overflow"))?;
            } else {
                let c: i64 = body.parse().map_err(|_| err("bad integer term"))?;
                u = u.checked_add(sign * c).ok_or_else(|| err("overflow"))?;
            }
        }
        Ok(Coords(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::lookup_field;

    fn g(u: i64, v: i64) -> AlgebraicInt {
        AlgebraicInt::new(lookup_field(-4).unwrap(), u, v)
    }

    fn e(u: i64, v: i64) -> AlgebraicInt {
        AlgebraicInt::new(lookup_field(-3).unwrap(), u, v)
    }

    #[test]
    fn ring_op_examples() {
        assert_eq!(g(1, 1) * g(1, -1), g(2, 0));
        let x = e(1, 1);
        assert_eq!(x * x.conj(), e(3, 0));
        assert_eq!(g(5, 0).exact_div(&g(2, 1)).unwrap(), g(2, -1));
        assert!(matches!(
            g(5, 0).exact_div(&g(1, 1)),
            Err(Error::NotDivisible { .. })
        ));
        assert_eq!(g(3, 0).exact_div(&g(0, 0)), Err(Error::ZeroInput));
    }

    #[test]
    fn field_mismatch_is_reported() {
        assert_eq!(g(1, 0).try_add(&e(1, 0)), Err(Error::FieldMismatch(-4, -3)));
        assert!(g(1, 0).try_mul(&e(1, 0)).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = g(i64::MAX / 2, i64::MAX / 2);
        assert_eq!(big.try_mul(&big), Err(Error::Overflow));
        assert_eq!(big.try_add(&big.scale(1)).map(|_| ()), Ok(()));
        assert_eq!(
            big.try_add(&big).and_then(|x| x.try_add(&big)),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn norm_examples() {
        assert_eq!(g(3, 2).norm(), 13);
        assert_eq!(g(0, 0).norm(), 0);
        assert_eq!(e(1, 1).norm(), 3);
    }

    #[test]
    fn omega_squared_follows_minimal_polynomial() {
        for f in &crate::field::FIELDS {
            let w = AlgebraicInt::omega(f);
            let lhs = w * w;
            let rhs = AlgebraicInt::new(f, -f.omega_norm, f.trace);
            assert_eq!(lhs, rhs);
            let (re, im) = lhs.to_complex();
            let (wr, wi) = w.to_complex();
            assert!((re - (wr * wr - wi * wi)).abs() < 1e-9);
            assert!((im - 2.0 * wr * wi).abs() < 1e-9);
        }
    }

    #[test]
    fn parse_and_print() {
        let f = lookup_field(-4).unwrap();
        for (s, u, v) in [
            ("3+2*w", 3, 2),
            ("3-2*w", 3, -2),
            ("-1-1*w", -1, -1),
            ("1+1*w", 1, 1),
            ("w", 0, 1),
            ("-w", 0, -1),
            ("2*w", 0, 2),
            ("7", 7, 0),
            ("-7", -7, 0),
            (" 4 + w ", 4, 1),
            ("2w-3", -3, 2),
        ] {
            assert_eq!(
                AlgebraicInt::parse(f, s).unwrap(),
                AlgebraicInt::new(f, u, v),
                "{s}"
            );
        }
        for bad in ["", "x", "3+", "1.5", "2*w*w"] {
            assert!(AlgebraicInt::parse(f, bad).is_err(), "{bad}");
        }
        for (u, v) in [(3, 2), (3, -2), (0, 0), (5, 0), (0, -3), (-1, 1)] {
            let x = AlgebraicInt::new(f, u, v);
            assert_eq!(AlgebraicInt::parse(f, &x.to_string()).unwrap(), x);
        }
        assert_eq!(g(3, -2).to_string(), "3-2*w");
        assert_eq!(g(1, 1).to_string(), "1+1*w");
    }
}
