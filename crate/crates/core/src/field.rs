//! Registry of the nine imaginary quadratic fields whose ring of integers is
//! a principal ideal domain.
//!
//! Every field is `K = Q(√d)` with integral basis `{1, ω}`, where `ω = √d`
//! when `d ≡ 2, 3 (mod 4)` and `ω = (1 + √d)/2` when `d ≡ 1 (mod 4)`. The
//! element `u + vω` has norm `u² + B·uv + C·v²` with `B = tr(ω)` and
//! `C = N(ω)`, and `ω² = B·ω − C`.

use std::fmt;
use std::ops::Mul;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// One of the nine fields, identified by its fundamental discriminant.
#[derive(Debug, Serialize)]
pub struct Field {
    /// Squarefree negative integer with `K = Q(√d)`.
    pub d: i64,
    /// Fundamental discriminant `D_K`.
    pub discriminant: i64,
    /// Order `ω_K` of the unit group.
    pub unit_count: u32,
    /// `B` in the norm form `u² + Buv + Cv²` (trace of ω).
    pub trace: i64,
    /// `C` in the norm form (norm of ω).
    pub omega_norm: i64,
}

/// The nine fields, in the order the discriminants are usually listed.
pub static FIELDS: [Field; 9] = [
    Field::new(-1, -4, 4, 0, 1),
    Field::new(-2, -8, 2, 0, 2),
    Field::new(-3, -3, 6, 1, 1),
    Field::new(-7, -7, 2, 1, 2),
    Field::new(-11, -11, 2, 1, 3),
    Field::new(-19, -19, 2, 1, 5),
    Field::new(-43, -43, 2, 1, 11),
    Field::new(-67, -67, 2, 1, 17),
    Field::new(-163, -163, 2, 1, 41),
];

/// Looks up the field with the given fundamental discriminant.
pub fn lookup_field(discriminant: i64) -> Result<&'static Field> {
    FIELDS
        .iter()
        .find(|f| f.discriminant == discriminant)
        .ok_or(Error::NotPrincipalImaginaryQuadratic(discriminant))
}

impl Field {
    const fn new(d: i64, discriminant: i64, unit_count: u32, trace: i64, omega_norm: i64) -> Self {
        Field {
            d,
            discriminant,
            unit_count,
            trace,
            omega_norm,
        }
    }

    /// The Gaussian field `Q(i)`.
    pub fn gaussian() -> &'static Field {
        &FIELDS[0]
    }

    /// The Eisenstein field `Q(√−3)`.
    pub fn eisenstein() -> &'static Field {
        &FIELDS[2]
    }

    pub fn abs_disc(&self) -> u64 {
        self.discriminant.unsigned_abs()
    }

    pub fn sqrt_abs_disc(&self) -> f64 {
        (self.abs_disc() as f64).sqrt()
    }

    /// Norm form coefficients `(A, B, C)` with `A = 1`.
    pub fn norm_form(&self) -> (i64, i64, i64) {
        (1, self.trace, self.omega_norm)
    }

    /// `ω` as a point of the complex plane.
    pub fn omega_complex(&self) -> (f64, f64) {
        (self.trace as f64 / 2.0, self.sqrt_abs_disc() / 2.0)
    }

    /// Area of a fundamental parallelogram of `O_K`, `√|D_K| / 2`.
    pub fn covolume(&self) -> PiSurd {
        PiSurd::new(Ratio::new(1, 2), 0, 1, self.abs_disc())
    }

    /// Leading density of the ideal count, `2π / (ω_K √|D_K|)`.
    pub fn rho(&self) -> PiSurd {
        PiSurd::new(
            Ratio::new(2, self.unit_count as i64),
            1,
            -1,
            self.abs_disc(),
        )
    }

    pub fn is_same(&self, other: &Field) -> bool {
        self.discriminant == other.discriminant
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.is_same(other)
    }
}

impl Eq for Field {}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt({}))", self.d)
    }
}

/// An exact real of the form `q · π^a · √|D|^b` with `q` rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiSurd {
    pub coeff: Ratio<i64>,
    pub pi_power: i32,
    pub sqrt_disc_power: i32,
    pub abs_disc: u64,
}

impl PiSurd {
    pub fn new(coeff: Ratio<i64>, pi_power: i32, sqrt_disc_power: i32, abs_disc: u64) -> Self {
        let mut s = PiSurd {
            coeff,
            pi_power,
            sqrt_disc_power,
            abs_disc,
        };
        s.normalize();
        s
    }

    pub fn rational(coeff: Ratio<i64>, abs_disc: u64) -> Self {
        PiSurd::new(coeff, 0, 0, abs_disc)
    }

    // Pull even powers of √|D| into the coefficient.
    fn normalize(&mut self) {
        let d = self.abs_disc as i64;
        while self.sqrt_disc_power >= 2 {
            self.coeff *= d;
            self.sqrt_disc_power -= 2;
        }
        while self.sqrt_disc_power <= -2 {
            self.coeff /= d;
            self.sqrt_disc_power += 2;
        }
    }

    pub fn value(&self) -> f64 {
        let c = *self.coeff.numer() as f64 / *self.coeff.denom() as f64;
        c * std::f64::consts::PI.powi(self.pi_power)
            * (self.abs_disc as f64).sqrt().powi(self.sqrt_disc_power)
    }
}

impl Mul for PiSurd {
    type Output = PiSurd;

    fn mul(self, rhs: PiSurd) -> PiSurd {
        assert_eq!(
            self.abs_disc, rhs.abs_disc,
            "PiSurd values from different fields"
        );
        PiSurd::new(
            self.coeff * rhs.coeff,
            self.pi_power + rhs.pi_power,
            self.sqrt_disc_power + rhs.sqrt_disc_power,
            self.abs_disc,
        )
    }
}

impl fmt::Display for PiSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff)?;
        if self.pi_power != 0 {
            write!(f, "*pi^{}", self.pi_power)?;
        }
        if self.sqrt_disc_power != 0 {
            write!(f, "*sqrt({})^{}", self.abs_disc, self.sqrt_disc_power)?;
        }
        Ok(())
    }
}
