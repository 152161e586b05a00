//! Truncated angular sectors `C(z, θ, R) = {ρe^{it}z : t ∈ ]−θ/2, θ/2], 0 < ρ|z| ≤ R}`
//! and enumeration of ideal lattice points inside them.
//!
//! Angular membership is decided in double precision on `w = a·z̄`. When `z`
//! is an exact element, `w` has integer coordinates and the slope of `w` is
//! a rational multiple of `√|D|`, so a lattice point can sit exactly on a
//! boundary ray only when `θ/2` is a multiple of `π/4` or `π/6`; those ties
//! are detected with integer arithmetic. For anchors given as real pairs and
//! for decimal angles, points near a boundary are decided by the
//! floating-point comparison alone, which is sound for generic angles.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::element::AlgebraicInt;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;

const TIE_BAND: f64 = 1e-9;

/// An angle, either a rational multiple of `π` (exact) or a decimal in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Angle {
    PiMultiple(Ratio<i64>),
    Radians(f64),
}

impl Angle {
    pub fn pi_fraction(num: i64, den: i64) -> Angle {
        Angle::PiMultiple(Ratio::new(num, den))
    }

    pub fn full_turn() -> Angle {
        Angle::pi_fraction(2, 1)
    }

    pub fn value(&self) -> f64 {
        match self {
            Angle::PiMultiple(q) => *q.numer() as f64 / *q.denom() as f64 * PI,
            Angle::Radians(r) => *r,
        }
    }

    pub fn is_full_turn(&self) -> bool {
        match self {
            Angle::PiMultiple(q) => *q == Ratio::from_integer(2),
            Angle::Radians(r) => *r == TAU,
        }
    }

    /// True for angles in `]0, 2π]`.
    pub fn is_sector_opening(&self) -> bool {
        match self {
            Angle::PiMultiple(q) => *q > Ratio::from_integer(0) && *q <= Ratio::from_integer(2),
            Angle::Radians(r) => *r > 0.0 && *r <= TAU,
        }
    }

    pub fn half(&self) -> Angle {
        match self {
            Angle::PiMultiple(q) => Angle::PiMultiple(q / 2),
            Angle::Radians(r) => Angle::Radians(r / 2.0),
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Angle::Radians(r) => write!(f, "{r}"),
            Angle::PiMultiple(q) => {
                let (n, d) = (*q.numer(), *q.denom());
                match n {
                    0 => write!(f, "0")?,
                    1 => write!(f, "pi")?,
                    -1 => write!(f, "-pi")?,
                    _ => write!(f, "{n}pi")?,
                }
                if d != 1 {
                    write!(f, "/{d}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Angle> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_lowercase();
        if let Some(pos) = t.find("pi") {
            let coeff = t[..pos].trim_end_matches('*');
            let num: i64 = match coeff {
                "" => 1,
                "-" => -1,
                c => c.parse().map_err(|_| bad("bad multiple of pi"))?,
            };
            let rest = &t[pos + 2..];
            let den: i64 = match rest.strip_prefix('/') {
                None if rest.is_empty() => 1,
                Some(d) => d.parse().map_err(|_| bad("bad denominator"))?,
                None => return Err(bad("unexpected text after pi")),
            };
            if den == 0 {
                return Err(bad("zero denominator"));
            }
            return Ok(Angle::PiMultiple(Ratio::new(num, den)));
        }
        t.parse::<f64>()
            .map(Angle::Radians)
            .map_err(|_| bad("expected radians or a multiple of pi such as 2pi, pi/3"))
    }
}

/// Direction of the sector axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Anchor {
    Exact(AlgebraicInt),
    Complex(f64, f64),
}

impl Anchor {
    /// Interprets a complex pair, recognizing lattice points of `O_K` exactly.
    pub fn from_pair(field: &'static Field, re: f64, im: f64) -> Anchor {
        let v = 2.0 * im / field.sqrt_abs_disc();
        let u = re - v * field.trace as f64 / 2.0;
        let (ur, vr) = (u.round(), v.round());
        if (u - ur).abs() < 1e-12 && (v - vr).abs() < 1e-12 && ur.abs() < 1e15 && vr.abs() < 1e15 {
            Anchor::Exact(AlgebraicInt::new(field, ur as i64, vr as i64))
        } else {
            Anchor::Complex(re, im)
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        match self {
            Anchor::Exact(z) => z.to_complex(),
            Anchor::Complex(re, im) => (*re, *im),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Anchor::Exact(z) => z.is_zero(),
            Anchor::Complex(re, im) => *re == 0.0 && *im == 0.0,
        }
    }

    /// Anchor multiplied by `x`.
    pub fn times(&self, x: &AlgebraicInt) -> Anchor {
        match self {
            Anchor::Exact(z) => Anchor::Exact(*z * *x),
            Anchor::Complex(re, im) => {
                let (a, b) = x.to_complex();
                Anchor::Complex(re * a - im * b, re * b + im * a)
            }
        }
    }
}

/// A truncated sector `C(z, θ, R)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sector {
    pub anchor: Anchor,
    pub theta: Angle,
    pub radius: f64,
}

impl Sector {
    pub fn new(anchor: Anchor, theta: Angle, radius: f64) -> Result<Sector> {
        if anchor.is_zero() {
            return Err(Error::Config("sector direction z must be nonzero".into()));
        }
        if !theta.is_sector_opening() {
            return Err(Error::Config(format!(
                "theta must lie in ]0, 2pi], got {theta}"
            )));
        }
        if !(radius >= 0.0) || !radius.is_finite() {
            return Err(Error::Config(format!(
                "radius must be finite and >= 0, got {radius}"
            )));
        }
        Ok(Sector {
            anchor,
            theta,
            radius,
        })
    }

    /// The full disc of radius `R` (anchor 1, `θ = 2π`).
    pub fn disc(field: &'static Field, radius: f64) -> Sector {
        Sector::new(
            Anchor::Exact(AlgebraicInt::one(field)),
            Angle::full_turn(),
            radius,
        )
        .expect("valid disc")
    }

    pub fn with_radius(&self, radius: f64) -> Sector {
        Sector { radius, ..*self }
    }

    /// `x·C(z, θ, R) = C(xz, θ, R|x|)`.
    pub fn scaled_by(&self, x: &AlgebraicInt) -> Sector {
        Sector {
            anchor: self.anchor.times(x),
            theta: self.theta,
            radius: self.radius * x.abs(),
        }
    }

    fn radius_ok(&self, a: &AlgebraicInt) -> bool {
        !a.is_zero() && (a.norm() as f64) <= self.radius * self.radius
    }

    /// Membership under the half-open convention `t ∈ ]−θ/2, θ/2]`.
    pub fn contains(&self, a: &AlgebraicInt) -> bool {
        self.radius_ok(a) && self.angle_ok(a)
    }

    fn angle_ok(&self, a: &AlgebraicInt) -> bool {
        if self.theta.is_full_turn() {
            return true;
        }
        let half = self.theta.value() / 2.0;
        let t = match self.anchor {
            Anchor::Exact(z) => {
                let w = *a * z.conj();
                let (re, im) = w.to_complex();
                let t = im.atan2(re);
                if let Angle::PiMultiple(q) = self.theta.half() {
                    if (t - half).abs() < TIE_BAND && on_ray(&w, q) {
                        return true;
                    }
                    if (t + half).abs() < TIE_BAND && on_ray(&w, -q) {
                        return false;
                    }
                }
                t
            }
            Anchor::Complex(zr, zi) => {
                let (ar, ai) = a.to_complex();
                (ai * zr - ar * zi).atan2(ar * zr + ai * zi)
            }
        };
        t > -half && t <= half
    }
}

// Exact test that the element w lies on the open ray at angle qπ.
fn on_ray(w: &AlgebraicInt, q: Ratio<i64>) -> bool {
    let twelve = q * 12;
    if !twelve.is_integer() {
        return false;
    }
    let k = twelve.to_integer().rem_euclid(24);
    // w = (X + Y√|D| i)/2
    let x = 2 * w.u as i128 + w.field.trace as i128 * w.v as i128;
    let y = w.v as i128;
    let d = w.field.abs_disc() as i128;
    let (cos_sign, sin_sign) = {
        let phi = k as f64 * PI / 12.0;
        let sgn = |v: f64| {
            if v.abs() < 1e-9 {
                0
            } else if v > 0.0 {
                1
            } else {
                -1
            }
        };
        (sgn(phi.cos()), sgn(phi.sin()))
    };
    if x.signum() as i32 != cos_sign || y.signum() as i32 != sin_sign {
        return false;
    }
    // tan²(kπ/12) = num/den
    let (num, den): (i128, i128) = match k % 12 {
        0 | 6 => return true, // signs already pin the axis
        2 | 10 => (1, 3),
        3 | 9 => (1, 1),
        4 | 8 => (3, 1),
        _ => return false, // tan² irrational
    };
    y * y * d * den == x * x * num
}

/// Lattice points `a ∈ mO_K ∩ C(z, θ, R)` in row-major order over the
/// coordinates of `d = a/g` (`g` the generator of `m`).
pub fn enumerate(m: &Ideal, sector: &Sector) -> Vec<AlgebraicInt> {
    let rows = SectorRows::new(m, sector);
    rows.rows().flat_map(|v| rows.row(v)).collect()
}

/// Row decomposition of an enumeration, for parallel consumers.
pub struct SectorRows {
    generator: AlgebraicInt,
    sector: Sector,
    // bound on N(d) for d = a/g
    norm_bound: f64,
    vmax: i64,
}

impl SectorRows {
    pub fn new(m: &Ideal, sector: &Sector) -> SectorRows {
        let g = *m.generator();
        let field = g.field;
        let norm_bound = sector.radius * sector.radius / g.norm() as f64;
        let vmax = (2.0 * norm_bound.sqrt() / field.sqrt_abs_disc()).floor() as i64 + 1;
        SectorRows {
            generator: g,
            sector: *sector,
            norm_bound,
            vmax,
        }
    }

    pub fn rows(&self) -> std::ops::RangeInclusive<i64> {
        -self.vmax..=self.vmax
    }

    /// Points of row `v` (all `a = g·(u + vω)` in the sector), by increasing `u`.
    pub fn row(&self, v: i64) -> Vec<AlgebraicInt> {
        let field = self.generator.field;
        let d = field.abs_disc() as f64;
        let b = field.trace;
        let rest = 4.0 * self.norm_bound - d * (v as f64) * (v as f64);
        if rest < 0.0 {
            return Vec::new();
        }
        // (2u + Bv)² ≤ rest, widened by one on each side and filtered exactly
        let s = rest.sqrt();
        let lo = ((-s - (b * v) as f64) / 2.0).floor() as i64 - 1;
        let hi = ((s - (b * v) as f64) / 2.0).ceil() as i64 + 1;
        let mut out = Vec::new();
        for u in lo..=hi {
            let a = self.generator * AlgebraicInt::new(field, u, v);
            if self.sector.contains(&a) {
                out.push(a);
            }
        }
        out
    }
}

/// Exact number of points of `O_K` in the sector.
pub fn count_points(field: &'static Field, sector: &Sector) -> u64 {
    enumerate(&Ideal::unit(field), sector).len() as u64
}

/// `θR²/√|D|`, the area of the sector over the covolume.
pub fn gauss_estimate(field: &Field, sector: &Sector) -> f64 {
    sector.theta.value() * sector.radius * sector.radius / field.sqrt_abs_disc()
}

/// `Σ |d|²` over the points of `O_K` in the sector.
pub fn sum_norms_sector(field: &'static Field, sector: &Sector) -> u128 {
    enumerate(&Ideal::unit(field), sector)
        .iter()
        .map(|a| a.norm() as u128)
        .sum()
}

/// Covolume `N(m)√|D|/2` and the diameter of the parallelogram spanned by
/// `g` and `gω`.
pub fn covol_diam(m: &Ideal) -> (f64, f64) {
    let f = m.field();
    let covol = m.norm() as f64 * f.sqrt_abs_disc() / 2.0;
    let one = AlgebraicInt::one(f);
    let w = AlgebraicInt::omega(f);
    let diag = (one + w).abs().max((one - w).abs());
    (covol, m.generator().abs() * diag)
}
