//! Convergence reports: exact left-hand sides along a grid of `x`, the
//! predicted leading terms, their ratios, and a least-squares fit of the
//! error exponent, written as CSV or JSON.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::element::AlgebraicInt;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::mirsky::mirsky_constant;
use crate::sector::{Anchor, Angle, Sector};
use crate::sums::{
    count_ideals, mertens_leading, mertens_sum, mirsky_leading, mirsky_sum,
    normalized_mirsky_leading, normalized_mirsky_sum, sectorial_leading, sectorial_mertens_sum,
};

/// Which asymptotic is being checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Number of ideals of norm `≤ x` against `ρ_K x`.
    #[serde(rename = "ideals")]
    IdealCount,
    /// Congruence Mertens sum against its `x²` term.
    #[serde(rename = "thm1.1")]
    Mertens,
    /// Sectorial Mertens sum against its `x⁴` term.
    #[serde(rename = "thm1.2")]
    SectorialMertens,
    /// Shifted correlation sum against its `x⁶` term.
    #[serde(rename = "thm4.1")]
    Mirsky,
    /// Normalized correlation sum against its `x²` term.
    #[serde(rename = "lemma4.5")]
    NormalizedMirsky,
}

impl Theorem {
    pub fn name(&self) -> &'static str {
        match self {
            Theorem::IdealCount => "ideals",
            Theorem::Mertens => "thm1.1",
            Theorem::SectorialMertens => "thm1.2",
            Theorem::Mirsky => "thm4.1",
            Theorem::NormalizedMirsky => "lemma4.5",
        }
    }

    fn uses_shift(&self) -> bool {
        matches!(self, Theorem::Mirsky | Theorem::NormalizedMirsky)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        Ok(match s {
            "ideals" => Theorem::IdealCount,
            "thm1.1" => Theorem::Mertens,
            "thm1.2" => Theorem::SectorialMertens,
            "thm4.1" | "thm1.3" => Theorem::Mirsky,
            "lemma4.5" => Theorem::NormalizedMirsky,
            _ => {
                return Err(Error::Config(format!(
                    "unknown theorem {s:?} (expected ideals, thm1.1, thm1.2, thm4.1, lemma4.5)"
                )))
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Log,
    Lin,
}

/// `a:b:n:log|lin`, `n ≥ 4` increasing points from `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    pub start: f64,
    pub end: f64,
    pub n: usize,
    pub spacing: Spacing,
}

impl Grid {
    pub fn new(start: f64, end: f64, n: usize, spacing: Spacing) -> Result<Grid> {
        if n < 4 {
            return Err(Error::GridTooSmall(n));
        }
        if !(start.is_finite() && end.is_finite() && start < end) {
            return Err(Error::Config(format!(
                "grid needs start < end, got {start}:{end}"
            )));
        }
        if spacing == Spacing::Log && start <= 0.0 {
            return Err(Error::Config("log grid needs a positive start".into()));
        }
        Ok(Grid {
            start,
            end,
            n,
            spacing,
        })
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.n - 1) as f64;
        (0..self.n)
            .map(|i| {
                let t = i as f64 / last;
                let x = match self.spacing {
                    Spacing::Lin => self.start + t * (self.end - self.start),
                    Spacing::Log => (self.start.ln() + t * (self.end.ln() - self.start.ln())).exp(),
                };
                // keep round endpoints exact and interior points at 12 significant digits
                if i == 0 {
                    self.start
                } else if i == self.n - 1 {
                    self.end
                } else {
                    format!("{x:.11e}").parse().expect("formatted float")
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Grid> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(bad("expected a:b:n:log|lin"));
        }
        let start: f64 = parts[0].trim().parse().map_err(|_| bad("bad start"))?;
        let end: f64 = parts[1].trim().parse().map_err(|_| bad("bad end"))?;
        let n: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| bad("bad point count"))?;
        let spacing = match parts[3].trim() {
            "log" => Spacing::Log,
            "lin" => Spacing::Lin,
            _ => return Err(bad("spacing must be log or lin")),
        };
        Grid::new(start, end, n, spacing)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sp = match self.spacing {
            Spacing::Log => "log",
            Spacing::Lin => "lin",
        };
        write!(f, "{}:{}:{}:{}", self.start, self.end, self.n, sp)
    }
}

/// Parameters shared by all theorems; unused ones are ignored.
#[derive(Debug, Clone)]
pub struct ReportParams {
    pub field: &'static Field,
    pub m: Ideal,
    pub k: AlgebraicInt,
    pub anchor: Anchor,
    pub theta: Angle,
    /// Tolerance for the constant `c_{m,k}`.
    pub tolerance: f64,
}

impl ReportParams {
    pub fn new(field: &'static Field) -> ReportParams {
        ReportParams {
            field,
            m: Ideal::unit(field),
            k: AlgebraicInt::one(field),
            anchor: Anchor::Exact(AlgebraicInt::one(field)),
            theta: Angle::full_turn(),
            tolerance: 1e-12,
        }
    }
}

/// Least-squares slope of `log|exact − predicted|` against `log x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExponentFit {
    pub exponent: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub points_used: usize,
}

/// Fits the error exponent on the points with a nonzero difference.
/// Needs at least three such points.
pub fn fit_error_exponent(x: &[f64], abs_err: &[f64]) -> Option<ExponentFit> {
    let pts: Vec<(f64, f64)> = x
        .iter()
        .zip(abs_err)
        .filter(|(x, e)| **x > 0.0 && **e > 0.0 && e.is_finite())
        .map(|(x, e)| (x.ln(), e.ln()))
        .collect();
    let n = pts.len();
    if n < 3 {
        return None;
    }
    let nf = n as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / nf;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / nf;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let se = (sse / (nf - 2.0) / sxx).sqrt();
    let t = StudentsT::new(0.0, 1.0, nf - 2.0)
        .expect("positive degrees of freedom")
        .inverse_cdf(0.975);
    Some(ExponentFit {
        exponent: slope,
        ci_low: slope - t * se,
        ci_high: slope + t * se,
        points_used: n,
    })
}

/// One row per grid point, plus the fitted error exponent.
#[derive(Debug, Clone, Serialize)]
pub struct SumReport {
    pub theorem: Theorem,
    pub x_grid: Vec<f64>,
    /// Exact sums as decimal strings (the normalized sum is rounded to 17 significant digits).
    pub exact_sums: Vec<String>,
    pub predicted: Vec<f64>,
    pub ratios: Vec<f64>,
    pub abs_err: Vec<f64>,
    pub fitted_error_exponent: Option<ExponentFit>,
    /// The constant `c_{m,k}` used in the prediction, when one is needed.
    pub constant: Option<f64>,
    /// Whether some grid point had `a = −k` in the sector.
    pub zero_shift_term: bool,
    #[serde(skip)]
    pub runtime_s: Vec<f64>,
}

impl SumReport {
    pub fn final_ratio(&self) -> f64 {
        *self.ratios.last().expect("nonempty grid")
    }

    /// `|ratio − 1| ≤ tolerance` at the largest `x`.
    pub fn final_ratio_within(&self, tolerance: f64) -> bool {
        (self.final_ratio() - 1.0).abs() <= tolerance
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Config(format!("csv: {e}"));
        w.write_record(["x", "exact", "predicted", "ratio", "abs_err"])
            .map_err(io)?;
        for i in 0..self.x_grid.len() {
            w.write_record([
                self.x_grid[i].to_string(),
                self.exact_sums[i].clone(),
                format!("{:e}", self.predicted[i]),
                self.ratios[i].to_string(),
                format!("{:e}", self.abs_err[i]),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Config(format!("csv: {e}")))
    }

    /// JSON with the report proper and a separate `metadata` block holding
    /// the run parameters and timings.
    pub fn to_json(&self, params: &ReportParams) -> serde_json::Value {
        serde_json::json!({
            "report": self,
            "metadata": {
                "field": params.field.discriminant,
                "m": params.m.generator().to_string(),
                "k": params.k.to_string(),
                "z": anchor_string(&params.anchor),
                "theta": params.theta.to_string(),
                "tolerance": params.tolerance,
                "runtime_s": self.runtime_s,
                "threads": rayon::current_num_threads(),
            }
        })
    }

    pub fn write(&self, path: &Path, params: &ReportParams) -> Result<()> {
        let io = |e: std::io::Error| Error::Config(format!("{}: {e}", path.display()));
        let file = std::fs::File::create(path).map_err(io)?;
        let mut file = std::io::BufWriter::new(file);
        if path.extension().is_some_and(|e| e == "json") {
            serde_json::to_writer_pretty(&mut file, &self.to_json(params))
                .map_err(|e| Error::Config(format!("json: {e}")))?;
            writeln!(file).map_err(io)?;
            file.flush().map_err(io)
        } else {
            self.write_csv(file)
        }
    }
}

fn anchor_string(a: &Anchor) -> String {
    let (re, im) = a.to_complex();
    format!("{re},{im}")
}

/// Evaluates both sides of `theorem` along `grid`.
pub fn convergence_report(
    theorem: Theorem,
    params: &ReportParams,
    grid: &Grid,
) -> Result<SumReport> {
    let field = params.field;
    if !params.m.field().is_same(field) || !params.k.field.is_same(field) {
        return Err(Error::FieldMismatch(
            field.discriminant,
            params.m.field().discriminant,
        ));
    }
    let xs = grid.points();
    let constant = if theorem.uses_shift() {
        Some(mirsky_constant(&params.m, &params.k, params.tolerance)?.value())
    } else {
        None
    };
    let mut report = SumReport {
        theorem,
        x_grid: xs.clone(),
        exact_sums: Vec::new(),
        predicted: Vec::new(),
        ratios: Vec::new(),
        abs_err: Vec::new(),
        fitted_error_exponent: None,
        constant,
        zero_shift_term: false,
        runtime_s: Vec::new(),
    };
    for &x in &xs {
        let t0 = Instant::now();
        let sector = Sector::new(params.anchor, params.theta, x)?;
        let (exact, exact_f, predicted) = match theorem {
            Theorem::IdealCount => {
                let n = count_ideals(field, x);
                (n.to_string(), n as f64, field.rho().value() * x)
            }
            Theorem::Mertens => {
                let s = mertens_sum(&params.m, x);
                (
                    s.to_string(),
                    s.to_f64(),
                    mertens_leading(&params.m) * x * x,
                )
            }
            Theorem::SectorialMertens => {
                let s = sectorial_mertens_sum(&params.m, &sector);
                (
                    s.to_string(),
                    s.to_f64(),
                    sectorial_leading(&params.m, &sector) * x.powi(4),
                )
            }
            Theorem::Mirsky => {
                let s = mirsky_sum(&params.m, &sector, &params.k);
                report.zero_shift_term |= s.zero_shift_term;
                let c = constant.expect("computed above");
                (
                    s.value.to_string(),
                    s.value.to_f64(),
                    mirsky_leading(field, &sector, c) * x.powi(6),
                )
            }
            Theorem::NormalizedMirsky => {
                let (s, hit) = normalized_mirsky_sum(&params.m, &sector, &params.k);
                report.zero_shift_term |= hit;
                let v = s.to_f64();
                let c = constant.expect("computed above");
                (
                    format!("{v:.16e}"),
                    v,
                    normalized_mirsky_leading(field, &sector, c) * x * x,
                )
            }
        };
        report.exact_sums.push(exact);
        report.predicted.push(predicted);
        report.ratios.push(exact_f / predicted);
        report.abs_err.push((exact_f - predicted).abs());
        report.runtime_s.push(t0.elapsed().as_secs_f64());
    }
    report.fitted_error_exponent = fit_error_exponent(&report.x_grid, &report.abs_err);
    Ok(report)
}
