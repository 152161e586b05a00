//! A convergence report written as CSV and JSON.

use qmertens::report::{convergence_report, Grid, ReportParams, Theorem};
use qmertens::sector::Angle;
use qmertens::{lookup_field, Result};

fn main() -> Result<()> {
    let f = lookup_field(-4)?;
    let mut params = ReportParams::new(f);
    params.theta = Angle::pi_fraction(1, 3);
    let grid: Grid = "50:400:6:log".parse()?;
    let report = convergence_report(Theorem::SectorialMertens, &params, &grid)?;
    report.write_csv(std::io::stdout())?;
    if let Some(fit) = report.fitted_error_exponent {
        println!(
            "error exponent {:.3} (95% CI {:.3} .. {:.3})",
            fit.exponent, fit.ci_low, fit.ci_high
        );
    }
    let dir = std::env::temp_dir();
    report.write(&dir.join("thm1.2.json"), &params)?;
    println!("wrote {}", dir.join("thm1.2.json").display());
    Ok(())
}
