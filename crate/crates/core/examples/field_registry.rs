//! Invariants of the nine fields.

use qmertens::FIELDS;

fn main() {
    println!(
        "{:>5} {:>6} {:>5} {:>14} {:>22}",
        "D", "units", "trace", "covolume", "rho"
    );
    for f in &FIELDS {
        println!(
            "{:>5} {:>6} {:>5} {:>14.10} {:>22}",
            f.discriminant,
            f.unit_count,
            f.trace,
            f.covolume().value(),
            format!("{} = {:.10}", f.rho(), f.rho().value())
        );
    }
}
