//! Exhaustive audit of every graph of one order (default 7).

use lapspread::certificates::DEFAULT_AUDIT_TOL;
use lapspread::cli::render_enum_report;
use lapspread::enumeration::exhaustive_audit;

fn main() -> lapspread::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(7);
    let report = exhaustive_audit(n, false, DEFAULT_AUDIT_TOL)?;
    print!("{}", render_enum_report(&report));
    for (case, count) in &report.cases {
        println!("  {:28} {count}", case.as_str());
    }
    println!("elapsed {:.2?}", report.elapsed);
    Ok(())
}
