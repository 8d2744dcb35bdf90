//! Audit one graph and print the routed case with every recorded check.

use lapspread::certificates::{audit, CheckStatus, DEFAULT_AUDIT_TOL};
use lapspread::cli::parse_graph6;

fn main() -> lapspread::Result<()> {
    let line = std::env::args().nth(1).unwrap_or_else(|| "GRKxx{".into());
    let g = parse_graph6(&line)?;
    let cert = audit(&g, DEFAULT_AUDIT_TOL)?;
    println!("{line}: case {}, sum = {:.12}", cert.case.as_str(), cert.sum);
    if let Some(cd) = &cert.case_data {
        println!("s = {}, l = {}, sizes (a, b, c) = {:?}", cd.s, cd.l, cd.counts());
    }
    for c in cert.all_checks() {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
        };
        println!("  {status:4} {:50} slack {:+.3e}", c.name, c.slack);
    }
    println!("passed: {}", cert.passed());
    Ok(())
}
