//! Seeded G(n, p) sample audited in parallel; identical output for any
//! thread count.

use lapspread::certificates::{audit, DEFAULT_AUDIT_TOL};
use lapspread::enumeration::random_graph;
use rayon::prelude::*;

fn main() -> lapspread::Result<()> {
    let graphs: Vec<_> = (0..200u64)
        .map(|seed| random_graph(8 + (seed as usize) % 25, 0.3, seed))
        .collect::<lapspread::Result<_>>()?;
    let certs = graphs
        .par_iter()
        .map(|g| audit(g, DEFAULT_AUDIT_TOL))
        .collect::<lapspread::Result<Vec<_>>>()?;
    let min = certs.iter().map(|c| c.sum).fold(f64::INFINITY, f64::min);
    let failed = certs.iter().filter(|c| !c.passed()).count();
    println!("{} graphs, {failed} failed, min lambda + lambda_bar = {min:.12}", certs.len());
    Ok(())
}
