//! Graphs with both connectivities below one: two pendant vertices hanging
//! off distinct vertices of a clique.

use lapspread::families::{remark, remark_lambda};
use lapspread::spectra::algebraic_connectivity;

fn main() -> lapspread::Result<()> {
    println!("{:>4} {:>18} {:>18} {:>18} {:>10}", "n", "lambda", "lambda_bar", "closed form", "n(1-l)");
    for n in [4, 5, 8, 16, 32, 64] {
        let g = remark(n)?;
        let l = algebraic_connectivity(&g)?.lambda2;
        let lb = algebraic_connectivity(&g.complement())?.lambda2;
        let closed = remark_lambda(n)?;
        println!("{n:>4} {l:>18.15} {lb:>18.15} {closed:>18.15} {:>10.6}", n as f64 * (1.0 - l));
    }
    Ok(())
}
