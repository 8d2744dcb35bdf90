//! Laplacian spectrum, Fiedler vector and complement duality of a small graph.

use lapspread::families::cycle;
use lapspread::spectra::{algebraic_connectivity, check_complement_duality, laplacian_spectrum};

fn main() -> lapspread::Result<()> {
    let g = cycle(6)?;
    let s = laplacian_spectrum(&g)?;
    println!("C6 eigenvalues {:?}", s.eigenvalues());
    println!("residual {:.1e}, zero multiplicity {}", s.residual_bound(), s.zero_multiplicity());

    let f = algebraic_connectivity(&g)?;
    println!("lambda2 = {:.12}, extremes ({}, {}), spread {:.6}", f.lambda2, f.v1, f.v2, f.gap);
    println!("Fiedler vector {:?}", f.vector);

    let lc = algebraic_connectivity(&g.complement())?.lambda2;
    println!("lambda + lambda_bar = {:.12}", f.lambda2 + lc);
    println!("duality residual {:.1e}", check_complement_duality(&g)?);
    Ok(())
}
