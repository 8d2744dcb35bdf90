//! Effective resistance from the spectrum, checked against the variational
//! minimisation, plus series and parallel examples.

use lapspread::families::{path, remark};
use lapspread::resistance::{resistance_matrix, resistance_variational_oracle};

fn main() -> lapspread::Result<()> {
    let p = path(5)?;
    let r = resistance_matrix(&p)?;
    println!("path of 5: R(0,4) = {:.12} (series, expect 4)", r.get(0, 4));

    let g = remark(8)?;
    let r = resistance_matrix(&g)?;
    for (a, b) in [(0, 1), (0, 2), (2, 5)] {
        let oracle = resistance_variational_oracle(&g, a, b)?;
        println!("remark(8) R({a},{b}) = {:.12}, variational {:.12}", r.get(a, b), oracle);
    }
    println!("worst triangle excess {:.1e}", r.worst_triangle_excess());
    Ok(())
}
