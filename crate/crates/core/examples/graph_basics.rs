//! Build graphs, take complements and joins, and compare canonical codes.

use lapspread::canon::{canonical_code, is_isomorphic};
use lapspread::cli::emit_graph6;
use lapspread::Graph;

fn main() -> lapspread::Result<()> {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    let comp = p4.complement();
    println!("P4 {} edges, complement {} edges", p4.edge_count(), comp.edge_count());
    println!("P4 is self-complementary: {}", is_isomorphic(&p4, &comp)?);
    println!("graph6: {}", emit_graph6(&p4)?);

    // K1 joined to two isolated vertices is the star on three vertices
    let cone = Graph::empty(1).join(&Graph::empty(2));
    println!("cone degrees {:?}, code {:#x}", cone.degrees(), canonical_code(&cone)?.bits());

    let relabeled = p4.permuted(&[2, 0, 3, 1]);
    assert_eq!(canonical_code(&p4)?, canonical_code(&relabeled)?);
    println!("diameter {:?}, distances from 0: {:?}", p4.diameter(), p4.distances(0));
    Ok(())
}
