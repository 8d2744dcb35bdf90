mod common;

use std::collections::HashMap;

use common::{all_labeled, laplacian_eigenvalues_exact, random_sample, BruteCanon};
use lapspread::enumeration::{enumerate_graphs, random_graph};
use lapspread::spectra::{
    algebraic_connectivity, check_complement_duality, edge_energy, fiedler_quotient_check, laplacian, laplacian_spectrum,
    Spectrum,
};
use lapspread::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_laplacian_invariants(g: &Graph, s: &Spectrum) {
    let n = g.order();
    let tol = 1e-9;
    let ev = s.eigenvalues();
    assert!(ev.windows(2).all(|w| w[0] <= w[1]));
    assert!(ev[0].abs() <= tol, "{ev:?}");
    assert!(ev.iter().all(|&l| l >= -tol && l <= n as f64 + tol));
    let trace: f64 = ev.iter().sum();
    assert!((trace - 2.0 * g.edge_count() as f64).abs() <= n as f64 * tol);
    assert!(s.residual_bound() <= 1e-9);
    assert_eq!(s.zero_multiplicity(), g.components().len());
    for a in 0..n {
        for b in a..n {
            let dot: f64 = s.eigenvector(a).iter().zip(s.eigenvector(b)).map(|(x, y)| x * y).sum();
            let expected = if a == b { 1.0 } else { 0.0 };
            assert!((dot - expected).abs() <= 1e-9);
        }
    }
}

#[test]
fn oracle_polynomial_sanity() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let s = 2f64.sqrt();
    let ev = laplacian_eigenvalues_exact(&p4);
    for (a, b) in ev.iter().zip([0.0, 2.0 - s, 2.0, 2.0 + s]) {
        assert!((a - b).abs() < 1e-12);
    }
    for (a, b) in laplacian_eigenvalues_exact(&Graph::complete(4)).iter().zip([0.0, 4.0, 4.0, 4.0]) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn eigenvalues_match_characteristic_polynomial_up_to_five() {
    for n in 1..=5 {
        // the spectrum is a class invariant, so exact roots are shared per class
        let brute = BruteCanon::new(n);
        let mut cache = HashMap::new();
        for g in all_labeled(n) {
            let exact = cache.entry(brute.code(&g)).or_insert_with(|| laplacian_eigenvalues_exact(&g));
            let s = laplacian_spectrum(&g).unwrap();
            assert_eq!(exact.len(), n);
            for (a, b) in exact.iter().zip(s.eigenvalues()) {
                assert!((a - b).abs() <= 1e-7, "{g:?}: {exact:?} vs {:?}", s.eigenvalues());
            }
        }
    }
}

#[test]
fn invariants_exhaustive_to_six() {
    for n in 1..=6 {
        for g in all_labeled(n) {
            assert_laplacian_invariants(&g, &laplacian_spectrum(&g).unwrap());
        }
    }
}

#[test]
fn invariants_on_random_graphs_to_thirty_two() {
    for g in random_sample(300, 2, 32, 11) {
        assert_laplacian_invariants(&g, &laplacian_spectrum(&g).unwrap());
        let f = algebraic_connectivity(&g).unwrap();
        let lx = laplacian(&g).mul_vec(&f.vector);
        let r: f64 = lx
            .iter()
            .zip(&f.vector)
            .map(|(a, x)| (a - f.lambda2 * x).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(r <= 1e-9);
        assert!((f.vector.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() <= 1e-9);
        assert!(f.vector.iter().sum::<f64>().abs() <= 1e-9);
        assert_eq!(f.lambda2 > 1e-9, g.is_connected());
    }
}

#[test]
fn complement_duality_on_all_classes_to_eight() {
    for n in 2..=8 {
        for g in enumerate_graphs(n, false).unwrap() {
            assert!(check_complement_duality(&g).unwrap() <= 1e-8);
        }
    }
    assert!(check_complement_duality(&random_graph(8, 0.5, 1).unwrap()).unwrap() <= 1e-8);
}

#[test]
fn fiedler_quotient_on_random_vectors() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let graphs = random_sample(100, 2, 20, 99);
    for k in 0..10_000 {
        let g = &graphs[k % graphs.len()];
        let z: Vec<f64> = (0..g.order()).map(|_| rng.random_range(-1.0..1.0)).collect();
        assert!(fiedler_quotient_check(g, &z).unwrap() >= -1e-9);
    }
    for g in &graphs {
        let f = algebraic_connectivity(g).unwrap();
        let slack = fiedler_quotient_check(g, &f.vector).unwrap();
        assert!(slack.abs() <= 1e-9);
        assert!((edge_energy(g, &f.vector).unwrap() - f.lambda2).abs() <= 1e-9);
    }
}

#[test]
fn dense_large_orders_meet_residual_target() {
    let graphs = [
        lapspread::families::remark(128).unwrap(),
        Graph::complete(256),
        random_graph(160, 0.8, 3).unwrap(),
    ];
    for g in &graphs {
        let s = laplacian_spectrum(g).unwrap();
        assert!(s.residual_bound() <= 1e-9);
        let trace: f64 = s.eigenvalues().iter().sum();
        assert!((trace - 2.0 * g.edge_count() as f64).abs() <= 1e-9 * g.order() as f64 * g.order() as f64);
    }
}

proptest! {
    #[test]
    fn spectra_of_random_graphs(n in 2usize..24, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, seed).unwrap();
        let s = laplacian_spectrum(&g).unwrap();
        prop_assert!(s.residual_bound() <= 1e-9);
        prop_assert_eq!(s.zero_multiplicity(), g.components().len());
        prop_assert!(check_complement_duality(&g).unwrap() <= 1e-8);
    }
}
