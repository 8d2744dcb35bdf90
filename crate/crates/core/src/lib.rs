//! Laplacian spectra of small graphs and machine-checked certificates for
//! `lambda2(G) + lambda2(complement of G) >= 1`.
//!
//! * [`graph`] bit-packed simple graphs with complement, join and BFS.
//! * [`canon`] exact canonical codes up to order 10.
//! * [`spectra`] a cyclic Jacobi eigensolver, Laplacian spectra and Fiedler
//!   vectors.
//! * [`resistance`] effective resistance from a spectrum, with a variational
//!   cross-check.
//! * [`certificates`] per-graph case routing with every intermediate
//!   inequality evaluated and its slack recorded.
//! * [`enumeration`] one graph per isomorphism class and exhaustive audits.
//! * [`families`] named constructions, including a two-pendant clique family
//!   whose connectivity and complement connectivity both stay below one.
//! * [`cli`] graph6 and edge-list formats, JSON certificates and the
//!   command-line driver.
//!
//! ```
//! use lapspread::{certificates, families};
//!
//! let g = families::path(4)?;
//! let cert = certificates::audit(&g, certificates::DEFAULT_AUDIT_TOL)?;
//! assert!(cert.passed());
//! assert!((cert.sum - 2.0 * (2.0 - 2f64.sqrt())).abs() < 1e-9);
//! # Ok::<(), lapspread::Error>(())
//! ```

pub mod canon;
pub mod certificates;
pub mod cli;
pub mod enumeration;
pub mod families;
pub mod graph;
pub mod resistance;
pub mod spectra;

mod error;

pub use error::{Error, Result};
pub use graph::Graph;
