//! Named graph families, including the two-pendant clique family whose
//! algebraic connectivity equals that of its complement and stays below 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Empty,
    /// `K_{n-2}` on vertices `2..n`, plus edges `0-2` and `1-3`.
    Remark,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Empty,
        Family::Remark,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Empty => "empty",
            Family::Remark => "remark",
        }
    }

    fn min_order(self) -> usize {
        match self {
            Family::Cycle => 3,
            Family::Remark => 4,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Family {
                name: s.to_string(),
                order: 0,
                reason: "unknown family".into(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub order: usize,
}

impl FamilySpec {
    pub fn new(family: Family, order: usize) -> Self {
        FamilySpec { family, order }
    }
}

pub fn make(spec: FamilySpec) -> Result<Graph> {
    let n = spec.order;
    if n < spec.family.min_order() {
        return Err(Error::Family {
            name: spec.family.name().into(),
            order: n,
            reason: format!("needs order >= {}", spec.family.min_order()),
        });
    }
    Ok(match spec.family {
        Family::Path => Graph::from_fn(n, |i, j| j == i + 1),
        Family::Cycle => Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1)),
        Family::Complete => Graph::complete(n),
        Family::Star => Graph::from_fn(n, |i, _| i == 0),
        Family::Empty => Graph::empty(n),
        Family::Remark => {
            Graph::from_fn(n, |i, j| (i >= 2 && j >= 2) || (i == 0 && j == 2) || (i == 1 && j == 3))
        }
    })
}

pub fn path(n: usize) -> Result<Graph> {
    make(FamilySpec::new(Family::Path, n))
}

pub fn cycle(n: usize) -> Result<Graph> {
    make(FamilySpec::new(Family::Cycle, n))
}

pub fn star(n: usize) -> Result<Graph> {
    make(FamilySpec::new(Family::Star, n))
}

pub fn remark(n: usize) -> Result<Graph> {
    make(FamilySpec::new(Family::Remark, n))
}

/// Closed form `(n - sqrt(n^2 - 4n + 8)) / 2` for the algebraic connectivity
/// of [`Family::Remark`], evaluated as `(2n - 4) / (n + sqrt(n^2 - 4n + 8))`
/// to avoid cancellation at large `n`.
pub fn remark_lambda(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::Family {
            name: "remark".into(),
            order: n,
            reason: "needs order >= 4".into(),
        });
    }
    let n = n as f64;
    Ok((2.0 * n - 4.0) / (n + (n * n - 4.0 * n + 8.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::algebraic_connectivity;

    #[test]
    fn remark_four_is_a_path() {
        let g = remark(4).unwrap();
        let p4 = Graph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(g, p4);
    }

    #[test]
    fn remark_structure() {
        let g = remark(7).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![2]);
        assert_eq!(g.neighbors(1).collect::<Vec<_>>(), vec![3]);
        assert_eq!(g.edge_count(), 10 + 2);
    }

    #[test]
    fn star_lambda_is_one() {
        let k2 = algebraic_connectivity(&star(2).unwrap()).unwrap();
        assert!((k2.lambda2 - 2.0).abs() <= 1e-10);
        for n in 3..12 {
            let f = algebraic_connectivity(&star(n).unwrap()).unwrap();
            assert!((f.lambda2 - 1.0).abs() <= 1e-10, "n = {n}");
        }
    }

    #[test]
    fn cycle_six() {
        let g = cycle(6).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn remark_lambda_values() {
        let v4 = remark_lambda(4).unwrap();
        assert!((v4 - (2.0 - std::f64::consts::SQRT_2)).abs() <= 1e-15);
        let v10 = remark_lambda(10).unwrap();
        assert!((v10 - (10.0 - 68f64.sqrt()) / 2.0).abs() <= 1e-14);
        assert!((v10 - 0.876894).abs() < 1e-6);
        let f = algebraic_connectivity(&remark(10).unwrap()).unwrap();
        assert!((f.lambda2 - v10).abs() <= 1e-8);
    }

    #[test]
    fn invalid_orders() {
        assert!(remark(3).is_err());
        assert!(remark_lambda(3).is_err());
        assert!(cycle(2).is_err());
        assert!("wheel".parse::<Family>().is_err());
        assert_eq!("remark".parse::<Family>().unwrap(), Family::Remark);
    }
}
