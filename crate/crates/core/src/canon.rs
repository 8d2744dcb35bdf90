//! Exact canonical labelling for small graphs.
//!
//! The canonical code of a graph is the minimum upper-triangle code over all
//! leaves of an individualization-refinement search tree. Each node refines an
//! ordered vertex partition to an equitable one, then branches on the first
//! non-singleton cell. Because every step is label-invariant, isomorphic graphs
//! produce the same set of leaf codes and therefore the same minimum; and since
//! a code determines its labelled graph, distinct minima mean non-isomorphic
//! graphs. Automorphisms found from equal leaf codes prune sibling branches that
//! lie in the same orbit.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANON_ORDER: usize = 10;

/// Isomorphism-invariant code of a graph of order at most [`MAX_CANON_ORDER`].
///
/// `bits` holds the upper triangle in column order (`(0,1), (0,2), (1,2),
/// (0,3), ...`), first pair in the most significant position, so integer
/// comparison is lexicographic comparison of the bit strings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalCode {
    order: u8,
    bits: u64,
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonically labelled representative this code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let m = pair_count(n);
        let mut k = 0;
        Graph::from_fn(n, |_, _| {
            // from_fn visits pairs in the same column order as the code
            let bit = (self.bits >> (m - 1 - k)) & 1 == 1;
            k += 1;
            bit
        })
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = pair_count(self.order()).div_ceil(4).max(1);
        write!(f, "{}:{:0width$x}", self.order, self.bits, width = digits)
    }
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Upper-triangle code of `g` relabelled so that position `p` holds vertex
/// `perm[p]`.
pub fn labeled_code(g: &Graph, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..perm.len() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_labeling(g).map(|(code, _)| code)
}

/// Canonical code together with a labelling attaining it: relabelling `g` by
/// `perm` (see [`Graph::permuted`]) yields `code.to_graph()`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalCode, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_CANON_ORDER,
        });
    }
    if n <= 1 {
        return Ok((CanonicalCode { order: n as u8, bits: 0 }, (0..n).collect()));
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | (1 << u)))
        .collect();
    let mut search = Search {
        g,
        adj,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    search.descend(root, &mut Vec::new());
    let (bits, perm) = search.best.expect("search visits at least one leaf");
    Ok((CanonicalCode { order: n as u8, bits }, perm))
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    canonical_labeling(g).map(|(code, _)| code.to_graph())
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.order() == h.order() && canonical_code(g)? == canonical_code(h)?)
}

type Partition = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<u16>,
    first: Option<(u64, Vec<usize>)>,
    best: Option<(u64, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn refine(&self, mut cells: Partition) -> Partition {
        loop {
            let mut changed = false;
            let mut k = 0;
            while k < cells.len() {
                let splitter = cells[k].iter().fold(0u16, |m, &v| m | (1 << v));
                let mut next = Vec::with_capacity(cells.len());
                for cell in cells {
                    if cell.len() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> = cell
                        .iter()
                        .map(|&v| ((self.adj[v] & splitter).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                    if keyed[0].0 != keyed[keyed.len() - 1].0 {
                        changed = true;
                    }
                }
                cells = next;
                k += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    fn descend(&mut self, cells: Partition, fixed: &mut Vec<usize>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.visit_leaf(perm);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if self.same_orbit(v, &explored, fixed) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend(cells[target + 1..].iter().cloned());
            fixed.push(v);
            self.descend(child, fixed);
            fixed.pop();
            explored.push(v);
        }
    }

    fn visit_leaf(&mut self, perm: Vec<usize>) {
        let code = labeled_code(self.g, &perm);
        for known in [&self.first, &self.best].into_iter().flatten() {
            if known.0 == code {
                // known.1[p] -> perm[p] preserves adjacency
                let mut gamma = vec![0; perm.len()];
                for (p, &v) in known.1.iter().enumerate() {
                    gamma[v] = perm[p];
                }
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
                return;
            }
        }
        if self.first.is_none() {
            self.first = Some((code, perm.clone()));
        }
        if self.best.as_ref().is_none_or(|b| code < b.0) {
            self.best = Some((code, perm));
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `fixed` pointwise.
    fn same_orbit(&self, v: usize, explored: &[usize], fixed: &[usize]) -> bool {
        if explored.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if fixed.iter().any(|&f| gamma[f] != f) {
                continue;
            }
            for (a, &b) in gamma.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap()
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for v in 0..n {
                if !prefix.contains(&v) {
                    prefix.push(v);
                    rec(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), n, &mut out);
        out
    }

    #[test]
    fn p4_is_self_complementary() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(canonical_code(&p4), canonical_code(&p4.complement()));
    }

    #[test]
    fn star_differs_from_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&p4).unwrap(), canonical_code(&star).unwrap());
    }

    #[test]
    fn paw_relabelings_share_one_code() {
        let g = paw();
        let codes: std::collections::HashSet<_> = all_perms(4)
            .iter()
            .map(|p| canonical_code(&g.permuted(p)).unwrap())
            .collect();
        assert_eq!(codes.len(), 1);
    }

    #[test]
    fn labeling_reproduces_code() {
        let g = paw();
        let (code, perm) = canonical_labeling(&g).unwrap();
        assert_eq!(labeled_code(&g, &perm), code.bits());
        assert_eq!(g.permuted(&perm), code.to_graph());
        assert_eq!(canonical_graph(&code.to_graph()).unwrap(), code.to_graph());
    }

    #[test]
    fn highly_symmetric_graphs_at_the_limit() {
        for g in [Graph::empty(10), Graph::complete(10)] {
            let code = canonical_code(&g).unwrap();
            assert_eq!(code.to_graph(), g);
        }
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        let shuffled = petersen.permuted(&[3, 7, 1, 9, 0, 4, 8, 2, 6, 5]);
        assert_eq!(canonical_code(&petersen), canonical_code(&shuffled));
    }

    #[test]
    fn rejects_large_orders() {
        assert_eq!(
            canonical_code(&Graph::empty(11)),
            Err(Error::OrderTooLarge { order: 11, max: 10 })
        );
    }

    #[test]
    fn display_is_stable() {
        let k2 = Graph::complete(2);
        assert_eq!(canonical_code(&k2).unwrap().to_string(), "2:1");
        assert_eq!(canonical_code(&Graph::empty(1)).unwrap().to_string(), "1:0");
    }
}
