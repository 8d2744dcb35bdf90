//! Simple undirected graphs with bit-packed adjacency rows.
//!
//! Every row is stored as `ceil(n / 64)` machine words so complementing a
//! graph or intersecting two neighbourhoods is a handful of word operations.
//! Graphs are immutable once built; all constructions return new values.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Builds a graph from unordered index pairs. Duplicate pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::VertexOutOfRange { index, order: n });
                }
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            g.set_edge(i, j, true);
        }
        Ok(g)
    }

    /// Builds a graph from a predicate over unordered pairs `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, i: usize, j: usize, present: bool) {
        debug_assert!(i != j && i < self.n && j < self.n);
        let (wi, bi) = (i * self.words + j / WORD, j % WORD);
        let (wj, bj) = (j * self.words + i / WORD, i % WORD);
        if present {
            self.rows[wi] |= 1 << bi;
            self.rows[wj] |= 1 << bj;
        } else {
            self.rows[wi] &= !(1 << bi);
            self.rows[wj] &= !(1 << bj);
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        (self.rows[i * self.words + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbours of `v` in increasing index order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + b)
            })
        })
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(i, j)` with `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.neighbors(i).filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let tail = self.n % WORD;
        for v in 0..self.n {
            let row = &mut g.rows[v * self.words..(v + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            row[v / WORD] &= !(1 << (v % WORD));
        }
        g
    }

    /// `self` on vertices `0..n`, `other` shifted to `n..n+m`, no cross edges.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(n + other.n);
        for (i, j) in self.edges() {
            g.set_edge(i, j, true);
        }
        for (i, j) in other.edges() {
            g.set_edge(n + i, n + j, true);
        }
        g
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n;
        let mut g = self.disjoint_union(other);
        for i in 0..n {
            for j in 0..other.n {
                g.set_edge(i, n + j, true);
            }
        }
        g
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| self.has_edge(vertices[a], vertices[b]))
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabels vertices so that new vertex `p` is old vertex `perm[p]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        self.induced(perm)
    }

    /// BFS hop counts from `v`; `None` marks unreachable vertices.
    pub fn distances(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[v] = Some(0);
        queue.push_back(v);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances(u)[v]
    }

    /// Largest pairwise distance, `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .distances(s)
                .iter()
                .enumerate()
                .filter_map(|(u, d)| d.map(|_| u))
                .collect();
            comp.sort_unstable();
            for &u in &comp {
                seen[u] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.distances(0).iter().all(Option::is_some)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().collect();
        f.debug_struct("Graph").field("n", &self.n).field("edges", &edges).finish()
    }
}
