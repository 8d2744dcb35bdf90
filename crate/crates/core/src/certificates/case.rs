//! Combinatorial state for an extreme pair at distance three: the maximum
//! system of internally disjoint length-3 paths and the induced vertex
//! partition.

use serde::Serialize;

use super::check::Checks;
use super::{Context, Orientation};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resistance::conductance_lower_bound;
use crate::spectra::FiedlerData;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseData {
    pub orientation: Orientation,
    /// The two extremes were exchanged so that `a <= b`.
    pub relabeled: bool,
    pub v1: usize,
    pub v2: usize,
    pub gap: f64,
    pub distance: usize,
    pub s: usize,
    /// Middle edges `(u, w)` of the chosen paths, `u` adjacent to `v1` and `w`
    /// adjacent to `v2`.
    pub matching: Vec<(usize, usize)>,
    /// Path vertices adjacent to `v2`.
    pub s1: Vec<usize>,
    /// Path vertices adjacent to `v1`.
    pub s2: Vec<usize>,
    /// Neighbours of `v1` off the paths.
    pub a: Vec<usize>,
    /// Neighbours of `v2` off the paths.
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub l: usize,
    /// First path vertex attaining `l`.
    pub hub: usize,
}

impl CaseData {
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.a.len(), self.b.len(), self.c.len())
    }

    /// Structural invariants, each recorded as a check against `graph` (the
    /// oriented graph the data was built from).
    pub(crate) fn validate(&self, graph: &Graph, checks: &mut Checks) {
        let n = graph.order();
        let (a, b, c) = self.counts();

        let mut seen = vec![0u8; n];
        for &v in [self.v1, self.v2]
            .iter()
            .chain(&self.s1)
            .chain(&self.s2)
            .chain(&self.a)
            .chain(&self.b)
            .chain(&self.c)
        {
            seen[v] += 1;
        }
        checks.holds("partition.covers_each_vertex_once", seen.iter().all(|&k| k == 1));
        checks.holds(
            "partition.order_identity",
            n == a + b + c + 2 * self.s + 2 && self.s1.len() == self.s && self.s2.len() == self.s,
        );
        checks.holds("partition.a_at_most_b", a <= b);

        let side1: Vec<usize> = self.a.iter().copied().chain([self.v1]).collect();
        let side2: Vec<usize> = self.b.iter().copied().chain([self.v2]).collect();
        let cross = side1
            .iter()
            .flat_map(|&u| side2.iter().map(move |&w| (u, w)))
            .filter(|&(u, w)| graph.has_edge(u, w))
            .count();
        checks.count_is_zero("partition.no_edges_between_sides", cross);

        let membership = self.s2.iter().all(|&u| graph.has_edge(self.v1, u) && !graph.has_edge(self.v2, u))
            && self.s1.iter().all(|&w| graph.has_edge(self.v2, w) && !graph.has_edge(self.v1, w))
            && self.a.iter().all(|&u| graph.has_edge(self.v1, u))
            && self.b.iter().all(|&w| graph.has_edge(self.v2, w))
            && self.matching.iter().all(|&(u, w)| graph.has_edge(u, w));
        checks.holds("partition.path_membership", membership);
    }
}

/// Maximum number of internally vertex-disjoint paths `v1 - u - w - v2`.
///
/// At distance three the two neighbourhoods are disjoint and every such path
/// uses one edge between them, so the count is a maximum bipartite matching
/// between `N(v1)` and `N(v2)`. Augmenting paths are tried from the smallest
/// `u` upward over sorted adjacency, which fixes the returned matching.
pub fn disjoint_length3_paths(g: &Graph, v1: usize, v2: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    let n = g.order();
    for index in [v1, v2] {
        if index >= n {
            return Err(Error::VertexOutOfRange { index, order: n });
        }
    }
    if g.distance(v1, v2) != Some(3) {
        return Err(Error::Precondition(format!("vertices {v1} and {v2} are not at distance 3")));
    }
    let left: Vec<usize> = g.neighbors(v1).collect();
    let right: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            if g.has_edge(v1, u) {
                g.neighbors(u).filter(|&w| g.has_edge(w, v2)).collect()
            } else {
                Vec::new()
            }
        })
        .collect();

    fn augment(u: usize, right: &[Vec<usize>], visited: &mut [bool], mate_of_right: &mut [usize]) -> bool {
        for &w in &right[u] {
            if visited[w] {
                continue;
            }
            visited[w] = true;
            if mate_of_right[w] == usize::MAX || augment(mate_of_right[w], right, visited, mate_of_right) {
                mate_of_right[w] = u;
                return true;
            }
        }
        false
    }

    let mut mate_of_right = vec![usize::MAX; n];
    for &u in &left {
        let mut visited = vec![false; n];
        augment(u, &right, &mut visited, &mut mate_of_right);
    }
    let mut matching: Vec<(usize, usize)> = mate_of_right
        .iter()
        .enumerate()
        .filter(|&(_, &u)| u != usize::MAX)
        .map(|(w, &u)| (u, w))
        .collect();
    matching.sort_unstable();
    Ok((matching.len(), matching))
}

/// Lower bound on the complement's algebraic connectivity,
/// `n / (n + 2 + 3 s^2 + 6 s l)`.
pub fn complement_lambda_bound(n: usize, s: usize, l: usize) -> f64 {
    let (n, s, l) = (n as f64, s as f64, l as f64);
    n / (n + 2.0 + 3.0 * s * s + 6.0 * s * l)
}

/// Lower bound on `lambda + lambda_bar`: [`complement_lambda_bound`] plus
/// [`conductance_lower_bound`].
pub fn lambda_sum_bound(n: usize, s: usize, l: usize) -> f64 {
    complement_lambda_bound(n, s, l) + conductance_lower_bound(s, l)
}

/// Case data for `g` given Fiedler data of `g` and of its complement.
///
/// The graph whose Fiedler vector has the larger spread is taken as the
/// carrier of `x`; its extremes must lie at distance three and both `g` and its
/// complement must be connected.
pub fn build_case_data(g: &Graph, f: &FiedlerData, f_bar: &FiedlerData) -> Result<CaseData> {
    let complement = g.complement();
    if !g.is_connected() || !complement.is_connected() {
        return Err(Error::Precondition("graph and complement must both be connected".into()));
    }
    if f_bar.gap > f.gap {
        case_data_for(&complement, f_bar, Orientation::Swapped)
    } else {
        case_data_for(g, f, Orientation::Original)
    }
}

pub(crate) fn case_data_from_context(ctx: &Context<'_>) -> Result<CaseData> {
    let o = ctx.oriented();
    case_data_for(o.graph, o.x, o.orientation)
}

pub(crate) fn case_data_for(graph: &Graph, x: &FiedlerData, orientation: Orientation) -> Result<CaseData> {
    let n = graph.order();
    let (mut v1, mut v2) = (x.v1, x.v2);
    let distance = graph
        .distance(v1, v2)
        .ok_or_else(|| Error::Precondition("extremes are disconnected".into()))?;
    let (s, mut matching) = disjoint_length3_paths(graph, v1, v2)?;

    let mut s2: Vec<usize> = matching.iter().map(|&(u, _)| u).collect();
    let mut s1: Vec<usize> = matching.iter().map(|&(_, w)| w).collect();
    s1.sort_unstable();
    s2.sort_unstable();
    let mut on_path = vec![false; n];
    for &v in s1.iter().chain(&s2).chain([&v1, &v2]) {
        on_path[v] = true;
    }
    let mut a: Vec<usize> = graph.neighbors(v1).filter(|&u| !on_path[u]).collect();
    let mut b: Vec<usize> = graph.neighbors(v2).filter(|&u| !on_path[u]).collect();
    let c: Vec<usize> = (0..n)
        .filter(|&u| !on_path[u] && !graph.has_edge(v1, u) && !graph.has_edge(v2, u))
        .collect();

    let relabeled = a.len() > b.len();
    if relabeled {
        std::mem::swap(&mut v1, &mut v2);
        std::mem::swap(&mut s1, &mut s2);
        std::mem::swap(&mut a, &mut b);
        for pair in matching.iter_mut() {
            *pair = (pair.1, pair.0);
        }
        matching.sort_unstable();
    }

    let count_in = |v: usize, set: &[usize]| set.iter().filter(|&&u| graph.has_edge(v, u)).count();
    let mut l = 0;
    let mut hub = s1[0];
    for (&v, set) in s1.iter().map(|v| (v, &a)).chain(s2.iter().map(|v| (v, &b))) {
        let k = count_in(v, set);
        if k > l {
            l = k;
            hub = v;
        }
    }

    Ok(CaseData {
        orientation,
        relabeled,
        v1,
        v2,
        gap: x.gap,
        distance,
        s,
        matching,
        s1,
        s2,
        a,
        b,
        c,
        l,
        hub,
    })
}
