//! Term-by-term verification of the complement lower bound at distance three.
//!
//! With the partition from [`CaseData`] and `y` the complement's Fiedler
//! vector, every pair `(i, j)` is charged to complement edges in one of five
//! ways: three stars centred at the extremes (via the star's Fiedler
//! inequality), three-hop detours through both extremes for `S1 x S2`,
//! `S1 x A_i` and `S2 x B_i`, and the remaining pairs which are complement
//! edges themselves. Each step is evaluated numerically and the per-edge charge
//! is shown to stay below `n + 2 + 3 s^2 + 6 s l`.

use super::case::CaseData;
use super::check::{Check, Checks};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{algebraic_connectivity, edge_energy, pair_energy, FiedlerData};

#[derive(Clone, Debug, PartialEq)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

impl Star {
    pub fn order(&self) -> usize {
        self.leaves.len() + 1
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.center];
        v.extend(&self.leaves);
        v
    }

    /// `sum over star edges of (y_center - y_leaf)^2`.
    pub fn energy(&self, y: &[f64]) -> f64 {
        self.leaves.iter().map(|&u| (y[self.center] - y[u]).powi(2)).sum()
    }

    /// The star as a standalone graph, centre at index 0.
    pub fn as_graph(&self) -> Graph {
        Graph::from_fn(self.order(), |i, _| i == 0)
    }
}

/// Measured sides of an inequality `smaller <= larger`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairBound {
    pub smaller: f64,
    pub larger: f64,
}

#[derive(Clone, Debug)]
pub struct DeepCheckReport {
    /// Stars centred at `v1`, `v2`, `v2` in that order.
    pub stars: [Star; 3],
    /// Star orders `c+b+s+2`, `c+a+s+1`, `a+s+2`, used as weights.
    pub star_weights: [usize; 3],
    /// Number of pairs outside `A x B`, `S1 x S2`, `S1 x A`, `S2 x B`.
    pub pair_family_size: usize,
    pub star_cover: PairBound,
    pub s1_s2_three_hop: PairBound,
    pub s1_s2_regrouped: PairBound,
    pub s1_a_three_hop: PairBound,
    pub s1_a_relaxed: PairBound,
    pub s2_b_three_hop: PairBound,
    pub s2_b_relaxed: PairBound,
    /// Sum over pairs that are complement edges charged with weight one.
    pub direct_pairs: f64,
    /// `sum over i<j (y_i - y_j)^2 <= coefficient * complement edge energy`.
    pub aggregate: PairBound,
    pub coefficient: f64,
    pub max_edge_weight: f64,
    /// `A_i` for each vertex of `S1`, in `S1` order.
    pub a_sets: Vec<Vec<usize>>,
    /// `B_i` for each vertex of `S2`, in `S2` order.
    pub b_sets: Vec<Vec<usize>>,
    /// Largest squared difference over all pairs of either vector.
    pub m: f64,
    pub checks: Vec<Check>,
}

/// Runs every inequality behind the complement bound for a distance-3 case.
///
/// `g` is the graph carrying `x` (the oriented graph of `cd`), `y` the Fiedler
/// data of its complement.
pub fn deep_check_distance3(
    g: &Graph,
    x: &FiedlerData,
    y: &FiedlerData,
    cd: &CaseData,
    tol: f64,
) -> Result<DeepCheckReport> {
    let n = g.order();
    if cd.distance != 3 {
        return Err(Error::Precondition("deep check needs an extreme pair at distance 3".into()));
    }
    for v in [&x.vector, &y.vector] {
        if v.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: v.len() });
        }
    }
    let comp = g.complement();
    let yv = &y.vector;
    let d = |i: usize, j: usize| (yv[i] - yv[j]).powi(2);
    let (v1, v2) = (cd.v1, cd.v2);
    let (s, l) = (cd.s as f64, cd.l as f64);
    let (a, b, c) = cd.counts();
    let mut checks = Checks::new(tol);

    let sorted = |parts: &[&[usize]]| {
        let mut v: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let stars = [
        Star {
            center: v1,
            leaves: sorted(&[&[v2], &cd.b, &cd.c, &cd.s1]),
        },
        Star {
            center: v2,
            leaves: sorted(&[&cd.a, &cd.c, &cd.s2]),
        },
        Star {
            center: v2,
            leaves: sorted(&[&[v1], &cd.a, &cd.s2]),
        },
    ];
    let star_weights = [c + b + cd.s + 2, c + a + cd.s + 1, a + cd.s + 2];

    let missing = stars
        .iter()
        .flat_map(|st| st.leaves.iter().map(move |&u| (st.center, u)))
        .filter(|&(p, q)| !comp.has_edge(p, q))
        .count();
    checks.count_is_zero("stars.edges_in_complement", missing);

    for (k, star) in stars.iter().enumerate() {
        debug_assert_eq!(star.order(), star_weights[k]);
        // a single edge has connectivity 2, every larger star has 1
        let lambda = algebraic_connectivity(&star.as_graph())?.lambda2;
        let expected = if star.order() == 2 { 2.0 } else { 1.0 };
        checks.at_most(&format!("stars.h{}_connectivity", k + 1), (lambda - expected).abs(), 0.0);
        let verts = star.vertices();
        let inner: Vec<f64> = verts.iter().map(|&v| yv[v]).collect();
        checks.at_least(
            &format!("stars.h{}_fiedler_inequality", k + 1),
            star.order() as f64 * star.energy(yv),
            pair_energy(&inner),
        );
    }

    // membership tables
    let mut tag = vec![Part::C; n];
    for &v in &cd.a {
        tag[v] = Part::A;
    }
    for &v in &cd.b {
        tag[v] = Part::B;
    }
    for &v in &cd.s1 {
        tag[v] = Part::S1;
    }
    for &v in &cd.s2 {
        tag[v] = Part::S2;
    }
    tag[v1] = Part::V1;
    tag[v2] = Part::V2;
    let excluded = |p: Part, q: Part| {
        matches!(
            (p, q),
            (Part::A, Part::B)
                | (Part::B, Part::A)
                | (Part::S1, Part::S2)
                | (Part::S2, Part::S1)
                | (Part::S1, Part::A)
                | (Part::A, Part::S1)
                | (Part::S2, Part::B)
                | (Part::B, Part::S2)
        )
    };

    let mut family_sum = 0.0;
    let mut pair_family_size = 0;
    let mut total = 0.0;
    for j in 1..n {
        for i in 0..j {
            total += d(i, j);
            if !excluded(tag[i], tag[j]) {
                family_sum += d(i, j);
                pair_family_size += 1;
            }
        }
    }
    let weighted_stars: f64 = stars
        .iter()
        .zip(star_weights)
        .map(|(st, w)| w as f64 * st.energy(yv))
        .sum();
    let star_cover = PairBound {
        smaller: family_sum,
        larger: weighted_stars,
    };
    checks.at_most("stars.weighted_energy_covers_family", star_cover.smaller, star_cover.larger);

    // S1 x S2 through i - v1 - v2 - j
    let d12 = d(v1, v2);
    let sum_s1_v1: f64 = cd.s1.iter().map(|&i| d(i, v1)).sum();
    let sum_s2_v2: f64 = cd.s2.iter().map(|&j| d(v2, j)).sum();
    let mut lhs = 0.0;
    let mut hops = 0.0;
    for &i in &cd.s1 {
        for &j in &cd.s2 {
            lhs += d(i, j);
            hops += 3.0 * (d(i, v1) + d12 + d(v2, j));
        }
    }
    let s1_s2_three_hop = PairBound { smaller: lhs, larger: hops };
    let s1_s2_regrouped = PairBound {
        smaller: hops,
        larger: 3.0 * s * sum_s1_v1 + 3.0 * s * sum_s2_v2 + 3.0 * s * s * d12,
    };
    checks.at_most("s1_s2.three_hop", s1_s2_three_hop.smaller, s1_s2_three_hop.larger);
    checks.at_most(
        "s1_s2.regrouped",
        (s1_s2_regrouped.smaller - s1_s2_regrouped.larger).abs(),
        0.0,
    );

    // S1 x A_i through i - v1 - v2 - j, and S2 x B_i through i - v2 - v1 - j
    let a_sets: Vec<Vec<usize>> = cd
        .s1
        .iter()
        .map(|&i| cd.a.iter().copied().filter(|&j| !comp.has_edge(i, j)).collect())
        .collect();
    let b_sets: Vec<Vec<usize>> = cd
        .s2
        .iter()
        .map(|&i| cd.b.iter().copied().filter(|&j| !comp.has_edge(i, j)).collect())
        .collect();
    let max_len = |sets: &[Vec<usize>]| sets.iter().map(Vec::len).max().unwrap_or(0);
    checks.at_most("s1_a.sizes_at_most_l", max_len(&a_sets) as f64, l);
    checks.at_most("s2_b.sizes_at_most_l", max_len(&b_sets) as f64, l);

    let detour = |from: &[usize], sets: &[Vec<usize>], near: usize, far: usize| {
        let (mut lhs, mut hops) = (0.0, 0.0);
        for (&i, set) in from.iter().zip(sets) {
            for &j in set {
                lhs += d(i, j);
                hops += 3.0 * (d(i, near) + d12 + d(far, j));
            }
        }
        (lhs, hops)
    };
    let sum_a_v2: f64 = cd.a.iter().map(|&j| d(v2, j)).sum();
    let sum_b_v1: f64 = cd.b.iter().map(|&j| d(v1, j)).sum();

    let (lhs, hops) = detour(&cd.s1, &a_sets, v1, v2);
    let s1_a_three_hop = PairBound { smaller: lhs, larger: hops };
    let s1_a_relaxed = PairBound {
        smaller: hops,
        larger: 3.0 * s * l * (sum_s1_v1 + sum_a_v2 + d12),
    };
    let (lhs, hops) = detour(&cd.s2, &b_sets, v2, v1);
    let s2_b_three_hop = PairBound { smaller: lhs, larger: hops };
    let s2_b_relaxed = PairBound {
        smaller: hops,
        larger: 3.0 * s * l * (sum_s2_v2 + sum_b_v1 + d12),
    };
    for (name, pb) in [
        ("s1_a.three_hop", s1_a_three_hop),
        ("s1_a.relaxed", s1_a_relaxed),
        ("s2_b.three_hop", s2_b_three_hop),
        ("s2_b.relaxed", s2_b_relaxed),
    ] {
        checks.at_most(name, pb.smaller, pb.larger);
    }

    // remaining excluded pairs are complement edges themselves
    let mut direct = Vec::new();
    for (k, &i) in cd.s1.iter().enumerate() {
        direct.extend(cd.a.iter().filter(|j| !a_sets[k].contains(j)).map(|&j| (i, j)));
    }
    for (k, &i) in cd.s2.iter().enumerate() {
        direct.extend(cd.b.iter().filter(|j| !b_sets[k].contains(j)).map(|&j| (i, j)));
    }
    for &i in &cd.a {
        direct.extend(cd.b.iter().map(|&j| (i, j)));
    }
    checks.count_is_zero(
        "direct_pairs.in_complement",
        direct.iter().filter(|&&(i, j)| !comp.has_edge(i, j)).count(),
    );
    let direct_pairs: f64 = direct.iter().map(|&(i, j)| d(i, j)).sum();

    let lhs_total = family_sum
        + s1_s2_three_hop.smaller
        + s1_a_three_hop.smaller
        + s2_b_three_hop.smaller
        + direct_pairs;
    checks.at_most("aggregate.pairs_partitioned", (lhs_total - total).abs(), 0.0);

    // per-edge charge
    let mut weight = vec![0.0; n * n];
    let mut charge = |i: usize, j: usize, w: f64| {
        let (p, q) = (i.min(j), i.max(j));
        weight[p * n + q] += w;
    };
    for (st, w) in stars.iter().zip(star_weights) {
        for &u in &st.leaves {
            charge(st.center, u, w as f64);
        }
    }
    for &i in &cd.s1 {
        charge(i, v1, 3.0 * s + 3.0 * s * l);
    }
    for &j in &cd.s2 {
        charge(j, v2, 3.0 * s + 3.0 * s * l);
    }
    for &j in &cd.a {
        charge(j, v2, 3.0 * s * l);
    }
    for &j in &cd.b {
        charge(j, v1, 3.0 * s * l);
    }
    charge(v1, v2, 3.0 * s * s + 6.0 * s * l);
    for &(i, j) in &direct {
        charge(i, j, 1.0);
    }
    let mut charged_total = 0.0;
    let mut max_edge_weight: f64 = 0.0;
    let mut charged_non_edges = 0;
    for q in 1..n {
        for p in 0..q {
            let w = weight[p * n + q];
            if w == 0.0 {
                continue;
            }
            if !comp.has_edge(p, q) {
                charged_non_edges += 1;
            }
            max_edge_weight = max_edge_weight.max(w);
            charged_total += w * d(p, q);
        }
    }
    let bounds_total = star_cover.larger
        + s1_s2_regrouped.larger
        + s1_a_relaxed.larger
        + s2_b_relaxed.larger
        + direct_pairs;
    checks.count_is_zero("aggregate.charges_on_complement_edges", charged_non_edges);
    checks.at_most("aggregate.charges_match_bounds", (charged_total - bounds_total).abs(), 0.0);

    let coefficient = n as f64 + 2.0 + 3.0 * s * s + 6.0 * s * l;
    checks.at_most("aggregate.max_edge_charge", max_edge_weight, coefficient);
    let comp_energy = edge_energy(&comp, yv)?;
    checks.at_most("aggregate.charged_within_coefficient", charged_total, coefficient * comp_energy);
    let aggregate = PairBound {
        smaller: total,
        larger: coefficient * comp_energy,
    };
    checks.at_most("aggregate.pair_energy_bound", aggregate.smaller, aggregate.larger);

    let xv = &x.vector;
    let mut m: f64 = 0.0;
    for j in 1..n {
        for i in 0..j {
            m = m.max((xv[i] - xv[j]).powi(2)).max(d(i, j));
        }
    }

    Ok(DeepCheckReport {
        stars,
        star_weights,
        pair_family_size,
        star_cover,
        s1_s2_three_hop,
        s1_s2_regrouped,
        s1_a_three_hop,
        s1_a_relaxed,
        s2_b_three_hop,
        s2_b_relaxed,
        direct_pairs,
        aggregate,
        coefficient,
        max_edge_weight,
        a_sets,
        b_sets,
        m,
        checks: checks.items,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Part {
    V1,
    V2,
    A,
    B,
    C,
    S1,
    S2,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::case::case_data_for;
    use crate::certificates::Orientation;
    use crate::families::{cycle, path};

    fn run(g: &Graph, pick: Option<(usize, usize)>) -> DeepCheckReport {
        let mut x = algebraic_connectivity(g).unwrap();
        if let Some((p, q)) = pick {
            x.v1 = p;
            x.v2 = q;
        }
        let y = algebraic_connectivity(&g.complement()).unwrap();
        let cd = case_data_for(g, &x, Orientation::Original).unwrap();
        deep_check_distance3(g, &x, &y, &cd, 1e-7).unwrap()
    }

    #[test]
    fn p4_degenerate_sets() {
        let r = run(&path(4).unwrap(), None);
        assert!(r.checks.iter().all(|c| !c.is_fail()), "{:?}", r.checks);
        assert!(r.a_sets.iter().all(Vec::is_empty));
        assert_eq!(r.direct_pairs, 0.0);
        assert_eq!(r.star_weights, [3, 2, 3]);
    }

    #[test]
    fn c6_antipodal() {
        let r = run(&cycle(6).unwrap(), Some((0, 3)));
        assert!(r.checks.iter().all(|c| !c.is_fail()), "{:?}", r.checks);
        assert!(r.aggregate.smaller <= r.aggregate.larger);
        for k in 0..3 {
            assert_eq!(r.stars[k].order(), r.star_weights[k]);
        }
    }

    #[test]
    fn rejects_other_distances() {
        let g = path(4).unwrap();
        let x = algebraic_connectivity(&g).unwrap();
        let y = algebraic_connectivity(&g.complement()).unwrap();
        let mut cd = case_data_for(&g, &x, Orientation::Original).unwrap();
        cd.distance = 2;
        assert!(deep_check_distance3(&g, &x, &y, &cd, 1e-7).is_err());
    }
}
