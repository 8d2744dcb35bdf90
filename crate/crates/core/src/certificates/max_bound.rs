//! Checks behind `max(lambda, lambda_bar) >= 1 - 110 n^(-1/3)`.
//!
//! The chain only has content when both connectivities are below one and the
//! spread of the oriented Fiedler vector satisfies `gap^2 >= 1/2`; outside that
//! case the report carries no checks.

use serde::Serialize;

use super::case::{case_data_for, complement_lambda_bound};
use super::check::{Check, Checks};
use super::Context;
use crate::error::Result;
use crate::graph::Graph;
use crate::resistance::resistance_from_spectrum;

/// `1 - 110 n^(-1/3)`. Negative, hence vacuous, below `n = 1_331_000`.
pub fn max_lambda_floor(n: usize) -> f64 {
    1.0 - 110.0 / (n as f64).cbrt()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MaxBoundReport {
    pub in_case: bool,
    /// `max(lambda, lambda_bar)`.
    pub max_lambda: f64,
    pub floor: f64,
    /// Path vertex attaining `l` and the extreme on the far side of it.
    pub hub: Option<(usize, usize)>,
    #[serde(skip)]
    pub checks: Vec<Check>,
}

pub fn audit_max_bound(g: &Graph, tol: f64) -> Result<MaxBoundReport> {
    max_bound(&Context::new(g)?, tol)
}

pub(crate) fn max_bound(ctx: &Context<'_>, tol: f64) -> Result<MaxBoundReport> {
    let n = ctx.g.order();
    let mut report = MaxBoundReport {
        in_case: false,
        max_lambda: ctx.lambda().max(ctx.lambda_bar()),
        floor: max_lambda_floor(n),
        hub: None,
        checks: Vec::new(),
    };
    if !(ctx.g_connected && ctx.gc_connected) {
        return Ok(report);
    }
    let o = ctx.oriented();
    let (lam, lam_bar) = (o.x.lambda2, o.y.lambda2);
    let gap = o.x.gap;
    if lam >= 1.0 || lam_bar >= 1.0 || gap * gap < 0.5 {
        return Ok(report);
    }
    report.in_case = true;
    let mut checks = Checks::new(tol);
    let at_three = o.graph.distance(o.x.v1, o.x.v2) == Some(3);
    checks.holds("max_bound.extreme_distance_is_3", at_three);
    if !at_three {
        report.checks = checks.items;
        return Ok(report);
    }

    let cd = case_data_for(o.graph, o.x, o.orientation)?;
    let (s, l) = (cd.s as f64, cd.l as f64);
    checks.at_least("max_bound.lambda_at_least_paths_over_six", lam, s / 6.0);
    checks.at_most("max_bound.at_most_five_paths", s, 5.0);

    // A hub in S2 is adjacent to v1 and reaches v2 through l + 1 middle
    // vertices; a hub in S1 is the mirror image.
    let x = &o.x.vector;
    let k = cd.hub;
    let (near, far) = if cd.s2.contains(&k) { (cd.v1, cd.v2) } else { (cd.v2, cd.v1) };
    report.hub = Some((k, far));
    let resistance = resistance_from_spectrum(o.spec)?.get(k, far);
    let spread = (x[k] - x[far]).abs();
    checks.holds("max_bound.hub_adjacent_to_extreme", o.graph.has_edge(k, near));
    checks.at_least("max_bound.hub_spread", spread, (1.0 - lam) * (x[cd.v1] - x[cd.v2]).abs());
    checks.at_most("max_bound.hub_resistance", resistance, 2.0 / (l + 1.0));
    checks.at_least("max_bound.lambda_at_least_hub_energy", lam, spread * spread / resistance);
    checks.at_least("max_bound.lambda_floor_from_hub", lam, 1.0 - 2.0 / (l + 1.0).sqrt());

    let coarse = n as f64 / (n as f64 + 80.0 + 30.0 * l);
    checks.at_least(
        "max_bound.complement_bound_coarsened",
        complement_lambda_bound(n, cd.s, cd.l),
        coarse,
    );
    checks.at_least("max_bound.complement_floor", lam_bar, coarse);

    let nf = n as f64;
    let third = nf.cbrt();
    let few_vertices = nf < l.powf(1.5);
    checks.implies_at_least("max_bound.few_vertices_lambda", few_vertices, lam, 1.0 - 2.0 / third);
    checks.implies_at_least("max_bound.many_vertices_complement", !few_vertices, lam_bar, report.floor);
    checks.at_least("max_bound.floor", report.max_lambda, report.floor);

    report.checks = checks.items;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, remark, star};

    #[test]
    fn floor_values() {
        assert!((max_lambda_floor(1000) + 10.0).abs() < 1e-12);
        assert!(max_lambda_floor(1_331_000).abs() < 1e-9);
    }

    #[test]
    fn p4_in_case() {
        let r = audit_max_bound(&path(4).unwrap(), 1e-7).unwrap();
        assert!(r.in_case);
        assert!(r.checks.iter().all(|c| !c.is_fail()), "{:?}", r.checks);
        assert!((r.max_lambda - (2.0 - 2f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn remark_twenty() {
        let r = audit_max_bound(&remark(20).unwrap(), 1e-7).unwrap();
        assert!(r.in_case);
        assert!(r.checks.iter().all(|c| !c.is_fail()), "{:?}", r.checks);
        assert!((r.max_lambda - (20.0 - 328f64.sqrt()) / 2.0).abs() < 1e-8);
    }

    #[test]
    fn star_out_of_case() {
        let r = audit_max_bound(&star(5).unwrap(), 1e-7).unwrap();
        assert!(!r.in_case && r.checks.is_empty());
    }
}
