//! Per-graph certificates for `lambda(G) + lambda(complement) >= 1` and for
//! the companion lower bound on `max(lambda(G), lambda(complement))`.
//!
//! [`audit`] routes a graph through the case analysis (disconnected sides,
//! small spread, large connectivity, extreme-pair distance) and evaluates every
//! inequality used along that route as a named [`Check`]. Inequalities whose
//! premise does not hold are kept with status
//! [`CheckStatus::NotApplicable`].

mod case;
mod check;
mod deep;
mod max_bound;

use serde::Serialize;

pub use case::{build_case_data, complement_lambda_bound, disjoint_length3_paths, lambda_sum_bound, CaseData};
pub use check::{Check, CheckStatus, Relation};
pub use deep::{deep_check_distance3, DeepCheckReport, PairBound, Star};
pub use max_bound::{audit_max_bound, max_lambda_floor, MaxBoundReport};

use check::Checks;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resistance::{conductance_lower_bound, resistance_from_spectrum};
use crate::spectra::{complement_duality_residual, fiedler_from_spectrum, laplacian_spectrum, FiedlerData, Spectrum};

/// Tolerance applied to every audit check.
pub const DEFAULT_AUDIT_TOL: f64 = 1e-7;

/// Which graph carries the Fiedler vector with the larger spread.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Original,
    /// The complement carries it; `x` and `y` refer to the complement and the
    /// input graph respectively.
    Swapped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseTag {
    #[serde(rename = "trivial-n2")]
    TrivialOrderTwo,
    #[serde(rename = "disconnected")]
    Disconnected,
    #[serde(rename = "complement-disconnected")]
    ComplementDisconnected,
    /// Spread of both Fiedler vectors below one.
    #[serde(rename = "gap-below-one")]
    GapBelowOne,
    /// One side already has algebraic connectivity at least one.
    #[serde(rename = "connectivity-at-least-one")]
    ConnectivityAtLeastOne,
    #[serde(rename = "distance-at-most-2")]
    DistanceAtMost2,
    #[serde(rename = "distance-above-3")]
    DistanceAbove3,
    #[serde(rename = "distance-3")]
    Distance3,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::TrivialOrderTwo => "trivial-n2",
            CaseTag::Disconnected => "disconnected",
            CaseTag::ComplementDisconnected => "complement-disconnected",
            CaseTag::GapBelowOne => "gap-below-one",
            CaseTag::ConnectivityAtLeastOne => "connectivity-at-least-one",
            CaseTag::DistanceAtMost2 => "distance-at-most-2",
            CaseTag::DistanceAbove3 => "distance-above-3",
            CaseTag::Distance3 => "distance-3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Graph,
    Complement,
}

/// Dominating vertex whose removal disconnects `side`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub side: Side,
    pub vertex: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Equality {
    /// `|sum - 1| <= tol`.
    pub flag: bool,
    /// Structural characterization holds for the graph or its complement.
    pub structural: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub order: usize,
    pub case: CaseTag,
    pub orientation: Orientation,
    /// Extremes `(v1, v2)` of the oriented Fiedler vector.
    pub extremes: (usize, usize),
    /// Algebraic connectivity of the input graph.
    pub lambda: f64,
    /// Algebraic connectivity of its complement.
    pub lambda_bar: f64,
    pub sum: f64,
    pub case_data: Option<CaseData>,
    pub checks: Vec<Check>,
    pub equality: Equality,
    pub deep: Option<DeepCheckReport>,
    pub max_bound: Option<MaxBoundReport>,
}

impl Certificate {
    /// Top-level checks followed by those of the deep and max-bound reports.
    pub fn all_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .chain(self.deep.iter().flat_map(|d| &d.checks))
            .chain(self.max_bound.iter().flat_map(|m| &m.checks))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.all_checks().filter(|c| c.is_fail())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Both spectra and Fiedler data of a graph and its complement.
pub(crate) struct Context<'a> {
    pub g: &'a Graph,
    pub gc: Graph,
    pub spec_g: Spectrum,
    pub spec_c: Spectrum,
    pub f_g: FiedlerData,
    pub f_c: FiedlerData,
    pub g_connected: bool,
    pub gc_connected: bool,
}

pub(crate) struct Oriented<'b> {
    pub orientation: Orientation,
    pub graph: &'b Graph,
    pub comp: &'b Graph,
    pub spec: &'b Spectrum,
    pub x: &'b FiedlerData,
    pub y: &'b FiedlerData,
}

impl<'a> Context<'a> {
    pub fn new(g: &'a Graph) -> Result<Self> {
        if g.order() < 2 {
            return Err(Error::OrderTooSmall {
                order: g.order(),
                required: 2,
            });
        }
        let gc = g.complement();
        let spec_g = laplacian_spectrum(g)?;
        let spec_c = laplacian_spectrum(&gc)?;
        let f_g = fiedler_from_spectrum(&spec_g)?;
        let f_c = fiedler_from_spectrum(&spec_c)?;
        Ok(Context {
            g,
            g_connected: g.is_connected(),
            gc_connected: gc.is_connected(),
            gc,
            spec_g,
            spec_c,
            f_g,
            f_c,
        })
    }

    pub fn lambda(&self) -> f64 {
        self.f_g.lambda2
    }

    pub fn lambda_bar(&self) -> f64 {
        self.f_c.lambda2
    }

    /// Swaps to the complement only when its spread is strictly larger.
    pub fn oriented(&self) -> Oriented<'_> {
        if self.f_c.gap > self.f_g.gap {
            Oriented {
                orientation: Orientation::Swapped,
                graph: &self.gc,
                comp: self.g,
                spec: &self.spec_c,
                x: &self.f_c,
                y: &self.f_g,
            }
        } else {
            Oriented {
                orientation: Orientation::Original,
                graph: self.g,
                comp: &self.gc,
                spec: &self.spec_g,
                x: &self.f_g,
                y: &self.f_c,
            }
        }
    }
}

/// `Some(v)` for the first vertex of degree `n - 1` whose removal leaves a
/// disconnected graph.
pub fn is_join_of_cone_and_disconnected(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    (0..n).find(|&v| g.degree(v) == n - 1 && !g.remove_vertex(v).is_connected())
}

#[derive(Clone, Debug)]
pub struct DisconnectedReport {
    /// Algebraic connectivity of the complement.
    pub lambda_bar: f64,
    /// `|lambda_bar - 1| <= tol`.
    pub equality: bool,
    /// Cone vertex of the complement, if it has the join structure.
    pub structural: Option<usize>,
    pub checks: Vec<Check>,
}

/// For disconnected `g`: the complement has algebraic connectivity at least
/// one, with equality exactly when it is a cone over a disconnected graph.
pub fn lemma_disconnected_check(g: &Graph, tol: f64) -> Result<DisconnectedReport> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            required: 2,
        });
    }
    if g.is_connected() {
        return Err(Error::Connected);
    }
    let spec = laplacian_spectrum(g)?;
    let comp = g.complement();
    let lambda_bar = fiedler_from_spectrum(&laplacian_spectrum(&comp)?)?.lambda2;
    let mut checks = Checks::new(tol);
    disconnected_checks(g, &spec, &comp, lambda_bar, &mut checks, "disconnected");
    let equality = (lambda_bar - 1.0).abs() <= tol;
    let structural = is_join_of_cone_and_disconnected(&comp);
    Ok(DisconnectedReport {
        lambda_bar,
        equality,
        structural,
        checks: checks.items,
    })
}

fn disconnected_checks(g: &Graph, spec: &Spectrum, comp: &Graph, lambda_bar: f64, checks: &mut Checks, prefix: &str) {
    let n = g.order();
    let largest = g.components().iter().map(Vec::len).max().unwrap_or(0);
    checks.at_most(
        &format!("{prefix}.largest_eigenvalue_within_component"),
        spec.eigenvalue(n - 1),
        largest as f64,
    );
    checks.at_least(&format!("{prefix}.complement_at_least_one"), lambda_bar, 1.0);
    let equality = (lambda_bar - 1.0).abs() <= checks.tol;
    checks.holds(
        &format!("{prefix}.equality_iff_cone"),
        equality == is_join_of_cone_and_disconnected(comp).is_some(),
    );
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IdentityReport {
    /// `sum over i<j of (x_i - x_j)^2 (y_i - y_j)^2`.
    pub lhs: f64,
    /// `|x|^2 |y|^2`.
    pub rhs: f64,
    pub slack: f64,
    /// `2n sum x_i^2 y_i^2 + 2 |x|^2 |y|^2 + 4 (x . y)^2`, which equals `2 lhs`.
    pub expansion: f64,
    /// `|2 lhs - expansion| / max(1, expansion)`.
    pub expansion_error: f64,
}

/// Checks `sum over i<j of (x_i-x_j)^2 (y_i-y_j)^2 >= |x|^2 |y|^2` for
/// zero-sum `x`, `y`, together with its exact expansion.
///
/// The expansion carries a factor `n` on `sum x_i^2 y_i^2`; it comes from
/// the diagonal terms appearing once per partner index.
pub fn lemma_identity_check(x: &[f64], y: &[f64]) -> Result<IdentityReport> {
    let n = x.len();
    if y.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: y.len() });
    }
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let scale = |v: &[f64]| v.iter().map(|t| t.abs()).sum::<f64>().max(1.0);
    if sx.abs() > 1e-8 * scale(x) || sy.abs() > 1e-8 * scale(y) {
        return Err(Error::NonZeroSum(sx, sy));
    }
    let mut lhs = 0.0;
    for j in 1..n {
        for i in 0..j {
            lhs += (x[i] - x[j]).powi(2) * (y[i] - y[j]).powi(2);
        }
    }
    let xx: f64 = x.iter().map(|t| t * t).sum();
    let yy: f64 = y.iter().map(|t| t * t).sum();
    let xy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let x2y2: f64 = x.iter().zip(y).map(|(a, b)| a * a * b * b).sum();
    let rhs = xx * yy;
    let expansion = 2.0 * n as f64 * x2y2 + 2.0 * rhs + 4.0 * xy * xy;
    Ok(IdentityReport {
        lhs,
        rhs,
        slack: lhs - rhs,
        expansion,
        expansion_error: (2.0 * lhs - expansion).abs() / expansion.max(1.0),
    })
}

#[derive(Clone, Debug)]
pub struct DiameterReport {
    /// Distance between the Fiedler extremes.
    pub extreme_distance: usize,
    pub lambda: f64,
    pub diameter: usize,
    pub checks: Vec<Check>,
}

/// Extremes within distance two force `lambda >= 1`, and so does diameter
/// at most two.
pub fn lemma_diameter_check(g: &Graph, tol: f64) -> Result<DiameterReport> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall {
            order: g.order(),
            required: 2,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let f = fiedler_from_spectrum(&laplacian_spectrum(g)?)?;
    let mut checks = Checks::new(tol);
    let report = diameter_checks(g, &f, &mut checks, "diameter");
    Ok(DiameterReport {
        checks: checks.items,
        ..report
    })
}

fn diameter_checks(g: &Graph, f: &FiedlerData, checks: &mut Checks, prefix: &str) -> DiameterReport {
    let d = g.distance(f.v1, f.v2).expect("connected");
    let diameter = g.diameter().expect("connected");
    checks.implies_at_least(&format!("{prefix}.close_extremes_force_one"), d <= 2, f.lambda2, 1.0);
    checks.implies_at_least(&format!("{prefix}.small_diameter_forces_one"), diameter < 3, f.lambda2, 1.0);
    DiameterReport {
        extreme_distance: d,
        lambda: f.lambda2,
        diameter,
        checks: Vec::new(),
    }
}

/// Worst slack of `x_i >= (1 - lambda) x_{v1}` over neighbours `i` of `v1`
/// and of `x_j <= (1 - lambda) x_{v2}` over neighbours `j` of `v2`.
/// Infinite when both extremes are isolated.
pub fn neighbor_bound_check(g: &Graph, f: &FiedlerData) -> Result<f64> {
    let n = g.order();
    if f.vector.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: f.vector.len(),
        });
    }
    let x = &f.vector;
    let shrink = 1.0 - f.lambda2;
    let upper = g.neighbors(f.v1).map(|i| x[i] - shrink * x[f.v1]);
    let lower = g.neighbors(f.v2).map(|j| shrink * x[f.v2] - x[j]);
    Ok(upper.chain(lower).fold(f64::INFINITY, f64::min))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinEnergyBound {
    /// `sum over i<j of min((x_i-x_j)^2, (y_i-y_j)^2)`.
    pub minsum: f64,
    /// Largest squared difference over both vectors.
    pub m: f64,
    /// `sum over i<j of (x_i-x_j)^2 (y_i-y_j)^2`.
    pub identity_lhs: f64,
    pub inverse_m: f64,
}

/// Lower bound on `lambda + lambda_bar` through pairwise minima of the two
/// Fiedler vectors: the sum is at least `minsum`, which is at least `1 / M`.
pub fn min_energy_bound(x: &FiedlerData, y: &FiedlerData) -> Result<MinEnergyBound> {
    let (x, y) = (&x.vector, &y.vector);
    let n = x.len();
    if y.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: y.len() });
    }
    let (mut minsum, mut m, mut identity_lhs) = (0.0, 0.0f64, 0.0);
    for j in 1..n {
        for i in 0..j {
            let dx = (x[i] - x[j]).powi(2);
            let dy = (y[i] - y[j]).powi(2);
            minsum += dx.min(dy);
            m = m.max(dx).max(dy);
            identity_lhs += dx * dy;
        }
    }
    Ok(MinEnergyBound {
        minsum,
        m,
        identity_lhs,
        inverse_m: 1.0 / m,
    })
}

/// Lower-bound certificate together with the max-bound report.
pub fn audit(g: &Graph, tol: f64) -> Result<Certificate> {
    let ctx = Context::new(g)?;
    let mut cert = sum_bound(&ctx, tol)?;
    cert.max_bound = Some(max_bound::max_bound(&ctx, tol)?);
    Ok(cert)
}

/// Routes `g` through the case analysis for `lambda + lambda_bar >= 1`.
pub fn audit_sum_bound(g: &Graph, tol: f64) -> Result<Certificate> {
    sum_bound(&Context::new(g)?, tol)
}

fn sum_bound(ctx: &Context<'_>, tol: f64) -> Result<Certificate> {
    let g = ctx.g;
    let n = g.order();
    let (lambda, lambda_bar) = (ctx.lambda(), ctx.lambda_bar());
    let sum = lambda + lambda_bar;
    let mut checks = Checks::new(tol);

    checks.at_most(
        "spectrum.complement_duality",
        complement_duality_residual(&ctx.spec_g, &ctx.spec_c),
        0.0,
    );
    checks.holds(
        "spectrum.zero_multiplicity_is_component_count",
        ctx.spec_g.zero_multiplicity() == g.components().len()
            && ctx.spec_c.zero_multiplicity() == ctx.gc.components().len(),
    );
    checks.at_least("sum.at_least_one", sum, 1.0);

    let witness = is_join_of_cone_and_disconnected(g)
        .map(|vertex| Witness {
            side: Side::Graph,
            vertex,
        })
        .or_else(|| {
            is_join_of_cone_and_disconnected(&ctx.gc).map(|vertex| Witness {
                side: Side::Complement,
                vertex,
            })
        });
    let equality = Equality {
        flag: (sum - 1.0).abs() <= tol,
        structural: witness.is_some(),
        witness,
    };
    checks.holds("equality.spectral_matches_structural", equality.flag == equality.structural);

    let o = ctx.oriented();
    let mut cert = Certificate {
        order: n,
        case: CaseTag::TrivialOrderTwo,
        orientation: o.orientation,
        extremes: (o.x.v1, o.x.v2),
        lambda,
        lambda_bar,
        sum,
        case_data: None,
        checks: Vec::new(),
        equality,
        deep: None,
        max_bound: None,
    };

    if n == 2 {
        cert.checks = checks.items;
        return Ok(cert);
    }
    if !ctx.g_connected {
        cert.case = CaseTag::Disconnected;
        disconnected_checks(g, &ctx.spec_g, &ctx.gc, lambda_bar, &mut checks, "disconnected");
        cert.checks = checks.items;
        return Ok(cert);
    }
    if !ctx.gc_connected {
        cert.case = CaseTag::ComplementDisconnected;
        disconnected_checks(&ctx.gc, &ctx.spec_c, g, lambda, &mut checks, "disconnected");
        cert.checks = checks.items;
        return Ok(cert);
    }

    // both sides connected
    let me = min_energy_bound(o.x, o.y)?;
    checks.at_least("min_energy.sum_at_least_minsum", sum, me.minsum);
    checks.at_least("min_energy.minsum_at_least_weighted", me.minsum, me.identity_lhs / me.m);
    checks.at_least("min_energy.weighted_at_least_one", me.identity_lhs, 1.0);
    checks.at_least("min_energy.minsum_at_least_inverse_m", me.minsum, me.inverse_m);
    let id = lemma_identity_check(&o.x.vector, &o.y.vector)?;
    checks.at_least("identity.lower_bound", id.lhs, id.rhs);
    checks.at_most("identity.expansion", id.expansion_error, 0.0);
    checks.at_most("identity.matches_min_energy", (id.lhs - me.identity_lhs).abs(), 0.0);

    for (graph, f, side) in [(g, &ctx.f_g, "graph"), (&ctx.gc, &ctx.f_c, "complement")] {
        diameter_checks(graph, f, &mut checks, &format!("{side}.diameter"));
        checks.at_least(&format!("{side}.neighbor_bound"), neighbor_bound_check(graph, f)?, 0.0);
    }

    let gap2 = o.x.gap * o.x.gap;
    let (lam, lam_bar) = (o.x.lambda2, o.y.lambda2);
    if o.x.gap < 1.0 {
        cert.case = CaseTag::GapBelowOne;
        checks.at_least("gap_below_one.inverse_m_above_one", me.inverse_m, 1.0);
    } else if lam >= 1.0 || lam_bar >= 1.0 {
        cert.case = CaseTag::ConnectivityAtLeastOne;
        checks.at_least("connectivity.max_at_least_one", lam.max(lam_bar), 1.0);
    } else {
        let d = o.graph.distance(o.x.v1, o.x.v2).expect("connected");
        if d <= 2 {
            cert.case = CaseTag::DistanceAtMost2;
            checks.at_least("distance_at_most_2.lambda_at_least_one", lam, 1.0);
        } else if d > 3 {
            cert.case = CaseTag::DistanceAbove3;
            checks.holds(
                "distance_above_3.complement_diameter_at_most_2",
                o.comp.diameter().is_some_and(|k| k <= 2),
            );
            checks.at_least("distance_above_3.complement_at_least_one", lam_bar, 1.0);
        } else {
            cert.case = CaseTag::Distance3;
            let cd = case::case_data_from_context(ctx)?;
            cd.validate(o.graph, &mut checks);
            distance3_checks(&o, &cd, gap2, &mut checks)?;
            cert.deep = Some(deep_check_distance3(o.graph, o.x, o.y, &cd, tol)?);
            cert.case_data = Some(cd);
        }
    }
    cert.checks = checks.items;
    Ok(cert)
}

fn distance3_checks(o: &Oriented<'_>, cd: &CaseData, gap2: f64, checks: &mut Checks) -> Result<()> {
    let n = o.graph.order();
    let (lam, lam_bar) = (o.x.lambda2, o.y.lambda2);
    let (s, l) = (cd.s, cd.l);
    let r = resistance_from_spectrum(o.spec)?.get(cd.v1, cd.v2);
    let conductance = conductance_lower_bound(s, l);
    checks.at_least("distance_3.lambda_at_least_gap_over_resistance", lam, gap2 / r);
    checks.at_least("distance_3.spread_over_resistance_at_least_inverse", gap2 / r, 1.0 / r);
    checks.at_least("distance_3.conductance_lower_bound", 1.0 / r, conductance);
    checks.at_least("distance_3.lambda_at_least_conductance", lam, conductance);
    checks.at_least("distance_3.complement_bound", lam_bar, complement_lambda_bound(n, s, l));
    checks.at_least("distance_3.sum_bound", lam + lam_bar, lambda_sum_bound(n, s, l));
    checks.implies_at_least("distance_3.three_paths_force_one", s >= 3, lam, 1.0);
    checks.implies_at_least(
        "distance_3.one_path_bound_above_one",
        s == 1 && n >= 12,
        lambda_sum_bound(n, s, l),
        1.0,
    );
    checks.implies_at_least(
        "distance_3.two_paths_bound_above_one",
        s == 2 && l <= 2 && n >= 10,
        lambda_sum_bound(n, s, l),
        1.0,
    );
    checks.implies_at_least("distance_3.two_paths_wide_hub_force_one", s == 2 && l >= 3, conductance, 1.0);
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinMaxReport {
    pub order: usize,
    pub count: usize,
    /// Minimum of `max(lambda, lambda_bar)` over the collection.
    pub c_n: f64,
    /// Position in the collection attaining `c_n` (first on ties).
    pub argmin: usize,
}

/// Empirical `c_n` over a collection of graphs of one order.
pub fn minmax_report<'g>(graphs: impl IntoIterator<Item = &'g Graph>) -> Result<MinMaxReport> {
    let mut report: Option<MinMaxReport> = None;
    for (k, g) in graphs.into_iter().enumerate() {
        let ctx = Context::new(g)?;
        let value = ctx.lambda().max(ctx.lambda_bar());
        match report.as_mut() {
            None => {
                report = Some(MinMaxReport {
                    order: g.order(),
                    count: 1,
                    c_n: value,
                    argmin: k,
                })
            }
            Some(r) => {
                if g.order() != r.order {
                    return Err(Error::Precondition(format!(
                        "mixed orders {} and {} in one collection",
                        r.order,
                        g.order()
                    )));
                }
                r.count += 1;
                if value < r.c_n {
                    r.c_n = value;
                    r.argmin = k;
                }
            }
        }
    }
    report.ok_or(Error::Empty)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, remark, star};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn cone_predicate() {
        assert_eq!(is_join_of_cone_and_disconnected(&path(3).unwrap()), Some(1));
        assert_eq!(is_join_of_cone_and_disconnected(&star(4).unwrap()), Some(0));
        assert_eq!(is_join_of_cone_and_disconnected(&cycle(4).unwrap()), None);
        assert_eq!(is_join_of_cone_and_disconnected(&Graph::complete(2)), None);
    }

    #[test]
    fn disconnected_lemma_examples() {
        let g = Graph::complete(2).disjoint_union(&Graph::empty(1));
        let r = lemma_disconnected_check(&g, 1e-7).unwrap();
        assert!(close(r.lambda_bar, 1.0, 1e-9) && r.equality && r.structural.is_some());
        let g = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let r = lemma_disconnected_check(&g, 1e-7).unwrap();
        assert!(close(r.lambda_bar, 2.0, 1e-9) && !r.equality && r.structural.is_none());
        let r = lemma_disconnected_check(&Graph::empty(3), 1e-7).unwrap();
        assert!(close(r.lambda_bar, 3.0, 1e-9));
        assert!(r.checks.iter().all(|c| !c.is_fail()));
        assert_eq!(lemma_disconnected_check(&path(3).unwrap(), 1e-7).unwrap_err(), Error::Connected);
    }

    #[test]
    fn identity_examples() {
        let r = lemma_identity_check(&[1.0, -1.0, 0.0], &[0.0, 1.0, -1.0]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.slack), (9.0, 4.0, 5.0));
        assert!(r.expansion_error < 1e-15);
        let r = lemma_identity_check(&[1.0, -1.0], &[1.0, -1.0]).unwrap();
        assert_eq!((r.lhs, r.rhs, r.slack), (16.0, 4.0, 12.0));
        assert!(lemma_identity_check(&[1.0, 0.0], &[1.0, -1.0]).is_err());
    }

    #[test]
    fn diameter_lemma_examples() {
        let r = lemma_diameter_check(&Graph::complete(4), 1e-7).unwrap();
        assert_eq!(r.extreme_distance, 1);
        let r = lemma_diameter_check(&star(4).unwrap(), 1e-7).unwrap();
        assert!(close(r.lambda, 1.0, 1e-9));
        assert!(r.checks.iter().all(|c| !c.is_fail()));
        let r = lemma_diameter_check(&path(4).unwrap(), 1e-7).unwrap();
        assert_eq!(r.extreme_distance, 3);
        assert!(r.checks.iter().all(|c| c.status == CheckStatus::NotApplicable));
    }

    #[test]
    fn neighbor_bounds() {
        let k2 = Graph::complete(2);
        let f = crate::spectra::algebraic_connectivity(&k2).unwrap();
        assert!(neighbor_bound_check(&k2, &f).unwrap().abs() < 1e-12);
        for g in [path(4).unwrap(), remark(6).unwrap()] {
            let f = crate::spectra::algebraic_connectivity(&g).unwrap();
            assert!(neighbor_bound_check(&g, &f).unwrap() >= -1e-9);
        }
    }

    #[test]
    fn star_routes_through_disconnected_complement() {
        let c = audit(&star(4).unwrap(), DEFAULT_AUDIT_TOL).unwrap();
        assert_eq!(c.case, CaseTag::ComplementDisconnected);
        assert!(close(c.sum, 1.0, 1e-9));
        assert!(c.equality.flag && c.equality.structural);
        assert_eq!(
            c.equality.witness,
            Some(Witness {
                side: Side::Graph,
                vertex: 0
            })
        );
        assert!(c.passed());
    }

    #[test]
    fn p4_routes_to_distance_three() {
        let c = audit(&path(4).unwrap(), DEFAULT_AUDIT_TOL).unwrap();
        assert_eq!(c.case, CaseTag::Distance3);
        let cd = c.case_data.as_ref().unwrap();
        assert_eq!((cd.s, cd.l), (1, 0));
        assert!(close(c.sum, 2.0 * (2.0 - 2f64.sqrt()), 1e-9));
        let sb = c.checks.iter().find(|k| k.name == "distance_3.sum_bound").unwrap();
        assert!(close(sb.bound, 7.0 / 9.0, 1e-15));
        assert!(c.passed(), "{:?}", c.failures().collect::<Vec<_>>());
        assert!(c.max_bound.as_ref().unwrap().in_case);
    }

    #[test]
    fn c5_has_large_connectivity() {
        let c = audit(&cycle(5).unwrap(), DEFAULT_AUDIT_TOL).unwrap();
        assert_eq!(c.case, CaseTag::ConnectivityAtLeastOne);
        let expected = 2.0 - 2.0 * (2.0 * std::f64::consts::PI / 5.0).cos();
        assert!(close(c.lambda, expected, 1e-9) && close(c.lambda_bar, expected, 1e-9));
        assert!(c.passed());
    }

    #[test]
    fn order_two() {
        let c = audit(&Graph::complete(2), DEFAULT_AUDIT_TOL).unwrap();
        assert_eq!(c.case, CaseTag::TrivialOrderTwo);
        assert!(close(c.sum, 2.0, 1e-12));
        assert!(c.passed());
        assert!(audit(&Graph::empty(1), DEFAULT_AUDIT_TOL).is_err());
    }

    #[test]
    fn minmax_small_orders() {
        let graphs: Vec<Graph> = (0..8u32)
            .map(|mask| Graph::from_fn(3, |i, j| mask >> (i + j - 1) & 1 == 1))
            .collect();
        let r = minmax_report(&graphs).unwrap();
        assert!(close(r.c_n, 1.0, 1e-9));
        assert_eq!(r.count, 8);
        assert_eq!(minmax_report(std::iter::empty()).unwrap_err(), Error::Empty);
    }
}
