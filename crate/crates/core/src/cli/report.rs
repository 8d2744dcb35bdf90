//! JSON certificate documents and plain-text renderings.

use serde::ser::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::canon::{canonical_code, MAX_CANON_ORDER};
use crate::certificates::{Certificate, CheckStatus, Equality, Relation};
use crate::enumeration::EnumReport;
use crate::graph::Graph;

pub const SCHEMA_VERSION: &str = "1";

/// A float written with 17 significant digits in exponent form, or `null`
/// when not finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(serializer)
        } else {
            serializer.serialize_none()
        }
    }
}

#[derive(Debug, serde::Serialize)]
pub struct InputEcho {
    pub format: &'static str,
    pub text: String,
    pub order: usize,
    /// `None` above the canonicalization limit.
    pub canonical_code: Option<String>,
}

#[derive(Debug, serde::Serialize)]
pub struct CheckDoc {
    pub name: String,
    pub relation: Relation,
    pub bound: Num,
    pub measured: Num,
    pub slack: Num,
    pub status: CheckStatus,
}

#[derive(Debug, serde::Serialize)]
pub struct CaseDataDoc {
    pub v1: usize,
    pub v2: usize,
    pub relabeled: bool,
    pub gap: Num,
    pub distance: usize,
    pub s: usize,
    pub l: usize,
    pub hub: usize,
    pub matching: Vec<(usize, usize)>,
    pub sizes: PartitionSizes,
}

#[derive(Debug, serde::Serialize)]
pub struct PartitionSizes {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub s1: usize,
    pub s2: usize,
}

#[derive(Debug, serde::Serialize)]
pub struct MaxBoundDoc {
    pub in_case: bool,
    pub max_lambda: Num,
    pub floor: Num,
}

#[derive(Debug, serde::Serialize)]
pub struct CertificateDocument {
    pub schema: &'static str,
    pub input: InputEcho,
    pub case: crate::certificates::CaseTag,
    pub orientation: crate::certificates::Orientation,
    pub extremes: (usize, usize),
    pub lambda: Num,
    pub lambda_bar: Num,
    pub sum: Num,
    pub case_data: Option<CaseDataDoc>,
    pub checks: Vec<CheckDoc>,
    pub equality: Equality,
    pub max_bound: Option<MaxBoundDoc>,
    pub passed: bool,
}

impl CertificateDocument {
    pub fn new(graph: &Graph, format: &'static str, text: String, cert: &Certificate) -> Self {
        let canonical = (graph.order() <= MAX_CANON_ORDER)
            .then(|| canonical_code(graph).ok())
            .flatten()
            .map(|c| c.to_string());
        CertificateDocument {
            schema: SCHEMA_VERSION,
            input: InputEcho {
                format,
                text,
                order: graph.order(),
                canonical_code: canonical,
            },
            case: cert.case,
            orientation: cert.orientation,
            extremes: cert.extremes,
            lambda: Num(cert.lambda),
            lambda_bar: Num(cert.lambda_bar),
            sum: Num(cert.sum),
            case_data: cert.case_data.as_ref().map(|cd| {
                let (a, b, c) = cd.counts();
                CaseDataDoc {
                    v1: cd.v1,
                    v2: cd.v2,
                    relabeled: cd.relabeled,
                    gap: Num(cd.gap),
                    distance: cd.distance,
                    s: cd.s,
                    l: cd.l,
                    hub: cd.hub,
                    matching: cd.matching.clone(),
                    sizes: PartitionSizes {
                        a,
                        b,
                        c,
                        s1: cd.s1.len(),
                        s2: cd.s2.len(),
                    },
                }
            }),
            checks: cert
                .all_checks()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    relation: c.relation,
                    bound: Num(c.bound),
                    measured: Num(c.measured),
                    slack: Num(c.slack),
                    status: c.status,
                })
                .collect(),
            equality: cert.equality,
            max_bound: cert.max_bound.as_ref().map(|m| MaxBoundDoc {
                in_case: m.in_case,
                max_lambda: Num(m.max_lambda),
                floor: Num(m.floor),
            }),
            passed: cert.passed(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

/// Multi-line summary of a certificate.
pub fn render_certificate(cert: &Certificate) -> String {
    let (mut pass, mut fail, mut na) = (0, 0, 0);
    for c in cert.all_checks() {
        match c.status {
            CheckStatus::Pass => pass += 1,
            CheckStatus::Fail => fail += 1,
            CheckStatus::NotApplicable => na += 1,
        }
    }
    let mut out = format!(
        "case {} ({:?} orientation), extremes {:?}\n",
        cert.case.as_str(),
        cert.orientation,
        cert.extremes
    );
    out.push_str(&format!(
        "lambda = {:.15}, lambda_bar = {:.15}, sum = {:.15}\n",
        cert.lambda, cert.lambda_bar, cert.sum
    ));
    if let Some(cd) = &cert.case_data {
        let (a, b, c) = cd.counts();
        out.push_str(&format!(
            "s = {}, l = {}, a = {a}, b = {b}, c = {c}, distance = {}\n",
            cd.s, cd.l, cd.distance
        ));
    }
    let eq = &cert.equality;
    out.push_str(&match eq.witness {
        Some(w) if eq.flag => format!("equality: yes, cone vertex {} of the {:?} side\n", w.vertex, w.side),
        _ if eq.flag => "equality: yes, no structural witness\n".to_string(),
        _ => "equality: no\n".to_string(),
    });
    if let Some(m) = &cert.max_bound {
        out.push_str(&format!(
            "max(lambda, lambda_bar) = {:.15}, max-bound chain {}\n",
            m.max_lambda,
            if m.in_case { "applicable" } else { "not applicable" }
        ));
    }
    out.push_str(&format!("checks: {pass} pass, {fail} fail, {na} not applicable\n"));
    for c in cert.failures() {
        out.push_str(&format!(
            "  FAIL {}: measured {:e}, bound {:e}, slack {:e}\n",
            c.name, c.measured, c.bound, c.slack
        ));
    }
    out
}

/// Summary table of an exhaustive run, without timing.
pub fn render_enum_report(r: &EnumReport) -> String {
    let mut out = format!(
        "{} graphs, {} violations, c_{} = {:.15}, min sum = {:.15}\n",
        r.count,
        r.violations.len(),
        r.order,
        r.c_n,
        r.min_sum
    );
    out.push_str(&format!(
        "equality cases: {} spectral, {} structural\n",
        r.equality.len(),
        r.structural
    ));
    out.push_str(&format!("c_{} attained by {}\n", r.order, r.c_n_witness));
    for (case, k) in &r.cases {
        out.push_str(&format!("  {:<26}{k}\n", case.as_str()));
    }
    out.push_str(&format!("max-bound chain applicable: {}\n", r.max_bound_in_case));
    for v in &r.violations {
        out.push_str(&format!("  violation {}: {}\n", v.code, v.reasons.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_keep_full_precision() {
        let s = serde_json::to_string(&[Num(1.0), Num(2f64.sqrt()), Num(f64::NAN), Num(-1e-300)]).unwrap();
        assert_eq!(
            s,
            "[1.0000000000000000e0,1.4142135623730951e0,null,-1.0000000000000000e-300]"
        );
        let back: Vec<Option<f64>> = serde_json::from_str(&s).unwrap();
        assert_eq!(back[1], Some(2f64.sqrt()));
    }
}
