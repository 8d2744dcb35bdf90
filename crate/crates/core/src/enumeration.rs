//! One graph per isomorphism class by canonical augmentation, exhaustive
//! audits over those classes, and seeded random graphs.
//!
//! Order `n` classes are produced from the order `n - 1` classes by attaching
//! a new vertex with every possible neighbourhood and keeping each child whose
//! canonical code has not been seen. Every graph of order `n` minus its last
//! vertex is isomorphic to some parent, so every class is reached. Children are
//! canonicalized in parallel, but codes are admitted in parent-then-mask order,
//! so the output sequence does not depend on the thread count.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::certificates::{audit, CaseTag};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order enumerated by default.
pub const MAX_ENUM_ORDER: usize = 8;
/// Largest order enumerated with the long-running flag.
pub const MAX_LONG_ENUM_ORDER: usize = 10;

const PARENT_BATCH: usize = 256;

fn check_order(n: usize, long: bool) -> Result<()> {
    if n == 0 {
        return Err(Error::OrderTooSmall { order: 0, required: 1 });
    }
    let max = if long { MAX_LONG_ENUM_ORDER } else { MAX_ENUM_ORDER };
    if n > max {
        return Err(Error::OrderTooLarge { order: n, max });
    }
    Ok(())
}

/// Canonical representatives of order `n - 1` extended by one vertex, passed
/// to `sink` in batches as new classes are found.
fn extend_level(parents: &[Graph], seen: &mut HashSet<CanonicalCode>, mut sink: impl FnMut(Vec<Graph>) -> Result<()>) -> Result<()> {
    let m = parents.first().map_or(0, Graph::order);
    for batch in parents.chunks(PARENT_BATCH) {
        let codes: Vec<Vec<CanonicalCode>> = batch
            .par_iter()
            .map(|p| {
                let mut local = Vec::new();
                let mut local_seen = HashSet::new();
                for mask in 0u32..1 << m {
                    let child = Graph::from_fn(m + 1, |i, j| {
                        if j == m {
                            mask >> i & 1 == 1
                        } else {
                            p.has_edge(i, j)
                        }
                    });
                    let code = canonical_code(&child)?;
                    if local_seen.insert(code) {
                        local.push(code);
                    }
                }
                Ok(local)
            })
            .collect::<Result<_>>()?;
        let fresh: Vec<Graph> = codes
            .into_iter()
            .flatten()
            .filter(|code| seen.insert(*code))
            .map(|code| code.to_graph())
            .collect();
        if !fresh.is_empty() {
            sink(fresh)?;
        }
    }
    Ok(())
}

/// Streams every class of order `n` to `sink` in deterministic batches.
/// Returns the number of classes.
pub fn for_each_graph_batch(n: usize, long: bool, mut sink: impl FnMut(Vec<Graph>) -> Result<()>) -> Result<usize> {
    check_order(n, long)?;
    let mut level = vec![Graph::empty(1)];
    for _ in 2..n {
        let mut next = Vec::new();
        extend_level(&level, &mut HashSet::new(), |batch| {
            next.extend(batch);
            Ok(())
        })?;
        level = next;
    }
    if n == 1 {
        sink(level)?;
        return Ok(1);
    }
    let mut count = 0;
    extend_level(&level, &mut HashSet::new(), |batch| {
        count += batch.len();
        sink(batch)
    })?;
    Ok(count)
}

/// All canonical representatives of order `n` (`n <= 8`, or `n <= 10` with
/// `long`), each equal to its own canonical graph.
pub fn enumerate_graphs(n: usize, long: bool) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for_each_graph_batch(n, long, |batch| {
        all.extend(batch);
        Ok(())
    })?;
    Ok(all)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub code: CanonicalCode,
    /// Names of failing checks, or the error raised while auditing.
    pub reasons: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct EnumReport {
    pub order: usize,
    pub count: usize,
    /// Minimum of `lambda + lambda_bar`.
    pub min_sum: f64,
    /// Classes with `|sum - 1| <= tol`, in enumeration order.
    pub equality: Vec<CanonicalCode>,
    /// Classes with the cone-over-disconnected structure on either side.
    pub structural: usize,
    /// Minimum of `max(lambda, lambda_bar)`.
    pub c_n: f64,
    /// First class attaining `c_n`.
    pub c_n_witness: CanonicalCode,
    /// Number of classes per routing case.
    pub cases: BTreeMap<CaseTag, usize>,
    /// Classes for which the max-bound chain was applicable.
    pub max_bound_in_case: usize,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

struct Summary {
    code: CanonicalCode,
    sum: f64,
    max_lambda: f64,
    equality: bool,
    structural: bool,
    case: Option<CaseTag>,
    in_case: bool,
    failures: Vec<String>,
}

fn summarize(g: &Graph, tol: f64) -> Summary {
    let code = canonical_code(g).expect("enumerated orders are canonizable");
    match audit(g, tol) {
        Ok(c) => {
            let mut failures: Vec<String> = c.failures().map(|k| k.name.clone()).collect();
            if c.sum < 1.0 - tol {
                failures.push(format!("sum {:e} below one", c.sum));
            }
            Summary {
                code,
                sum: c.sum,
                max_lambda: c.lambda.max(c.lambda_bar),
                equality: c.equality.flag,
                structural: c.equality.structural,
                case: Some(c.case),
                in_case: c.max_bound.as_ref().is_some_and(|m| m.in_case),
                failures,
            }
        }
        Err(e) => Summary {
            code,
            sum: f64::NAN,
            max_lambda: f64::NAN,
            equality: false,
            structural: false,
            case: None,
            in_case: false,
            failures: vec![format!("error: {e}")],
        },
    }
}

/// Audits every class of order `n`; the result is identical for any number
/// of worker threads apart from `elapsed`.
pub fn exhaustive_audit(n: usize, long: bool, tol: f64) -> Result<EnumReport> {
    if n < 2 {
        return Err(Error::OrderTooSmall { order: n, required: 2 });
    }
    let start = Instant::now();
    let mut report = EnumReport {
        order: n,
        count: 0,
        min_sum: f64::INFINITY,
        equality: Vec::new(),
        structural: 0,
        c_n: f64::INFINITY,
        c_n_witness: canonical_code(&Graph::empty(n))?,
        cases: BTreeMap::new(),
        max_bound_in_case: 0,
        violations: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for_each_graph_batch(n, long, |batch| {
        let summaries: Vec<Summary> = batch.par_iter().map(|g| summarize(g, tol)).collect();
        for s in summaries {
            report.count += 1;
            // NaN never compares below, so errors cannot become minima
            if s.sum < report.min_sum {
                report.min_sum = s.sum;
            }
            if s.max_lambda < report.c_n {
                report.c_n = s.max_lambda;
                report.c_n_witness = s.code;
            }
            if s.equality {
                report.equality.push(s.code);
            }
            report.structural += s.structural as usize;
            report.max_bound_in_case += s.in_case as usize;
            if let Some(case) = s.case {
                *report.cases.entry(case).or_default() += 1;
            }
            if !s.failures.is_empty() {
                report.violations.push(Violation {
                    code: s.code,
                    reasons: s.failures,
                });
            }
        }
        Ok(())
    })?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Erdos-Renyi graph: each pair `i < j`, visited in the same column order as
/// [`Graph::from_fn`], is an edge with probability `p`. Uses ChaCha8 seeded
/// through `seed_from_u64`, so equal arguments give equal graphs on every
/// platform.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Probability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Graph::from_fn(n, |_, _| rng.random_bool(p)))
}
