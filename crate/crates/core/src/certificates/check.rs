use serde::Serialize;

/// Direction of a numeric check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// `measured >= bound`
    #[serde(rename = "ge")]
    AtLeast,
    /// `measured <= bound`
    #[serde(rename = "le")]
    AtMost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One verified inequality. `slack` is positive when the inequality holds
/// strictly; the check passes when `slack >= -tol`.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub relation: Relation,
    pub bound: f64,
    pub measured: f64,
    pub slack: f64,
    pub status: CheckStatus,
}

impl Check {
    pub fn evaluate(name: impl Into<String>, relation: Relation, measured: f64, bound: f64, tol: f64) -> Check {
        let slack = match relation {
            Relation::AtLeast => measured - bound,
            Relation::AtMost => bound - measured,
        };
        // NaN slack fails
        let status = if slack >= -tol { CheckStatus::Pass } else { CheckStatus::Fail };
        Check {
            name: name.into(),
            relation,
            bound,
            measured,
            slack,
            status,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Accumulates checks under one tolerance.
#[derive(Clone, Debug)]
pub(crate) struct Checks {
    pub tol: f64,
    pub items: Vec<Check>,
}

impl Checks {
    pub fn new(tol: f64) -> Self {
        Checks { tol, items: Vec::new() }
    }

    pub fn at_least(&mut self, name: &str, measured: f64, bound: f64) -> bool {
        let c = Check::evaluate(name, Relation::AtLeast, measured, bound, self.tol);
        let ok = !c.is_fail();
        self.items.push(c);
        ok
    }

    pub fn at_most(&mut self, name: &str, measured: f64, bound: f64) -> bool {
        let c = Check::evaluate(name, Relation::AtMost, measured, bound, self.tol);
        let ok = !c.is_fail();
        self.items.push(c);
        ok
    }

    /// `measured >= bound` when `premise` holds, otherwise recorded as not
    /// applicable with the numbers kept for reference.
    pub fn implies_at_least(&mut self, name: &str, premise: bool, measured: f64, bound: f64) {
        let mut c = Check::evaluate(name, Relation::AtLeast, measured, bound, self.tol);
        if !premise {
            c.status = CheckStatus::NotApplicable;
        }
        self.items.push(c);
    }

    /// Exact structural fact: passes iff `holds`.
    pub fn holds(&mut self, name: &str, holds: bool) {
        self.at_least(name, holds as u8 as f64, 1.0);
    }

    pub fn count_is_zero(&mut self, name: &str, count: usize) {
        self.at_most(name, count as f64, 0.0);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slack_sign_follows_relation() {
        let c = Check::evaluate("x", Relation::AtLeast, 2.0, 1.5, 1e-7);
        assert_eq!((c.slack, c.status), (0.5, CheckStatus::Pass));
        let c = Check::evaluate("x", Relation::AtMost, 2.0, 1.5, 1e-7);
        assert_eq!((c.slack, c.status), (-0.5, CheckStatus::Fail));
        let c = Check::evaluate("x", Relation::AtLeast, 1.0 - 1e-9, 1.0, 1e-7);
        assert_eq!(c.status, CheckStatus::Pass);
    }

    #[test]
    fn nan_fails() {
        let c = Check::evaluate("x", Relation::AtLeast, f64::NAN, 0.0, 1e-7);
        assert!(c.is_fail());
    }

    #[test]
    fn implication_without_premise_is_not_applicable() {
        let mut checks = Checks::new(1e-7);
        checks.implies_at_least("x", false, 0.0, 1.0);
        assert_eq!(checks.items[0].status, CheckStatus::NotApplicable);
        checks.implies_at_least("y", true, 0.0, 1.0);
        assert_eq!(checks.items[1].status, CheckStatus::Fail);
    }
}
