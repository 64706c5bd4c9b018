use std::fmt;

use serde::Serialize;

use crate::exactalg::Lin;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        })
    }
}

/// The first input on which the two sides of a law differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub inputs: Vec<String>,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub algebra: String,
    pub max_degree: usize,
    pub status: Status,
    /// Number of individual equalities tested.
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn skipped(check: &str, algebra: &str, max_degree: usize, reason: String) -> Self {
        CheckReport {
            check: check.into(),
            algebra: algebra.into(),
            max_degree,
            status: Status::Skipped,
            cases: 0,
            detail: Some(reason),
            witness: None,
            counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} {:<20} {:<16} deg<={} cases={}",
            self.status, self.check, self.algebra, self.max_degree, self.cases
        )?;
        if let Some(d) = &self.detail {
            write!(f, "  {d}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n         witness: {w}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(
                f,
                "\n         {} fails on {}\n           left:  {}\n           right: {}",
                c.law,
                c.inputs.join(", "),
                c.left,
                c.right
            )?;
        }
        Ok(())
    }
}

/// Returned by a check body to stop at the first failure.
pub(crate) struct Stop;

pub(crate) type Step = Result<(), Stop>;

/// Accumulates cases for one report.
pub(crate) struct Run {
    check: String,
    algebra: String,
    max_degree: usize,
    cases: usize,
    detail: Option<String>,
    witness: Option<String>,
    failure: Option<Counterexample>,
}

impl Run {
    pub fn new(check: &str, algebra: impl Into<String>, max_degree: usize) -> Self {
        Run {
            check: check.into(),
            algebra: algebra.into(),
            max_degree,
            cases: 0,
            detail: None,
            witness: None,
            failure: None,
        }
    }

    pub fn expect<K: Ord + Clone>(
        &mut self,
        law: &str,
        inputs: impl FnOnce() -> Vec<String>,
        left: &Lin<K>,
        right: &Lin<K>,
        show: impl FnMut(&K) -> String + Copy,
    ) -> Step {
        self.cases += 1;
        if left == right {
            return Ok(());
        }
        self.fail(law, inputs(), left.format_with(show), right.format_with(show))
    }

    pub fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, law: &str, inputs: impl FnOnce() -> Vec<String>, left: T, right: T) -> Step {
        self.cases += 1;
        if left == right {
            return Ok(());
        }
        self.fail(law, inputs(), format!("{left:?}"), format!("{right:?}"))
    }

    pub fn fail(&mut self, law: &str, inputs: Vec<String>, left: String, right: String) -> Step {
        self.failure = Some(Counterexample {
            law: law.into(),
            inputs,
            left,
            right,
        });
        Err(Stop)
    }

    pub fn detail(&mut self, text: impl Into<String>) {
        self.detail = Some(text.into());
    }

    pub fn witness(&mut self, text: impl Into<String>) {
        self.witness = Some(text.into());
    }

    pub fn finish(self, _outcome: Step) -> CheckReport {
        CheckReport {
            check: self.check,
            algebra: self.algebra,
            max_degree: self.max_degree,
            status: if self.failure.is_some() { Status::Fail } else { Status::Pass },
            cases: self.cases,
            detail: self.detail,
            witness: self.witness,
            counterexample: self.failure,
        }
    }
}

pub(crate) fn show<K: fmt::Display>(k: &K) -> String {
    k.to_string()
}

pub(crate) fn show_pair<A: fmt::Display, B: fmt::Display>(k: &(A, B)) -> String {
    format!("{} ⊗ {}", k.0, k.1)
}

pub(crate) fn show_triple<A: fmt::Display, B: fmt::Display, C: fmt::Display>(k: &(A, B, C)) -> String {
    format!("{} ⊗ {} ⊗ {}", k.0, k.1, k.2)
}
