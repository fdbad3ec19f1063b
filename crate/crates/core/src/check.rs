//! Outcome records shared by every verification routine.

use serde::Serialize;

use crate::coeffring::coeff::format_rational;
use crate::ncalg::{AlgebraSpec, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// A nonzero remainder of an identity, rendered canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub text: String,
    pub terms: usize,
    /// The first few terms with exact coefficients.
    pub leading: Vec<ResidualTerm>,
}

/// One basis word of a residual and its coefficient polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidualTerm {
    pub word: String,
    pub coefficient: Vec<CoefficientTerm>,
}

/// `(re + im i) * monomial`, with `re` and `im` written as `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientTerm {
    pub monomial: String,
    pub re: String,
    pub im: String,
}

/// How many terms of a residual are listed structurally.
pub const LEADING_TERMS: usize = 4;

fn leading_terms(spec: &AlgebraSpec, e: &Element) -> Vec<ResidualTerm> {
    e.terms()
        .take(LEADING_TERMS)
        .map(|(w, c)| ResidualTerm {
            word: spec.render_word(w),
            coefficient: c
                .terms()
                .map(|(m, z)| CoefficientTerm {
                    monomial: m.to_string(),
                    re: format_rational(&z.re),
                    im: format_rational(&z.im),
                })
                .collect(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub residual: Option<Residual>,
    /// Free-form note, e.g. why a check does not apply.
    pub note: Option<String>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Pass,
            residual: None,
            note: None,
        }
    }

    pub fn fail(id: impl Into<String>, text: impl Into<String>, terms: usize) -> Self {
        Check {
            id: id.into(),
            status: Status::Fail,
            residual: Some(Residual {
                text: text.into(),
                terms,
                leading: Vec::new(),
            }),
            note: None,
        }
    }

    pub fn not_applicable(id: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::NotApplicable,
            residual: None,
            note: Some(why.into()),
        }
    }

    /// Pass iff `residual` is the zero element.
    pub fn zero(id: impl Into<String>, spec: &AlgebraSpec, residual: &Element) -> Self {
        if residual.is_zero() {
            Check::pass(id)
        } else {
            let mut c = Check::fail(id, spec.render(residual), residual.len());
            if let Some(r) = c.residual.as_mut() {
                r.leading = leading_terms(spec, residual);
            }
            c
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Folds several residual checks into one: passes when all pass, otherwise
/// keeps the first failure and prefixes its witness label.
pub fn combine(id: impl Into<String>, parts: impl IntoIterator<Item = (String, Check)>) -> Check {
    let id = id.into();
    let mut failures = 0usize;
    let mut first: Option<(String, Residual)> = None;
    let mut any = false;
    let mut all_na = true;
    for (label, c) in parts {
        any = true;
        match c.status {
            Status::Fail => {
                failures += 1;
                if first.is_none() {
                    first = Some((label, c.residual.unwrap_or(Residual {
                        text: String::new(),
                        terms: 0,
                        leading: Vec::new(),
                    })));
                }
                all_na = false;
            }
            Status::Pass => all_na = false,
            Status::NotApplicable => {}
        }
    }
    match first {
        Some((label, r)) => {
            let text = if label.is_empty() { r.text } else { format!("{label}: {}", r.text) };
            let mut c = Check {
                id,
                status: Status::Fail,
                residual: Some(Residual { text, ..r }),
                note: None,
            };
            if failures > 1 {
                c.note = Some(format!("{failures} failing cases"));
            }
            c
        }
        None if any && all_na => Check::not_applicable(id, "no applicable cases"),
        None => Check::pass(id),
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}
