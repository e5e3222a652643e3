use serde::Serialize;

use super::Operator;
use crate::algebra::{charpoly_exact, RatPolynomial};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Characteristic polynomials of one operator on both graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelDetail {
    pub level: u8,
    pub operator: &'static str,
    pub equal: bool,
    pub first: RatPolynomial,
    pub second: RatPolynomial,
}

/// Outcome of comparing two graphs level by level: adjacency spectrum, then
/// the positive supports of `U`, `U^2` and `U^3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinction {
    /// First level whose characteristic polynomials differ; `None` when all
    /// four agree.
    pub level: Option<u8>,
    pub details: Vec<LevelDetail>,
}

impl Distinction {
    pub fn is_indistinct(&self) -> bool {
        self.level.is_none()
    }
}

const LEVELS: [Operator; 4] = [Operator::A, Operator::UPlus, Operator::U2Plus, Operator::U3Plus];

fn check_hypotheses(g: &Graph, which: &str) -> Result<()> {
    let report = g.validate();
    let fail = |what: &str| Err(Error::Hypothesis(format!("{which} graph is not {what}")));
    if !report.connected {
        return fail("connected");
    }
    if !report.simple {
        return fail("simple");
    }
    if g.degree_info().regular_degree.is_none() {
        return fail("regular");
    }
    if !report.md2 {
        return fail("of minimum degree 2");
    }
    Ok(())
}

/// Smallest level at which the exact characteristic polynomials of the two
/// graphs differ. Stops at the first difference.
pub fn srg_distinguish(g: &Graph, h: &Graph) -> Result<Distinction> {
    check_hypotheses(g, "first")?;
    check_hypotheses(h, "second")?;
    let mut details = Vec::new();
    for (level, op) in (0u8..).zip(LEVELS) {
        let first = charpoly_exact(&op.matrix(g)?)?;
        let second = charpoly_exact(&op.matrix(h)?)?;
        let equal = first == second;
        details.push(LevelDetail {
            level,
            operator: op.name(),
            equal,
            first,
            second,
        });
        if !equal {
            return Ok(Distinction {
                level: Some(level),
                details,
            });
        }
    }
    Ok(Distinction { level: None, details })
}
