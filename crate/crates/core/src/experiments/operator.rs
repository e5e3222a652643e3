use std::fmt;
use std::str::FromStr;

use crate::algebra::RationalMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::walk::{edge_matrices, power_support, t_matrix, transition_matrix};

/// Matrices whose characteristic polynomials the toolkit reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    /// Transition matrix `U`.
    U,
    /// `U^+`.
    UPlus,
    /// `(U^2)^+`.
    U2Plus,
    /// `(U^3)^+`.
    U3Plus,
    /// Adjacency matrix.
    A,
    /// `D^-1 A`.
    T,
    /// Edge matrix `B - J0`.
    EdgeMatrix,
}

impl Operator {
    pub const ALL: [Operator; 7] = [
        Operator::U,
        Operator::UPlus,
        Operator::U2Plus,
        Operator::U3Plus,
        Operator::A,
        Operator::T,
        Operator::EdgeMatrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operator::U => "U",
            Operator::UPlus => "U+",
            Operator::U2Plus => "U2+",
            Operator::U3Plus => "U3+",
            Operator::A => "A",
            Operator::T => "T",
            Operator::EdgeMatrix => "B-J0",
        }
    }

    pub fn matrix(self, g: &Graph) -> Result<RationalMatrix> {
        let arcs = g.arcs();
        let u = || transition_matrix(g, &arcs).map(|u| u.into_matrix());
        match self {
            Operator::U => u(),
            Operator::UPlus => power_support(&u()?, 1),
            Operator::U2Plus => power_support(&u()?, 2),
            Operator::U3Plus => power_support(&u()?, 3),
            Operator::A => Ok(g.adjacency_matrix()),
            Operator::T => t_matrix(g),
            Operator::EdgeMatrix => Ok(edge_matrices(&arcs).edge_matrix()),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Operator::ALL
            .into_iter()
            .find(|op| op.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::OutOfRange(format!("unknown operator {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for op in Operator::ALL {
            assert_eq!(op.name().parse::<Operator>().unwrap(), op);
        }
        assert!("V".parse::<Operator>().is_err());
    }
}
