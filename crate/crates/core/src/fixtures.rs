//! The two worked examples as input documents.

use crate::document::{parse_input, to_problem};
use crate::error::Result;
use crate::gluing::GluingProblem;

/// `P^1 x P^1` and `P^2` glued along a `(1,1)` curve and a line, with three
/// pairs of lines on each side through three points of the double curve.
pub const EX1: &str = include_str!("../fixtures/ex1.json");

/// Six planes glued in a cycle along lines.
pub const SIX_CYCLE: &str = include_str!("../fixtures/sixcycle.json");

pub fn ex1() -> Result<GluingProblem> {
    to_problem(&parse_input(EX1)?)
}

pub fn six_cycle() -> Result<GluingProblem> {
    to_problem(&parse_input(SIX_CYCLE)?)
}
