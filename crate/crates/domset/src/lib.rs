//! Constructive dominating sets for graphs of minimum degree five (size at
//! most n/3) and four (at most 4n/11), built as a potential-function move
//! system whose every step is re-scored against its guarantee, together with
//! an exact charge-redistribution verifier for terminal states, an exact
//! branch-and-bound oracle, instance generators, and classical bounds.

pub mod bounds;
pub mod discharge;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod residual;
pub mod rules;

pub use bounds::{classical_bounds, ClassicalBounds, Rational};
pub use discharge::{assign_charges, verify_terminal, ChargeMap, TerminalReport};
pub use generate::{generate, named_fixture, GeneratorSpec, Model};
pub use graph::{degree_stats, parse_graph, DegreeStats, Graph};
pub use oracle::{is_dominating, minimum_dominating_set, OracleResult};
pub use residual::{
    blue_profile, build_residual, potential, score_move, white_components, Color, ResidualGraph,
    SchemeId, WeightScheme,
};
pub use rules::{
    extend_independent_set, find_move, solve, Move, RuleId, SolveError, SolveResult,
};
