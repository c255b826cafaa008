//! Graph operators for linear Poisson structures and the assembled graph sum.

mod assemble;
mod operator;

pub use assemble::{
    assemble_linear_star, assemble_xn_star_y, chain_aggregated_weight, prime_types, AuditRow,
    KontsevichStar, RowSource, WeightSource,
};
pub use operator::{
    coverage_report, graph_to_operator, loop_vanishing_report, ColoredOperator, CoverageRow,
    LoopEntry, LoopReport,
};
