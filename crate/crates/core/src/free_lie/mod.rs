//! Free Lie algebra on letters `X < Y (< Z ...)`: Lyndon basis, bracket monomials and
//! the Hausdorff series.

mod bracket;
mod hausdorff;
mod lgraph;
mod lyndon;
mod series;

pub use bracket::BracketTree;
pub use hausdorff::{
    dynkin_projection, hausdorff_associative, hausdorff_linear_in_y, hausdorff_series,
};
pub use lgraph::lie_to_lgraph;
pub use lyndon::{is_lyndon, lyndon_words, standard_factorization};
pub use series::{LieSeries, LyndonWord};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("not a Lie element: word {0} cannot lead a Lie polynomial")]
    NotALieElement(String),
    #[error("{0} is not a Lyndon word")]
    NotLyndon(String),
    #[error("bracket monomial {0} has no graph: {1}")]
    NoGraph(String, String),
}
