pub mod corpus;
pub mod diagram;
pub mod engine;
pub mod error;
pub mod matrix;
pub mod ratfun;
pub mod finitetype;
pub mod markov;

pub use diagram::{parse_braid, parse_singular_tangle, parse_tangle, MoveSpec, Sign, SingularStringLink, StringLinkDiagram};
pub use engine::{burau_matrix, classical_burau, series_burau};
pub use error::{Error, ParseError, Result};
pub use matrix::{BurauMatrix, SeriesMatrix};
pub use ratfun::{HSeries, LaurentPoly, RatFun};
