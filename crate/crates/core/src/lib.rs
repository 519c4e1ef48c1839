//! Exact graph-sum computations of `S_n`-equivariant Euler characteristics.
//!
//! Symmetric functions are stored in the power-sum basis with exact rational
//! coefficients. Genus generating series carry an explicit window of cells
//! that are known; every operation propagates it and never guesses.

pub mod cache;
pub mod error;
pub mod graph;
pub mod partition;
pub mod pipeline;
pub mod rational;
pub mod series;
pub mod specht;
pub mod symfunc;
pub mod twopart;
pub mod wreath;

pub use error::{Error, ParseError, Result};
pub use graph::{DecoratedGraph, GraphAutomorphism, HalfEdgeGraph};
pub use partition::{GenPartition, Partition};
pub use pipeline::{Coefficients, FixtureKind, FixtureTable, RPolynomial};
pub use rational::Q;
pub use series::{GenusSeries, Known, Window};
pub use specht::{
    centralizer_order, class_enumeration, class_representative, conjugacy_type, WreathElement,
    WreathFactor,
};
pub use symfunc::SymFunc;
pub use twopart::TwoPartition;
pub use wreath::{d_theta, induced_trivial_character, LambdaAlgebra, WreathSymFunc};
