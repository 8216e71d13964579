//! Exact power domination, power propagation time and power throttling on
//! small simple graphs.
//!
//! Vertex sets are fixed-width bitsets ([`VertexSet`]), so graphs hold at most
//! [`MAX_VERTICES`] vertices. Interval representations are generic over an
//! exact ordered scalar; [`RationalIntervals`] is the usual instantiation.

pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod propagation;
pub mod reference;
pub mod solvers;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use interval::{IntervalRepresentation, Scalar};
pub use propagation::{
    forcing_chains, power_propagation_time, propagate, q_sets, zero_forcing_propagate, ForceRule,
    PropTime, PropagationTrace,
};
pub use solvers::{
    delta_lower_bound, domination_number, power_domination_number, product_throttling,
    product_throttling_k, pt_pd_k, sum_throttling, SolveOptions, ThrottlingResult,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};

/// Exact rational endpoint type.
pub type Rational = num_rational::Rational64;

/// Interval representation with exact rational endpoints.
pub type RationalIntervals = IntervalRepresentation<Rational>;
