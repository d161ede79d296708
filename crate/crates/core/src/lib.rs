//! Color-balanced divisions of graphs with small separators, and swap local
//! search for maximum coverage on separable instances.

pub mod balancing;
pub mod coverage;
pub mod division;
pub mod generators;
pub mod graph;
pub mod rng;
pub mod scalar;
pub mod separator;

/// Exact rational scalar used for certificates.
pub type Rational = num_rational::BigRational;

/// Balanced partition with exact certificates.
pub type ExactPartition = balancing::BalancedPartition<Rational>;
pub type F64Partition = balancing::BalancedPartition<f64>;
pub type ExactTwoVectorSet = balancing::TwoVectorSet<Rational>;
pub type F64TwoVectorSet = balancing::TwoVectorSet<f64>;
