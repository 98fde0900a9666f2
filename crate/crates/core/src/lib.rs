//! Block combinatorics for category O of the queer Lie superalgebra q(n).
//!
//! Weights have exact coordinates in ℚ extended by formal symbols. The core
//! types are generic over the rational coefficient type; the aliases below fix
//! it to [`num_rational::Rational64`], with `Big*` variants on arbitrary
//! precision rationals.

pub mod blockone;
pub mod charring;
pub mod coord;
pub mod error;
pub mod io;
pub mod linalg;
pub mod linkage;
pub mod oracle;
pub mod reduce;
pub mod sample;
pub mod schur;
pub mod selfcheck;
pub mod weight;
pub mod zigzag;

pub use error::{Error, Result};

pub type Rational = num_rational::Rational64;
pub type BigRational = num_rational::BigRational;

pub type Scalar = coord::Scalar<Rational>;
pub type CosetClass = coord::CosetClass<Rational>;
pub type Weight = weight::Weight<Rational>;
pub type LinkageWitness = linkage::LinkageWitness<Rational>;

pub type BigScalar = coord::Scalar<BigRational>;
pub type BigWeight = weight::Weight<BigRational>;

pub type FormalCharacter = charring::FormalCharacter<Rational>;
pub type BlockChart = blockone::BlockChart<Rational>;
pub type ZigzagAlgebra = zigzag::ZigzagAlgebra<Rational>;
pub type ZigzagElement = zigzag::ZigzagElement<Rational>;
