//! Exact computations in the Solomon descent algebra of the symmetric group
//! over prime fields, the integers and the rationals: lifted primitive
//! idempotents, modular Lie modules, their p-th symmetrizations and the
//! character-level consequences for `L_{2p}`.
//!
//! The core is generic over the coefficient ring ([`Scalar`] / [`Field`]);
//! the aliases below name the instances used in practice.

pub mod abacus;
pub mod algebra;
pub mod character;
pub mod classfn;
pub mod descent;
pub mod error;
pub mod idempotent;
pub mod lie;
pub mod linear;
pub mod partition;
pub mod perm;
pub mod radical;
pub mod scalar;
pub mod summand;
pub mod wreath;

pub use algebra::GroupAlgebraElement;
pub use classfn::ClassFunction;
pub use descent::{DescentAlgebra, DescentElement};
pub use error::{Error, Result, MAX_DEGREE};
pub use linear::Subspace;
pub use partition::{Composition, PEquivClass, Partition};
pub use perm::Permutation;
pub use scalar::{Field, FieldKind, Fp, Scalar};

/// The integers. Builds keep overflow checks on, so arithmetic is exact or panics.
pub type Integer = i64;
pub type Rational = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
