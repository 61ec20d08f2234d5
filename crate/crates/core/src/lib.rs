//! Exact computations for braided pointed fusion categories `Vec_G` whose
//! braiding is presented by a quadratic form on a finite abelian group `G`.
//!
//! The crate computes the Müger center, classifies braided module categories
//! up to Schur equivalence, and assembles the 2-categorical S̃-matrix along two
//! independent routes:
//!
//! - the *direct* route, through module braidings on the regular module
//!   category ([`smatrix::st_matrix_direct`]);
//! - the *center* route, through the 1-categorical S-matrix of the Drinfeld
//!   center restricted to Müger columns with redundant rows removed
//!   ([`smatrix::st_matrix_via_center`]).
//!
//! Both are compared against the character table of the Müger-center group by
//! [`smatrix::verify_theorem`].
//!
//! All scalars are roots of unity stored as exact rational exponents; floating
//! point only appears in [`roots::orthogonality_defect`].

pub mod center;
pub mod error;
pub mod forms;
pub mod groups;
pub mod modcats;
pub mod rational;
pub mod roots;
pub mod smatrix;

pub use error::{Error, Result};
pub use forms::{Bicharacter, Flavor, MugerClassification, QuadraticForm};
pub use groups::{Character, FiniteAbelianGroup, GroupElement, RestrictedCharacter, Subgroup};
pub use modcats::{BraidedModuleCat, SchurClass};
pub use rational::Rational;
pub use roots::{Label, LabeledUnityMatrix, PermutationWitness, UnityScalar};
pub use smatrix::{CharacterTable, TheoremReport, Verdict};
