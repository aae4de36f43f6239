//! Exact structure-constant engine for n-ary Hom-algebras.
//!
//! Algebras are stored as sparse structure constants over the rationals.
//! [`identities`] decides the defining identities (Hom-Nambu, Hom-Jordan and
//! Hom-Lie triple systems, Hom-associativity, ...) exhaustively or by seeded
//! random sampling, [`constructions`] turns algebras into new algebras with
//! the hypotheses of each construction checked up front, and [`generators`]
//! builds the concrete algebras (fermionic systems, octonions, the 27-dim
//! exceptional Jordan algebra, matrix triple systems, ...).

pub mod algebra;
pub mod constructions;
pub mod generators;
pub mod identities;
pub mod io;
pub mod linalg;

pub use algebra::{AlgebraError, HomAlgebra};
pub use constructions::{ConstructionError, Constructor, Recipe, TraceFunctional};
pub use identities::{CheckConfig, CheckError, CheckMode, CheckReport, Identity, ModeSelect, Witness, WitnessArgs};
pub use linalg::{LinearMap, MultilinearMap, Scalar, Vector};
