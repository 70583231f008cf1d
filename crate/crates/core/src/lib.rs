//! Exact Hom-Lie algebras over ℚ and GF(p), fuzzy Hom-Lie subalgebras and
//! ideals stored as level flags, and an exhaustive pointwise oracle over
//! small finite fields.

pub mod error;
pub mod field;
pub mod format;
pub mod fuzzy;
pub mod hom_lie;
pub mod linalg;
pub mod oracle;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use fuzzy::{flag_from_table, FlagReport, FuzzyFlag, FuzzyTable, Level};
pub use hom_lie::{AxiomReport, ClosureMode, HomLieAlgebra, Morphism};
pub use linalg::{Matrix, Subspace, Vector, DEFAULT_ENUMERATION_CAP};
