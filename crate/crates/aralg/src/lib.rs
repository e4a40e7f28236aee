//! Auslander-Reiten theory for finite-dimensional quiver algebras, computed
//! in exact arithmetic.
//!
//! The crate builds basic algebras from quivers with admissible relations,
//! works with right modules as matrix representations, and computes the
//! classical homological toolkit (homs, duals, tensors, minimal resolutions,
//! transpose, Ext^1, stable homs) together with its complex-level
//! counterpart: windowed cochain complexes, the Nakayama translate
//! `t X = pX (x) DLambda`, a constructive Serre-duality pairing on the
//! homotopy category of injectives, almost split sequences, Auslander-Reiten
//! triangles, and comparisons over truncated repetitive algebras.
//!
//! Start with the runnable programs in `examples/`; the `aralg` binary
//! exposes the same functionality as a small command line tool.

pub mod algebra;
pub mod complex;
pub mod cxres;
pub mod endo;
pub mod homtot;
pub mod error;
pub mod field;
pub mod linalg;
pub mod module;
pub mod poly;
pub mod presets;
pub mod resolve;
pub mod quiver;

pub use algebra::{build_path_algebra, radical_of_endo_algebra, AbstractAlgebra, Algebra};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use linalg::{kernel_basis, pullback_pair, solve_factorization, Matrix, Subspace};
pub use quiver::{Path, Quiver, Relation};
