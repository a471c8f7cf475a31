//! Generalized Paley graphs over finite fields.
//!
//! The crate builds `GP(q, d)` and cyclotomic Cayley graphs on GF(q),
//! computes their clique numbers exactly, and produces machine-readable
//! certificates for the known upper and lower bounds. It also computes
//! direction sets of point sets in the affine plane AG(2, q), together
//! with the Cartesian-product lower bound and the Rédei polynomial
//! identities it rests on.
//!
//! Module map:
//!
//! - [`field`]: GF(p^e) arithmetic with deterministic construction.
//! - [`arith`]: exact integer helpers (digits, Kummer, isqrt, factoring).
//! - [`graph`]: graph construction and exact clique search.
//! - [`directions`]: direction sets and the sum-product style corollaries.
//! - [`poly`] and [`redei`]: dense polynomials, Rédei slices, p-th roots.
//! - [`bounds`]: clique-number bound calculators and certificates.
//! - [`families`]: the explicit infinite families and counterexamples.
//! - [`suites`]: batch invariant sweeps used by `paley verify`.

pub mod arith;
pub mod bitset;
pub mod bounds;
pub mod directions;
pub mod error;
pub mod families;
pub mod field;
pub mod graph;
pub mod poly;
pub mod redei;
pub mod suites;

pub use bounds::{BoundBundle, Certificate, CertificateKind};
pub use directions::{Direction, DirectionSet, PointSet};
pub use error::{Error, Result};
pub use field::{build_field, Field, FieldElement, FieldSpec};
pub use graph::{CliqueResult, Graph};
pub use poly::Poly;

/// Version tag written at the top of every JSON report.
pub const SCHEMA_VERSION: u32 = 1;
