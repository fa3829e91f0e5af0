//! Exact-arithmetic toolkit for spectral graph determination: characteristic
//! polynomials of the adjacency, Laplacian, signless Laplacian, and
//! normalized Laplacian matrices (and of complements), cospectrality
//! decisions, spectrum-derived invariants, closed-form family spectra,
//! cospectral-pair constructions, and exhaustive small-n censuses.
//!
//! ```
//! use specdet_core::{are_cospectral, generate, FamilySpec, Graph, MatrixKind};
//!
//! // the star on five vertices shares its adjacency spectrum with C4 + K1
//! let star = generate(&FamilySpec::Star(5)).unwrap();
//! let mate = Graph::disjoint_union(&[
//!     generate(&FamilySpec::Cycle(4)).unwrap(),
//!     Graph::empty(1),
//! ]);
//! assert!(are_cospectral(&star, &mate, &[MatrixKind::A]));
//! assert!(!are_cospectral(&star, &mate, &[MatrixKind::A, MatrixKind::L]));
//! ```

pub mod cache;
pub mod canon;
pub mod certify;
pub mod charpoly;
pub mod constructions;
pub mod ds;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod quadratic;
pub mod roots;
pub mod spectra;
pub mod srg;
pub mod structure;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use charpoly::CharPoly;
pub use error::{Error, Result};
pub use family::{generate, FamilySpec};
pub use graph::Graph;
pub use matrix::ExactMatrix;
pub use quadratic::QuadraticNumber;
pub use spectra::{are_cospectral, char_poly, fingerprint, MatrixKind, SpectralFingerprint};
pub use srg::{SrgParams, SrgSpectrum};
pub use structure::{structure_report, StructureReport};
