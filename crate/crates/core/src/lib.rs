//! Classification of Lie algebras generated by Pauli strings.
//!
//! Generators are reduced by contractions to a canonical anti-commutation
//! graph, which fixes the algebra up to isomorphism.

pub mod classify;
pub mod error;
pub mod genfile;
pub mod gf2;
pub mod graph;
pub mod oracle;
pub mod par;
pub mod pauli;
pub mod reduction;
pub mod report;
pub mod shape;
pub mod sweep;

pub use classify::{
    algebra_descriptor, canonical_generators, classify, extension_suggestions, is_universal, min_qubits, AlgebraDescriptor,
    CanonicalForm, Classification, ComponentReport, DependenceClass,
};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
pub use graph::{build_graph, AntiCommutationGraph, ContractionRecord, GeneratorSystem};
pub use par::Exec;
pub use pauli::{format_pauli, parse_pauli, Clifford, PauliKey, PauliString, Style};
pub use shape::{CanonicalShape, Family, Spider};
