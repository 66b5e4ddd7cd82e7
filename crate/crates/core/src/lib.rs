//! Cographs generated by integer creation sequences.
//!
//! Builds the graph `C(α₁, …, α_k)`, computes its Laplacian spectrum, clique
//! number and algebraic connectivity in closed form, and checks them against
//! brute-force oracles.

pub mod error;
pub mod families;
pub mod graphbuild;
pub mod graphparams;
pub mod oracle;
pub mod report;
pub mod seqcore;
pub mod spectra;
pub mod stats;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use graphbuild::{build_direct, build_recursive, CGraph, Graph, LaplacianMatrix};
pub use graphparams::{classify, clique_number, CliqueClass, GraphParams};
pub use seqcore::{CreationSequence, FamilyTag};
pub use spectra::{full_spectrum, quotient_eigs, quotient_matrix, LaplacianSpectrum};
