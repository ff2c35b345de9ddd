//! Distance signless Laplacian spectra of connected graphs, fractional
//! matching certificates, and factor existence checks, together with a
//! verification harness for a family of join graphs whose spectral radii
//! mark the thresholds where those certificates flip.
//!
//! Start with the runnable examples (`cargo run --example spectral_radius`)
//! or the `dsl-spectra` binary; the modules below are the library surface.
//!
//! ```
//! use dsl_spectra::{eta, fractional_matching_number_fast, Graph};
//!
//! let c5 = Graph::cycle(5)?;
//! assert!((eta(&c5)? - 12.0).abs() < 1e-9);
//! assert_eq!(fractional_matching_number_fast(&c5).to_string(), "5/2");
//! # Ok::<(), dsl_spectra::Error>(())
//! ```

pub mod cli;
pub mod distance;
pub mod eigen;
pub mod error;
pub mod extremal;
pub mod format;
pub mod graph;
pub mod matching;
pub mod quotient;

pub use distance::{distance_matrix, dsl_matrix, eta, transmissions};
pub use distance::{DistanceMatrix, DslMatrix, Transmissions};
pub use eigen::{Spectrum, SymMatrix, DEFAULT_TOL, JACOBI_MAX_ORDER};
pub use error::{Error, Result};
pub use extremal::{
    build_family, build_ghat, complete_split_quotient, family_eta_pair, family_partition,
    family_quotient, ghat_eta_pair, ghat_quotient, printed_poly_eval, published_eta,
    published_formula_checks, reproduce_table1, verify_theorem1, verify_theorem2, FamilyParams,
    PolyCheck, PublishedPoly, SpectralEntry, TableEntry, TableRow, TheoremReport, DUAL_PATH_TOL,
    FLAG_TOL, TIE_TOL,
};
pub use format::{
    encode_graph6, format_edgelist, parse_edgelist, parse_graph6, GraphFormat, GraphInput,
    GraphSource,
};
pub use graph::{Graph, NamedKind, VertexSet};
pub use matching::{
    bipartite_double_cover, find_factor_backtracking, fractional_matching_number_brute,
    fractional_matching_number_fast, has_k2ck_factor, max_deficiency_brute,
    optimal_fractional_matching, DeficiencyWitness, FractionalMatching, HalfInt, DEFAULT_BRUTE_CAP,
    DEFAULT_FACTOR_CAP,
};
pub use quotient::{is_equitable, quotient_matrix, Partition, QuotientMatrix};
