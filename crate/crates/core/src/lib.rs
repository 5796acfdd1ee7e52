//! Supremum sections of d-representations and their collapsibility.
//!
//! A d-representation is a ground set with `d` linear orders on it. Its
//! supremum section `Σ(R)` is the simplicial complex of subsets dominated by
//! every element in at least one order. This crate enumerates `Σ(R)`, builds
//! a complete acyclic matching of its face poset by induction on `d`, turns
//! the matching into an explicit collapse to a point, and checks every step
//! against brute-force oracles.
//!
//! ```
//! use supsec::{build_matching, extract_collapse_sequence, replay, supremum_section, Representation};
//!
//! let r = Representation::from_names(&[
//!     ["a", "b", "e", "d", "c"],
//!     ["c", "b", "a", "d", "e"],
//!     ["e", "d", "c", "b", "a"],
//! ])
//! .unwrap();
//! let sigma = supremum_section(&r);
//! assert_eq!(sigma.len(), 14);
//! let matching = build_matching(&r).unwrap();
//! let collapse = extract_collapse_sequence(&sigma, &matching).unwrap();
//! assert!(replay(&sigma, &collapse.sequence).unwrap().is_point());
//! ```

pub mod checks;
pub mod collapse;
pub mod complex;
pub mod dot;
pub mod error;
pub mod face;
pub mod format;
pub mod morse;
pub mod order;
pub mod random;
pub mod search;
pub mod supremum;

pub use collapse::{
    elementary_collapse, extract_collapse_sequence, free_faces, is_collapsible_bruteforce, replay,
    Collapsibility, CollapseSequence, CollapseStep, Extraction,
};
pub use complex::{HasseDiagram, SimplicialComplex};
pub use error::{Error, Result};
pub use face::{Element, Face};
pub use morse::{
    build_matching, classify_layer, layer_matching, psi, verify_matching, LayerClassification,
    MatchedPair, MorseMatching, Side, VerificationReport,
};
pub use order::{Ground, LinearOrder, Representation};
pub use supremum::{contains_complex, dominates, dominates_in_order, is_face, supremum_section};
