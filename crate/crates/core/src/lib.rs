//! Topical vocabulary test form generation for single reading passages.
//!
//! The pipeline turns one passage into yes/no vocabulary test forms: detect
//! the passage's main topic as clusters of related terms, pick in-document
//! topical terms, related terms from an external lexicon, and unrelated
//! distractors, then assemble easy/difficult 50-item forms with answer keys.
//!
//! Modules follow the processing order:
//!
//! * [`resources`] — load and validate the lexical data files.
//! * [`textprep`] — tokenize, tag, detect multiword expressions, build the
//!   term inventory.
//! * [`embed`] — vector lookups, document vectors, centroids, cosine.
//! * [`cluster`] — affinity propagation over term vectors and cluster
//!   ranking against the document vector.
//! * [`select`] — PMI-family association measures, the support score, and
//!   the three candidate pools (TID / TOD / NT).
//! * [`assemble`] — grade logic and deterministic form assembly/rendering.
//! * [`score`] — response-sheet scoring and the must-know subset.
//! * [`pipeline`] — end-to-end orchestration and reproducible run records.

pub mod assemble;
pub mod cluster;
pub mod embed;
pub mod pipeline;
pub mod resources;
pub mod score;
pub mod select;
pub mod textprep;

pub use resources::{load_bundle, validate_bundle, ResourceBundle};
pub use textprep::TermInventory;
