//! Exact bound arithmetic, structural classification, per-bound reports
//! and corpus scans.

mod classify;
mod enumerate;
mod expr;
mod file;
mod scan;
mod theorem;
mod verify;

pub use classify::{apply_construction_tags, classify, Classification, Tri, EXHAUSTIVE_CAP, SEARCH_DEGREE_CAP};
pub use enumerate::{enumerate_transitive_small, MAX_ENUMERATION_DEGREE, TRANSITIVE_COUNTS};
pub use expr::{ratio, BoundExpr};
pub use file::{parse_group_file, parse_perm_group, write_group_file, write_perm_group, GroupFile};
pub use scan::{builtin_corpus, load_corpus_dir, scan_corpus, CorpusEntry, ScanReport, ScanRow, ScanSummary};
pub use theorem::{bound_value, BoundParams, Theorem, ALL_THEOREMS};
pub use verify::{verify_linear, verify_perm, verify_spec, BoundReport, LengthSource, LinearFacts, Verdict};
