//! Lyndon and non-overlapping LZ factorizations, the domain structures that
//! relate the two, and an empirical checker for the bound `m < 2z`.

pub mod bounds;
pub mod domain;
pub mod error;
pub mod lyndon;
pub mod lz;
pub mod report;
pub mod text;

pub use bounds::{
    check_theorem, exhaustive_search, expected_counts, expected_lz_phrases, extdom_partition, generate_family,
    FamilyCounts, SearchConfig, SearchRecord, SearchSummary, TheoremReport,
};
pub use domain::{
    all_domains, boundary_budget, canonical_decomposition, compute_domain, extended_domain, find_p_groups,
    find_tandem_domains, verify_lemmas, BoundaryBudget, CanonicalDecomposition, CanonicalPart, Domain, DomainTable,
    LemmaReport, PGroup, TandemDomain,
};
pub use error::{Error, Result};
pub use lyndon::{lyndon_factorize, oracle_lyndon_dp, LyndonFactorization, LyndonRun};
pub use lz::{lz_factorize, oracle_lz_naive, LzFactorization};
pub use text::{is_lyndon, leftmost_occurrence, lex_compare, Span, Text};
