//! Exact-arithmetic toolkit for circulant Hadamard matrices.
//!
//! The crate has three layers. The base is exact circulant algebra over
//! arbitrary-precision rationals ([`circulant`]) together with fraction-free
//! rank certificates ([`rank`]). On top of that sits the structural analysis
//! of candidate rows: the odd/even decomposition with its Gram matrices,
//! partial row sums, and classification conditions ([`decomposition`]), the
//! mod-2 reduction lab ([`f2`]), and the coding-theory bounds that feed the
//! nonexistence arguments ([`coding`]). The top layer is a symmetry-reduced
//! exhaustive search over ±1 first rows ([`search`]) plus the named invariant
//! suites the command-line tool exposes ([`lemmas`]).
//!
//! Everything except the explicitly floating-point eigenvalue diagnostic is
//! computed exactly.

pub mod circulant;
pub mod coding;
pub mod decomposition;
pub mod error;
pub mod f2;
pub mod lemmas;
pub mod rank;
pub mod scalar;
pub mod search;

pub use circulant::{
    brute_force_hadamard_rows, eigen_report, is_circulant_hadamard, paf, sylvester_hadamard,
    Circulant, DenseSignMatrix, EigenvalueReport, PafSpectrum, SignRow,
};
pub use coding::{
    hamming, max_code_bruteforce, monochromatic_bound_check, plotkin_bound, CodeOracle,
    MonochromaticReport, OrthogonalHost, SubmatrixSpec,
};
pub use decomposition::{
    classify_conditions, decompose, graphr_identity, graphr_row_identity, interleave,
    misscase_check, mod2_symmetric_orthogonal, pi_shift, projection_check, regularity_profile,
    split, ConditionProfile, Decomposition, MisscaseReport, Mod2Report, ProjectionReport,
    RegularityProfile,
};
pub use error::{Error, Result};
pub use f2::{f2_multiply, macwilliams_survey, reduce_mod2, F2Circulant, SurveyReport};
pub use lemmas::SuiteResult;
pub use rank::{
    check_rank_gram_equality, consecutive_equal_rows_implies_constant, first_equals_third_sum,
    rank, rank1_structure, rank2_coefficients, Rank1Class, RankCertificate,
};
pub use scalar::Scalar;
pub use search::{
    canonicalize, csv_summary, full_search, rank1_campaign, rank1_campaign_mirrored,
    rank2_campaign, run as run_search, SearchConfig, SearchMode, SearchReport,
};
