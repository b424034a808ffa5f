//! Exact-arithmetic replay of the classification of K3 surfaces with an
//! automorphism of order 66 in characteristic `p != 2, 3`.
//!
//! Every numeric step (eigenvalue profiles, Lefschetz numbers, fixed-locus
//! bounds, fibre ledgers, weight congruences, point counts) is computed with
//! integers, rationals or finite fields; geometric inputs enter as cited facts.

pub mod arithmetic;
pub mod cyclotomic;
pub mod eigenprofile;
pub mod elliptic;
pub mod engine;
pub mod error;
pub mod fixedlocus;
pub mod poly;
pub mod ring;
pub mod weights;

pub use arithmetic::{
    count_points, supersingular_congruence_test, supersingular_count_prediction, Fp, PointCountRecord,
};
pub use cyclotomic::{cyclotomic_polynomial, primitive_root_sum, RootOfUnity};
pub use eigenprofile::{enumerate_profiles, EigenProfile, ProfileConstraint, K3_H2_DIM};
pub use elliptic::{
    base_orbits, verify_equivariance, AnyModel, BaseAction, FibreAction, KodairaType, ModelFixture, WeierstrassModel,
};
pub use engine::{
    run_complex_case, run_tame_case, run_wild_case, supersingularity_report, CaseTag, ProofStep, ProofTranscript,
    Verdict,
};
pub use error::{Error, Result};
pub use fixedlocus::{FixedLocus, HodgeBound};
pub use weights::{solve, CongruenceSystem, OrderDecomposition, WeightSolution};
