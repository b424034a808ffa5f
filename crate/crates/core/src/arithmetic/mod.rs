//! Finite fields, point counting and supersingularity tests.

pub mod count;
pub mod field;
pub mod supersingular;

pub use count::{
    count_points, extension_consistency, quadratic_character, supersingular_count_prediction, CurveCounter,
    ExtensionCheck, FiberCount, FiberKind, PointCountRecord,
};
pub use field::{fp2, fp4, is_prime, Fp, Fp2, Fp4, QuadExt};
pub use supersingular::{supersingular_congruence_test, CongruenceWitness};
