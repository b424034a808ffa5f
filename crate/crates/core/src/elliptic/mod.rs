//! Elliptic fibrations in Weierstrass form.

pub mod automorphism;
pub mod configurations;
pub mod equivariance;
pub mod fixture;
pub mod form;
pub mod kodaira;
pub mod model;
pub mod orbits;

pub use automorphism::ec_automorphism_bound;
pub use equivariance::{verify_equivariance, BaseMap, FibreAction};
pub use fixture::{AnyModel, ModelFixture};
pub use form::{factor_places, BinaryForm, Place, Valuation};
pub use kodaira::KodairaType;
pub use model::{discriminant, x66, y66, EulerLedger, ModelField, PlaceData, WeierstrassModel};
pub use orbits::{base_orbits, force_a_zero, BaseAction, OrbitDecomposition};
