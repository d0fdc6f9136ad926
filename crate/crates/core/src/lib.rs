//! Isogeometric finite elements for laminated composite plates.
//!
//! The plate kinematics follow a unified thickness expansion: every
//! displacement component is written as a sum of known thickness functions
//! times unknown in-plane fields, and the in-plane fields are discretized
//! with NURBS basis functions. The default expansion is the sinusoidal
//! in-plane / quadratic transverse model (`SINUS-W2`), but any list of
//! thickness functions may be used.
//!
//! The numerical core is generic over the scalar type (`f32` or `f64`); the
//! aliases at the crate root fix it to `f64`, which is what the benchmark
//! runner uses.

// `!(x > 0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod assembly;
pub mod error;
pub mod laminate;
pub mod nurbs;
pub mod post;
pub mod quadrature;
pub mod scalar;
pub mod solve;
pub mod theory;

pub use error::{Error, Result};
pub use scalar::Real;

pub type KnotVector = nurbs::KnotVector<f64>;
pub type NurbsPatch = nurbs::NurbsPatch<f64>;
pub type BasisEval = nurbs::BasisEval<f64>;
pub type Lamina = laminate::Lamina<f64>;
pub type Layup = laminate::Layup<f64>;
pub type ConstitutiveBlocks = laminate::ConstitutiveBlocks<f64>;
pub type ThicknessExpansion = theory::ThicknessExpansion<f64>;
pub type ThicknessIntegralTable = theory::ThicknessIntegralTable<f64>;
pub type PlateModel = assembly::PlateModel<f64>;
pub type GlobalSystem = assembly::GlobalSystem<f64>;
pub type ConstrainedSystem = assembly::ConstrainedSystem<f64>;
pub type StaticResult = solve::StaticResult<f64>;
pub type ModalResult = solve::ModalResult<f64>;
