//! B-spline and NURBS bases, tensor-product surfaces and refinement.

mod build;
mod knot;
mod patch;
mod refine;

pub use build::{make_circle_patch, make_square_patch, CIRCLE_RADIUS};
pub use knot::{BasisEval, KnotVector, Span};
pub use patch::{Direction, NurbsPatch, SurfaceEval};
