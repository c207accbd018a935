//! Normscope decides whether a finite-dimensional norm is euclidean, i.e.
//! induced by an inner product, using three independent criteria:
//!
//! 1. the quadruple (Aronszajn) criterion: equal sides and one equal diagonal
//!    of two parallelograms force the other diagonals to agree;
//! 2. the parallelogram identity in residual form;
//! 3. the inner-product axioms applied to the polarization form
//!    `(|v+w|^2 - |v|^2 - |w|^2) / 2`.
//!
//! For euclidean norms the toolkit recovers the Gram matrix; for
//! non-euclidean norms it searches for machine-checkable violation
//! witnesses. A report front end serializes verdicts to JSON and renders
//! unit balls and witness parallelograms as SVG.

pub mod aronszajn;
pub mod geometry2d;
pub mod lift3d;
pub mod matrix;
pub mod norm;
pub mod optim;
pub mod parse;
pub mod polarize;
pub mod report;
pub mod rng;
pub mod svg;

pub use matrix::Matrix;
pub use norm::{eval_norm, gauge_normalize, Norm, NormError, NormFamily, NormSpec, PExponent, Vector};
pub use parse::{parse_norm_spec, ParseError};
