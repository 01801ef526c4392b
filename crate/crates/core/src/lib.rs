//! Quaternion algebra with closed-form solutions of the Sylvester equation
//! `a x - x b = c`.
//!
//! * [`quaternion`]: arithmetic on [`Quaternion`];
//! * [`relations`]: commutation, anticommutation, similarity and witnesses;
//! * [`roots`]: square roots, including products of equal-norm quaternions;
//! * [`sylvester`]: classification and solution sets in every regime;
//! * [`oracle`]: an independent 4x4 real-embedding solver used for checking;
//! * [`verify`]: agreement checks between the two;
//! * [`text`]: the literal grammar (`1-2i+0.5k`, `(w,x,y,z)`).

pub mod error;
pub mod oracle;
pub mod quaternion;
pub mod relations;
pub mod roots;
pub mod sylvester;
pub mod text;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use quaternion::Quaternion;
pub use relations::{anticommutes, commutes, is_similar, similarity_witness};
pub use roots::{linear_form, sqrt, sqrt_product, LinearFormCoeffs, RootKind, RootSet};
pub use sylvester::{
    classify, solve, Classification, SolutionKind, SolutionSet, SylvesterProblem,
};
pub use text::{parse_quaternion, ParseError};
pub use tolerance::Tolerance;
