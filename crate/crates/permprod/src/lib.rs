//! Command-line front end for `permprod-core`: a versioned JSON envelope,
//! independent emit-time checks on raw image vectors and a parallel survey.

pub mod check;
pub mod cli;
pub mod envelope;
pub mod survey;

pub use cli::run;
