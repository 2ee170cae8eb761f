//! Weighted simplicial homology over `R = F[[pi]]` with exact arithmetic.

pub mod bistructure;
pub mod chain;
pub mod cli;
pub mod complex;
pub mod fixtures;
pub mod homology;
pub mod linalg;
pub mod oracle;
pub mod ring;
