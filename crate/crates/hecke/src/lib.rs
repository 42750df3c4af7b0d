//! Irreducible representations of Hecke algebras of types A, B and D over
//! finite fields, built from the Hoefsmit matrix model, with invariant forms,
//! intertwiners and predictions for the image of the derived Artin subgroup.

pub mod cli;
pub mod forms;
pub mod gf;
pub mod hoefsmit;
pub mod images;
pub mod matrix;
pub mod report;
pub mod suites;
mod poly;
pub mod tableaux;
pub mod typed;

pub use gf::{make_field, Fel, FieldCtx, GfError};
pub use matrix::Mat;
pub use tableaux::{DoublePartition, DoubleTableau, Partition};
