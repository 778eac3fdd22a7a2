//! Dyck tilings of type D and their companions of types A and B.
//!
//! Everything is exact: generating functions and matrix entries are
//! [`PolyQ`] values with big-integer coefficients.

pub mod error;
pub mod incidence;
pub mod linkflip;
pub mod pathword;
pub mod qpoly;
pub mod tiling;
pub mod treeform;

pub use error::{Error, Result};
pub use pathword::{PathWord, Step};
pub use qpoly::PolyQ;
