//! Linear codes over finite fields: generalized Hamming weights, subcode
//! support weight distributions and minimality of subcodes.

pub mod bits;
pub mod blocking;
pub mod budget;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf;
pub mod ghw;
pub mod io;
pub mod matrix;
pub mod minimality;
pub mod reproduce;
pub mod subspace;

pub use bits::Bits;
pub use blocking::PGPointSet;
pub use budget::Budget;
pub use code::{Extremal, LinearCode};
pub use error::{Error, Result};
pub use gf::{Elem, Field};
pub use ghw::{SswdTable, WeightReport};
pub use matrix::{Matrix, Rref};
pub use minimality::{Algorithm, MinimalityProfile};
pub use subspace::{gaussian_binomial, BasisView, ColumnMultiset, SubspaceBasis, SubspaceEnumerator};
