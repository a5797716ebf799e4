//! Code constructions: simplex codes and their punctured forms,
//! Solomon–Stiffler codes, padding with simplex blocks, the extension that
//! breaks the generalized Ashikhmin–Barg ratio, cyclic codes, and the fixed
//! example matrices.

mod cyclic;
mod extension;
mod padding;
mod registry;
mod simplex;
mod solomon_stiffler;

pub use cyclic::{cyclic_code, cyclotomic_cosets, CyclicSpec};
pub use extension::{ab_violating_extend, Extension};
pub use padding::{min_padding_ts, pad_with_simplex, padded_levels};
pub use registry::{paper_example, EXAMPLE_NAMES};
pub use simplex::{punctured_simplex, simplex, simplex_matrix, simplex_support_weight, PuncturedSimplex};
pub use solomon_stiffler::{solomon_stiffler, ss_predicted_weights, SolomonStiffler, SolomonStifflerSpec};
