//! Z4-linear Hadamard codes `H^{r1,r2}` and extended perfect codes
//! `C^{r1,r2}`: construction from the lexicographic matrices `A^{r1,r2}`,
//! Gray images, and the kernel and rank invariants that tell them apart up
//! to equivalence.

pub mod classify;
pub mod constructions;
pub mod error;
pub mod family;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod verify;
pub mod z4;

pub use error::{Error, Result};
pub use family::{
    binary_image, family_params_table, hadamard_code, perfect_code, Alphabet, BinaryCode, Family,
    FamilyParams, QuaternaryCode,
};
pub use matrix::{build_a, code_type, is_orthogonal, null_space, span_enumerate, CodeType, QuaternaryMatrix};
pub use z4::{gray_inverse, gray_map, hamming_distance, lee_distance, lee_weight, negate, BinaryWord, Z4Word};
