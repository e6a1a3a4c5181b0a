//! Isomorph-free generation and the brute-force oracles it is checked against.

mod assemble;
mod bicoloured;
mod generate;
mod oracle;

pub use assemble::{assemble, PartData, PartSpec};
pub use bicoloured::{enumerate_bicoloured, enumerate_tangles, MAX_BICOLOURED_VERTICES};
pub use generate::{
    count_labelled_via_burnside, generate_31free, generate_31free_with, skeleta_up_to,
    tangles_of_size, GenerateOptions, MAX_BURNSIDE_VERTICES, MAX_GENERATE_VERTICES,
};
pub use oracle::{enumerate_posets_oracle, MAX_ORACLE_VERTICES, MAX_ORACLE_VERTICES_EXTENDED};

/// Environment variable that raises the default size bounds.
pub const MAX_N_ENV: &str = "TANGLECOUNT_MAX_N";

/// `default`, or the value of [`MAX_N_ENV`] when that is larger.
pub fn size_cap(default: usize) -> usize {
    std::env::var(MAX_N_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(default, |v| v.max(default))
}
