//! Melas and Zetterberg codes over GF(p): dual-code weights, low-weight
//! pattern counts, pure-weight-5 Zetterberg words, and the MacWilliams link.

mod macwilliams;
mod patterns;
mod pure_weight;
mod weights;

pub use macwilliams::{macwilliams_identity_check, sample_points, MACWILLIAMS_LIMIT};
pub use patterns::{
    count_pattern_tuples, gamma5_direct, gamma_d, gamma_oracle, pattern_count_closed,
    pattern_tuple_count_closed, supported_patterns, PatternSpec,
};
pub use pure_weight::{b5_brute_force, b5_pure_weight, B5_LIMIT};
pub use weights::{
    count_unit_circle_quadratic_roots, count_unit_circle_sum_inverse, melas_dual_word,
    zetterberg_dual_word, CompleteWeight,
};
