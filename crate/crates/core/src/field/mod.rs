//! Finite-field arithmetic: GF(p^k) contexts, fast code tables, and the
//! GF(q) / GF(q^2) pair with its unit circle.

mod context;
mod pair;
mod poly;
mod tables;

pub use context::{
    build_field_context, frobenius_q, quadratic_character, trace_to_prime, FieldContext,
    FieldElement, MAX_FIELD_ORDER,
};
pub use pair::{unit_circle, FieldPair, UnitCircleElement};
pub use tables::{Code, LogTables};
