//! Exact arithmetic: Laurent polynomials over `ℤ` and cyclotomic fields.

pub mod cyclotomic;
pub mod laurent;

pub use cyclotomic::{
    cyclotomic_eval, cyclotomic_polynomial, cyclotomic_to_rational, CyclotomicNumber,
};
pub use laurent::{laurent_exact_div, laurent_sqrt, quantum_integer, LaurentPoly};
