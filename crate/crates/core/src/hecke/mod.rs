//! Word-basis arithmetic in `H_v(𝔖_n)` and `H_{v,ṽ}(B_n)`, used as a
//! brute-force oracle for the closed formulas at small rank.

pub mod element;
pub mod group;
pub mod modular;
pub mod oracle;
pub mod structural;

pub use element::HeckeElement;
pub use group::{Kind, SignedPermutation, WeylGroup};
pub use modular::{oracle_f_mod, ModularPoint};
pub use oracle::{
    expected_trace, oracle_f, trace_value, verify_quasi_idempotent, verify_trace_identity,
    z_bipartition,
};
pub use structural::{
    h_ab, jucys_murphy, u_minus, u_plus, x_element, y_element, z_partition, z_prime_partition,
};
