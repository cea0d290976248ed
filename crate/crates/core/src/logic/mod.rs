//! First-order logic over the group signature, evaluated on finite tables,
//! plus the explicit sentences used for the `H_p` construction.

pub mod eval;
pub mod formula;
pub mod named;
pub mod table;
pub mod up;

pub use eval::{eval_formula, Evaluator, DEFAULT_BUDGET};
pub use formula::{parse_formula, tuple_vars, Formula, Term};
pub use named::{
    abelian_tables, find_phi_witness, make_named_formula, phi, psi, shift_extension_table, verify_phi_witness, zeta, PhiWitness,
    WitnessCheck,
};
pub use table::{FiniteGroupTable, GenRef, TableDocument};
pub use up::{check_up_membership, UpReport};
