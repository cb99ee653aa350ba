//! The wedge operation `∧ = Σ Λ^i` (sum of all exterior powers) on
//! characters of finite groups of odd order, extended to arbitrary class functions as `∧f = exp(Tf)`, and
//! the dynamics of `Ψ = ∧ - 1`.
//!
//! ```
//! use odd_wedge::{frobenius21, verify_adams_theorem};
//!
//! let report = verify_adams_theorem(&frobenius21()).unwrap();
//! assert!(report.passed);
//! ```

// `!(x < tol)` is used deliberately so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod character_table;
pub mod class_function;
pub mod classes;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod group;
pub mod hurwitz;
pub mod lambert;
pub mod linalg;
pub mod parse;
pub mod wedge;

pub use character_table::{character_table, format_complex, CharacterTable};
pub use class_function::{newton_elementary, wedge_character_direct, ClassFunction};
pub use classes::{conjugacy_classes, ClassStructure};
pub use error::{Error, Result};
pub use group::{builtin_group, builtin_odd_groups, cyclic_group, direct_product, frobenius21, FiniteGroup};
pub use hurwitz::{h_closed, h_series, hurwitz_table, wedge_coefficients, WedgeCoefficients};
pub use lambert::{psi_fixed_points_7, w_minus_one, w_principal};
pub use wedge::{build_t, kernel_witness, t_spectrum, verify_adams_theorem, wedge_exp, TOperator};
