//! Exact-arithmetic kernel for finite-dimensional perm algebras over ℚ.
//!
//! A perm algebra is an associative algebra whose multiplication also
//! satisfies left-commutativity, `(a·b)·c = (b·a)·c`. This crate verifies
//! and constructs the bialgebra theory attached to that variety, entirely
//! in exact rational arithmetic:
//!
//! - perm algebras and coalgebras by structure constants, with every axiom
//!   exposed as a computable *defect* rather than a boolean;
//! - 2-tensors, the perm Yang-Baxter equation, `(R, ad)`-invariance, and
//!   the coboundary coproduct `Δ_r`;
//! - classification of tensors as quasi-triangular, triangular or
//!   factorizable, with element factorization `x = x₁ − x₂`;
//! - doubles of bialgebras with their canonical factorizable tensor;
//! - representations, A-perm algebras, semidirect products, and relative
//!   Rota-Baxter operators of any rational weight;
//! - quadratic forms and the two-way dictionary between quadratic
//!   Rota-Baxter structures and triangular/factorizable tensors.
//!
//! Every defect check evaluates on basis tuples only; multilinearity makes
//! that complete, and rational arithmetic makes equality decidable, so all
//! verification here is exact. See the `catalog` module for ready-made
//! instances and `io` for the file formats used by the command-line tool.

pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod double;
pub mod error;
pub mod io;
pub mod matrix;
pub mod perm;
pub mod report;
pub mod representation;
pub mod rotabaxter;
pub mod scalar;
pub mod tensor;

pub use bialgebra::{
    bialgebra_defects, classify, coboundary_coproduct, dual_mult_r, factorize,
    image_subalgebra_report, is_factorizable, Classification, PermBialgebra, PermCoalgebra,
};
pub use double::{build_double, canonical_r, double_iso, standard_form_bd, DoubleAlgebra};
pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use perm::PermAlgebra;
pub use representation::{
    diamond_from_skew, operator_form_defects, relative_rb_defect, APermAlgebra, Representation,
};
pub use rotabaxter::{
    companion, phi_of_form, prbw_defect, qrb_to_r, quadratic_defects, quadratic_rb_defects,
    r_to_qrb, rb_defect, rb_to_double_r, search_rb_operators, semidirect_quadratic_rb, sharp,
    BilinearForm, QuadraticRbData,
};
pub use scalar::Scalar;
pub use tensor::{
    coboundary_conditions_defect, placement_product, pybe_defect, rad_invariance_defect,
    Placement, ThreeTensor, TwoTensor,
};
