//! Exact construction and verification of Gelfand-Tsetlin lattices.
//!
//! The vertices of the lattice `GT(λ)` are the semistandard Young tableaux of
//! shape `λ` with entries in `1..=n`. An edge `S -> T` of color `k` changes one
//! entry `k + 1` of `S` into `k`. Each edge carries a pair of exact rational
//! labels `(c, d)` computed from corner data of the rim of `λ^{(k)}`, and the
//! crate checks that the resulting operators satisfy the defining relations of
//! `sl_n`, both combinatorially (structure, crossing and diamond conditions) and
//! at the level of sparse matrices.
//!
//! Conventions used throughout:
//!
//! * colors `k` run over `1..n`;
//! * row numbers of tableaux and patterns are 1-based, as in `r_1 = 1`;
//! * corner indices into [`RimData`] vectors are 0-based;
//! * vertex ids are positions in the canonical enumeration order, so vertex 0 is
//!   the maximum of the lattice.

pub mod error;
pub mod export;
pub mod forcing;
pub mod labels;
pub mod lattice;
pub mod rational;
pub mod repmat;
pub mod tableaux;
pub mod verify;

pub use error::{GtError, Result};
pub use forcing::{
    compare_forced_vs_formula, force_all, force_all_with, force_color_k, force_color_one,
    force_all_ordered, ForcedBy, ForcingOrder, ProductAssignment,
};
pub use labels::{
    classical_c, classical_d, classical_diag, coeff_c, coeff_d, compare_products, edge_product,
    edge_product_down, label_all, rim_data, EdgeLabel, EdgeLabeling, LabelSide,
    ProductComparison, RimData,
};
pub use lattice::{build_lattice, decrementable_rows, incrementable_rows, ComponentInfo, Edge, GtLattice, WeightVector};
pub use rational::Rational;
pub use repmat::{
    cartan_matrix, check_sl_relations, highest_weight_check, matrix_ekk_diag, matrix_h, matrix_x,
    matrix_y, rank, FractionFreeEchelon, HighestWeightReport, SparseMatrix,
};
pub use tableaux::{
    content, enumerate_ssyt, gt_to_ssyt, is_horizontal_strip, ssyt_to_gt, weyl_dimension,
    ContentVector, GtPattern, Partition, Ssyt,
};
pub use verify::{
    check_crossing, check_diamond, check_diamond_products, check_identity, check_structure,
    identity_lhs, verify_all, ConditionReport, DiamondMode, IdentityInstance, Violation,
    VerificationSummary,
};
