//! Executable versions of polynomial-method arguments: evaluation matrices
//! built from certified s-distance sets, dimension bounds for the spaces
//! those polynomials live in, and exact independence checks for explicit
//! families in the ideal of the projection-embedded Grassmannian.

pub mod eval;
pub mod lemma51;
pub mod linalg;
pub mod poly;
pub mod sampled;

pub use eval::{
    chordal_eval_matrix, equiangular_eval_matrix, fs_eval_matrix, fs_eval_matrix_plucker, verify_prop31,
    BoundSource, Construction, EvaluationMatrix, RankReport, VerifyOptions,
};
pub use lemma51::{lemma51_family_rank, lemma51_quadrics_rank, p_d};
pub use sampled::sampled_hilbert_rank;
