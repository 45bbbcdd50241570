//! Dense real-matrix Lie algebra core: brackets, tolerance-governed subspace
//! numerics, and the matrix exponential.

pub mod algebra;
pub mod element;
pub mod expm;
pub mod linear;
pub mod map;
pub mod mat;
pub mod random;
pub mod tolerance;

pub use algebra::{numerical_rank, AlgebraSubspace, MatrixLieAlgebra};
pub use element::{BlockMat, LieElement};
pub use expm::matrix_exp;
pub use map::AlgebraMap;
pub use mat::{bracket, Mat};
pub use random::Sampler;
pub use tolerance::Tolerance;
