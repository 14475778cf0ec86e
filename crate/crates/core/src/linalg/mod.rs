//! Exact linear algebra over `GF(p)` and `Q`.
//!
//! All maps in the crate (differentials, multiplication maps, induced maps
//! on cohomology) are [`Matrix`] values over some [`Field`]. The field is a
//! value rather than a type parameter alone because the prime of `GF(p)` is
//! only known at run time.

mod elim;
mod field;
mod matrix;
mod rational;

pub use elim::{
    cohomology_dim, induced_cohomology_map, kernel_basis, rank, rref, ChainMapSlice, CohomologyBasis, ComplexSlice,
    Rref,
};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::Matrix;
pub use rational::Rat;

/// Runs `$body` with `$f` bound to the concrete field named by a
/// [`FieldSpec`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {{
        let spec: $crate::linalg::FieldSpec = $spec;
        if spec.is_rational() {
            let $f = $crate::linalg::Rationals;
            $body
        } else {
            let $f = $crate::linalg::PrimeField::new(spec.characteristic());
            $body
        }
    }};
}
