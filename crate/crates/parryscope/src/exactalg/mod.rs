//! Exact integer-polynomial arithmetic and algebraic-real machinery.
//!
//! Everything downstream builds on this module: dyadic interval endpoints,
//! integer polynomials, Sturm-certified real algebraic numbers and exact
//! `Z[beta]` arithmetic. All values are immutable after construction and
//! every operation is pure.

pub mod algebraic;
pub mod dyadic;
pub mod poly;
pub mod zbeta;

pub use algebraic::{
    count_real_positive, isolate_dominant_root, isolate_real_roots, sturm_count, AlgebraicReal,
    SturmChain,
};
pub use dyadic::{Dyadic, DyadicInterval};
pub use poly::IntPoly;
pub use zbeta::{sign_eval, Sign, ZBetaElement};
