//! An exact workbench for invariant subspaces of nilpotent operators.
//!
//! Objects are pairs `X = (U, V)` where `V` is a finite-dimensional space
//! over a prime field with a nilpotent operator `T`, `T^n = 0`, and `U` is a
//! `T`-invariant subspace. The crate computes the numeric invariants of such
//! pairs, decides indecomposability and isomorphism, applies the duality and
//! the translation functor, produces filtrations, counts the combinatorial
//! families, builds the named one-parameter families, and reproduces the
//! root-table and triangle figures. Everything is exact: arithmetic happens
//! in `F_p` and in the rationals, never in floating point.

pub mod acceptance;
pub mod artrans;
pub mod comb;
pub mod filtrations;
pub mod fp;
pub mod gallery;
pub mod graded;
pub mod homs;
pub mod matrix;
pub mod pair;
pub mod partition;
pub mod rat;
pub mod roots;
pub mod roots_data;
pub mod svg;
pub mod triangle;

pub use pair::{PairError, PartitionTriple, SubspacePair};
pub use partition::Partition;
pub use rat::Rat;

// The guide chapters double as doc-tests: every code block in book/src is
// compiled and run by `cargo test --doc`, so the book cannot drift from the
// library.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/pairs.md")]
    mod pairs {}
    #[doc = include_str!("../../../book/src/morphisms.md")]
    mod morphisms {}
    #[doc = include_str!("../../../book/src/translation.md")]
    mod translation {}
    #[doc = include_str!("../../../book/src/filtrations.md")]
    mod filtrations {}
    #[doc = include_str!("../../../book/src/combinatorics.md")]
    mod combinatorics {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots_chapter {}
}
