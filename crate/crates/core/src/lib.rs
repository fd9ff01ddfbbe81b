//! Depth, length and reflection length in Coxeter groups: closed-form
//! statistics on permutations, shallow factorizations, Cayley-graph oracles
//! for types A, B and I₂, and the enumerations built on them.

pub mod bijections;
pub mod decomp;
pub mod enumeration;
pub mod error;
pub mod groups;
pub mod known;
pub mod oracle;
pub mod patterns;
pub mod perm;
pub mod poly;
pub mod stats;
pub mod verify;

pub use bijections::{DyckPath, LeftRightMaxima, Step};
pub use decomp::{Factorization, Side, SortTrace, VerificationReport};
pub use enumeration::{Class, ClassCount, DepthTable, Format, JointPair, JointTable, Stat};
pub use error::{Error, Result};
pub use groups::{DihedralElement, Element, GroupBackend, GroupKind, SignedPermutation};
pub use perm::{CycleDecomposition, Permutation, Transposition};
pub use poly::BiPoly;
pub use verify::{CheckResult, Suite};
