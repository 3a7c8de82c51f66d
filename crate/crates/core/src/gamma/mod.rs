//! The B-trees `Γ_ξ` on `[0, ω^ξ)` and their level stages `Γ_{ξ,n}`.
//!
//! Nodes are plain ordinal sequences; the hierarchy index is passed
//! alongside. Membership is decided by structural recursion on `ξ`.

mod enumerate;
mod node;
mod prob;

pub use enumerate::{enumerate_level, enumerate_truncated, sample_maximal, Budget, EnumeratedNode};
pub use node::{
    decompose, gamma_node_classify, level_classify, same_unit, Decomposition, GammaNode, Membership,
};
pub use prob::{branch_distribution, prob};
