//! Finite trees, derived trees and monotone embeddings, plus the symbolic
//! Cantor-Bendixson calculus of ordinal intervals and of the `Bₙ` families.
//!
//! Orders of finite trees count the root: a single node has order 1. A
//! B-tree (the tree without its root) has order one less.

mod bn;
mod cb;
mod embed;
mod finite;

pub use bn::{
    bn_derived_member, g_partition_index, quotient_tree, quotient_tree_bounded,
    quotient_tree_order_oracle, quotient_tree_stages, BnNode, DEFAULT_QUOTIENT_BOUND,
};
pub use cb::{cb_interval_derivative, cb_interval_index, IntervalDerivStage};
pub use embed::{
    embed_exists_bruteforce, embed_exists_bruteforce_bounded, is_monotone_length_preserving,
    monotone_embed, NodeMap, DEFAULT_BRUTEFORCE_BOUND,
};
pub use finite::{tree_order, FiniteTree, TreeDescriptor};
