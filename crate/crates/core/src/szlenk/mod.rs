//! Closed-form Szlenk-index rules and the derivation-bound pipelines for two
//! norming-set constructions.

mod closed;
mod pipeline;

pub use closed::{
    attainable, sz_c_interval, sz_ck, sz_convex_hull, sz_max_rule, IndexKind, MaxContext,
};
pub use pipeline::{
    citation, family_bound, sz_frak_g, sz_frak_s, sz_union_bound, threshold_j, BoundKind,
    DerivationBound, NormingParams, DEFAULT_AUDIT_LEVELS, DEFAULT_J_CAP,
};
