//! Instance generators: group-theoretic `Vect_G` data and builtin rings.
//!
//! Only the untwisted case is generated. A 3-cocycle on `G` restricts which
//! subgroup data exist and a 2-cocycle on `H` twists the module constraint,
//! but neither changes any multiplicity, so both are ignored here.

mod builtin;
mod group;

pub use builtin::{builtin, builtin_group, builtin_ring, BUILTIN_RINGS};
pub use group::{
    cyclic, group_characters, group_ring, matched_vectg_oracle, subgroups, vect_g_module,
    GroupCharacter, GroupTable, DEFAULT_SUBGROUP_BOUND,
};
