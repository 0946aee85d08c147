//! The group-subgroup subfactor `L(H) ⊂ L(G)` and its invariants.

pub mod commutant;
pub mod graph;
pub mod theta;

pub use commutant::{brute_force_commutant_dim, relative_commutant_dim, Side};
pub use graph::{dual_principal_graph, principal_graph, BipartiteMultiGraph, GraphVertex};
pub use theta::{
    action_on_tuples, conditional_expectation, pimsner_popa_expand, pimsner_popa_reassemble, theta_entry, ThetaMap,
};
