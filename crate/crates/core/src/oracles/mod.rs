//! Exact brute-force ground truth: pattern search, `K_{s,s}` detection,
//! canonical forms and induced Turán numbers at small `n`.

mod bip;
pub mod canon;
mod extremal;
mod kss;
mod search;

pub use bip::{contains_bip_induced, verify_bip_induced_map};
pub use extremal::{
    extremal_bip_star, extremal_bip_star_with_budget, extremal_plain, extremal_plain_with_budget, extremal_star,
    extremal_star_with_budget, ExtremalResult, BIP_BUDGET, STAR_BUDGET,
};
pub use kss::{contains_kss, kss_through_vertex, kst_bound_holds, kst_check, KssWitness};
pub use search::{contains_induced, contains_subgraph, induced_copies, isomorphic, verify_induced_map, Search};
