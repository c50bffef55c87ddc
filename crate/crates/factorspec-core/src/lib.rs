//! Exact deciders for "all [a,b]-factors" and "all fractional [a,b]-factors",
//! spectral radius machinery, extremal graph constructors and an independent
//! matching-based oracle.
//!
//! The crate is `no_std` and only needs `alloc`. File formats beyond graph6,
//! catalog streaming and the command-line tool live in the `factorspec` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod conditions;
mod error;
pub mod extremal;
pub mod graph;
pub mod oracle;
pub mod spectral;

pub use conditions::{
    anstee_fractional_gf, classify_components, delta, has_all_ab_factors,
    has_all_fractional_ab_factors, has_all_gf_factors, has_gf_factor, lu_all_fractional_gf, theta,
    ComponentCounts, ConditionReport, DeciderCaps, DegreeBounds, DegreeFunctions,
};
pub use error::{Error, Result};
pub use extremal::{
    build_g1, build_g2, build_hnb, build_k1_join, is_hnb, lemma23_min_order, lemma24_witness,
    rho_hnb, threshold_n, ExtremalGraph, FactorMode, SplitJoin,
};
pub use graph::{graph6, Graph, VertexSet};
pub use oracle::{
    all_ab_factors_oracle, all_fractional_oracle, enumerate_admissible, first_missing_factor,
    first_missing_fractional, has_h_factor, maximum_matching, perfect_matching, tutte_gadget,
    DemandFunction, DemandIter, GadgetNode, Matching, TutteGadget, DEFAULT_DEMAND_BUDGET,
};
pub use spectral::{
    charpoly_eval_3x3, charpoly_eval_3x3_exact, hong_bound, leading_eigenvalue, quotient_matrix,
    spectral_radius, spectral_radius_with, strictly_less, Method, QuotientMatrix, Rational,
    SpectralResult, StrictVerdict, DEFAULT_TOL,
};
