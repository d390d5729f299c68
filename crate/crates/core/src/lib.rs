//! Unrestricted rigged configurations for simply-laced types with their crystal
//! structure, the type-A lower-bound characterization and fermionic formula, the type-A
//! promotion operator, a checker for Stembridge's local axioms, and an independent
//! tableau-crystal oracle.

pub mod affine;
pub mod cartan;
pub mod config;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod laurent;
pub mod paths;
pub mod rigged;
pub mod space;
pub mod stembridge;
pub mod typea;

pub use affine::{CommutationReport, PromotionSpace, PromotionTable, PromotionTrace, RhoPass};
pub use cartan::{AlgebraData, AlgebraSpec, Family, Weight};
pub use config::{Configuration, KrFactor, MultiplicityArray, Shape};
pub use crystal::{generate, Crystal, CrystalGraph, RcComponent, RcSet, Selection, DEFAULT_VERTEX_CAP};
pub use error::{Error, Result};
pub use graph::{ColoredGraph, Edge, GraphFile};
pub use laurent::{q_binomial, LaurentPolynomial};
pub use paths::{kr_vertices, ssyt_count, PathSpace, RectTableau, TensorPath};
pub use rigged::{RiggedConfiguration, RiggedString};
pub use space::RcSpace;
pub use stembridge::{isomorphic, verify_regular, Axiom, AxiomReport, Outcome, Verifier, Witness};
pub use typea::{
    enumerate_lower_bound_tableaux, LowerBoundTableau, QuasipartitionSpec, TypeASpace, TypeATuple,
};
