//! Spectral extremal graph theory over minor-closed families.
//!
//! Graphs have at most 64 vertices and are stored as one adjacency word per
//! vertex. The crate builds the extremal constructions for `K_r`-minor-free,
//! `K_{s,t}`-minor-free, and bounded Colin de Verdière graphs, computes
//! spectral radii, tests minors with witnesses, and scans all small graphs to
//! compare the constructions with the true maxima.
//!
//! Everything here needs only `alloc`; file formats and the command line live
//! in the `sml` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod cdv;
pub mod construct;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod minors;
pub mod search;
pub mod spectral;

pub use canon::{canonical_form, is_isomorphic};
pub use cdv::{classify_mu, MuClass};
pub use construct::{construct_cdv_extremal, construct_kr_extremal, construct_kst_extremal, Construction};
pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use minors::{has_minor, verify_witness, MinorWitness};
pub use search::{FamilySpec, SearchReport};
pub use spectral::{lambda1, spectral_radius, EigenResult};
