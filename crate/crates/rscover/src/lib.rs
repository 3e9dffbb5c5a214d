//! Covering algorithms and average-covering-radius bounds for generalized
//! Reed-Solomon codes in the Hamming space and character-Reed-Solomon
//! subspace codes in the one-dimensional complex Grassmann space.
//!
//! The crate provides:
//! - finite-field arithmetic with traces and additive characters ([`gf`]),
//! - polynomial utilities ([`poly`]) and code definitions ([`code`]),
//! - unique and complete list decoders ([`decoder`]),
//! - the puncturing-based covering algorithms ([`cover`]),
//! - closed-form bounds on average covering radii and puncture counts
//!   ([`bounds`]),
//! - a reproducible Monte Carlo harness ([`sim`]),
//! - the `rscover` CLI ([`cli`]).

pub mod bounds;
pub mod cli;
pub mod code;
pub mod cover;
pub mod decoder;
pub mod error;
pub mod gf;
pub mod numeric;
pub mod poly;
pub mod report;
pub mod sim;

pub use code::{CrsCode, CrsSizeReport, GrsCode};
pub use cover::{chordal_distance, crs_cover, grs_cover, CoverConfig, DecodeMode};
pub use decoder::{bw_unique_decode, gs_list_decode, tau_gs, BwMode};
pub use error::{Error, Result};
pub use gf::{Character, Field, FieldElem, FieldSpec};
pub use poly::Poly;
