//! Structural graph coloring for (P6, diamond, K4)-free graphs.
//!
//! The centerpiece is [`engine`], which colors any (P6, diamond, K4)-free
//! graph with at most 6 colors, and with at most 4 when no bull occurs, by
//! constructive case analysis rather than search. Every structural fact the
//! construction relies on is re-checked at run time, so a bad input cannot
//! produce a bad coloring: it produces a typed error carrying the vertices
//! that broke the rule. The slow-but-exact [`oracle`] exists to keep the
//! fast path honest.

#![forbid(unsafe_code)]

pub mod atlas;
pub mod corpus;
pub mod engine;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod patterns;
pub mod recognition;

pub use graph::{Graph, GraphError, VertexSet};
pub use patterns::{PatternName, Witness};
