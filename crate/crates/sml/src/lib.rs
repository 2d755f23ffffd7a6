//! File formats, parallel scans, reports, and the command line on top of
//! `sml-core`.

pub mod cli;
pub mod ingest;
pub mod report;
pub mod scan;

pub use ingest::{ingest_graph6_stream, Graph6Lines, IngestError};
pub use scan::parallel_search;
