//! Temporal-hypergraph analytics for channel-based communication networks.
//!
//! Communication runs through channels — code reviews, issues, threads —
//! each connecting an arbitrary set of participants for a bounded time span.
//! This crate models such networks as time-varying multi-hypergraphs and
//! measures how far a piece of information can actually travel:
//!
//! * [`graph`] — the data model and its bipartite transformation;
//! * [`reach`] — journey semantics and the time-respecting vs.
//!   time-ignoring horizon algorithms;
//! * [`oracle`] — an exhaustive enumeration oracle for validating the
//!   horizon search on small instances;
//! * [`analysis`] — all-seeds sweeps, model comparison, and component
//!   statistics;
//! * [`report`] — JSON/CSV export of comparison reports;
//! * [`ingest`] — JSONL/CSV event-log parsing and window filtering;
//! * [`synth`] — deterministic synthetic network generation.
//!
//! ```
//! use horizons::graph::{ChannelDef, TemporalHypergraph};
//! use horizons::reach::{temporal_horizon, TraversalPolicy};
//! use horizons::time::{TimeStamp, TimeWindow};
//!
//! let defs = vec![
//!     ChannelDef::new("review-1", &["ana", "ben"], 1, 1),
//!     ChannelDef::new("review-2", &["ben", "cho"], 2, 2),
//! ];
//! let window = TimeWindow::new(TimeStamp(0), TimeStamp(10));
//! let graph = TemporalHypergraph::build(&defs, window, &[]).unwrap();
//! let view = graph.to_bipartite();
//!
//! let ana = graph.vertex_by_label("ana").unwrap();
//! let result = temporal_horizon(&view, ana, TimeStamp(0), TraversalPolicy::default()).unwrap();
//! assert_eq!(result.cardinality(), 2); // ben at 1, cho at 2
//! ```

pub mod analysis;
pub mod bipartite;
pub mod graph;
pub mod ingest;
pub mod oracle;
pub mod reach;
pub mod report;
pub mod synth;
pub mod time;

mod union_find;

pub use bipartite::{BipartiteView, ChannelPresence};
pub use graph::{BuildError, Channel, ChannelDef, ChannelId, TemporalHypergraph, VertexId};
pub use reach::{HorizonResult, Mode, ReachError, Strictness, TraversalPolicy};
pub use time::{Duration, TimeStamp, TimeWindow};
