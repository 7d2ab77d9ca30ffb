//! The time-varying multi-hypergraph data model.
//!
//! A communication network is a set of participants (vertices) joined by
//! channels (hyperedges). Each channel connects an arbitrary number of
//! participants and is present during one closed interval `[open, close]`.
//! The channel collection is a multiset: two channels with identical
//! participants and times are still distinct channels.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::bipartite::BipartiteView;
use crate::time::{Duration, TimeStamp, TimeWindow};

/// Dense vertex index, `0..|V|-1` after graph construction. The original
/// external label is retained in a side table on the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense channel index, `0..|E|-1`. Parallel channels keep distinct ids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChannelId(pub u32);

impl ChannelId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ChannelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Input description of one channel, before labels are interned.
#[derive(Clone, Debug, PartialEq)]
pub struct ChannelDef {
    pub external_id: String,
    pub participants: Vec<String>,
    pub open: TimeStamp,
    pub close: TimeStamp,
    pub latency: Duration,
}

impl ChannelDef {
    /// A zero-latency channel definition.
    pub fn new(
        external_id: impl Into<String>,
        participants: &[&str],
        open: i64,
        close: i64,
    ) -> Self {
        ChannelDef {
            external_id: external_id.into(),
            participants: participants.iter().map(|p| p.to_string()).collect(),
            open: TimeStamp(open),
            close: TimeStamp(close),
            latency: Duration(0),
        }
    }

    pub fn with_latency(mut self, latency: u64) -> Self {
        self.latency = Duration(latency);
        self
    }
}

/// One communication channel: a hyperedge with participants and a temporal
/// presence interval `[open, close]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Channel {
    pub id: ChannelId,
    /// Sorted, duplicate-free.
    pub participants: Vec<VertexId>,
    pub open: TimeStamp,
    pub close: TimeStamp,
    pub latency: Duration,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("malformed channel {external_id:?}: {reason}")]
    MalformedChannel { external_id: String, reason: String },
    #[error("empty window: start {0} is after end {1}")]
    EmptyWindow(TimeStamp, TimeStamp),
}

/// A time-varying multi-hypergraph over one observation window.
///
/// Immutable after construction; safe for unsynchronized concurrent reads.
#[derive(Clone, Debug, PartialEq)]
pub struct TemporalHypergraph {
    vertex_labels: Vec<String>,
    label_index: HashMap<String, VertexId>,
    channels: Vec<Channel>,
    channel_external_ids: Vec<String>,
    window: TimeWindow,
    time_unit: String,
}

impl TemporalHypergraph {
    /// Builds a graph from channel definitions and an observation window.
    ///
    /// Channels whose interval lies entirely outside the window are dropped;
    /// channels straddling a boundary are kept with their original times.
    /// Vertices are the union of the kept channels' participants plus any
    /// explicit isolated vertices from `vertex_universe`. Ids are dense and
    /// assigned in first-appearance order, so identical input sequences yield
    /// identical id assignments.
    pub fn build(
        defs: &[ChannelDef],
        window: TimeWindow,
        vertex_universe: &[String],
    ) -> Result<Self, BuildError> {
        if !window.is_well_ordered() {
            return Err(BuildError::EmptyWindow(window.start, window.end));
        }
        for def in defs {
            if def.open > def.close {
                return Err(BuildError::MalformedChannel {
                    external_id: def.external_id.clone(),
                    reason: format!("open {} is after close {}", def.open, def.close),
                });
            }
            if def.participants.is_empty() {
                return Err(BuildError::MalformedChannel {
                    external_id: def.external_id.clone(),
                    reason: "no participants".to_string(),
                });
            }
        }

        let mut vertex_labels: Vec<String> = Vec::new();
        let mut label_index: HashMap<String, VertexId> = HashMap::new();
        let intern = |label: &str,
                      vertex_labels: &mut Vec<String>,
                      label_index: &mut HashMap<String, VertexId>| {
            if let Some(&id) = label_index.get(label) {
                return id;
            }
            let id = VertexId(vertex_labels.len() as u32);
            vertex_labels.push(label.to_string());
            label_index.insert(label.to_string(), id);
            id
        };

        let kept: Vec<&ChannelDef> = defs
            .iter()
            .filter(|d| window.overlaps(d.open, d.close))
            .collect();

        let mut channels = Vec::with_capacity(kept.len());
        let mut channel_external_ids = Vec::with_capacity(kept.len());
        for (i, def) in kept.iter().enumerate() {
            let mut participants: Vec<VertexId> = Vec::with_capacity(def.participants.len());
            for label in &def.participants {
                let id = intern(label, &mut vertex_labels, &mut label_index);
                if !participants.contains(&id) {
                    participants.push(id);
                }
            }
            participants.sort_unstable();
            channels.push(Channel {
                id: ChannelId(i as u32),
                participants,
                open: def.open,
                close: def.close,
                latency: def.latency,
            });
            channel_external_ids.push(def.external_id.clone());
        }

        // Isolated vertices enter in sorted label order, after all channel
        // participants, so the universe's set semantics stay deterministic.
        let mut universe: Vec<&String> = vertex_universe.iter().collect();
        universe.sort_unstable();
        universe.dedup();
        for label in universe {
            intern(label, &mut vertex_labels, &mut label_index);
        }

        Ok(TemporalHypergraph {
            vertex_labels,
            label_index,
            channels,
            channel_external_ids,
            window,
            time_unit: "ticks".to_string(),
        })
    }

    /// Sets the human-readable meaning of one tick (metadata only).
    pub fn with_time_unit(mut self, unit: impl Into<String>) -> Self {
        self.time_unit = unit.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn channel_count(&self) -> usize {
        self.channels.len()
    }

    pub fn channels(&self) -> &[Channel] {
        &self.channels
    }

    pub fn channel(&self, id: ChannelId) -> &Channel {
        &self.channels[id.index()]
    }

    pub fn channel_external_id(&self, id: ChannelId) -> &str {
        &self.channel_external_ids[id.index()]
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_labels.len() as u32).map(VertexId)
    }

    pub fn vertex_label(&self, id: VertexId) -> &str {
        &self.vertex_labels[id.index()]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.label_index.get(label).copied()
    }

    pub fn contains_vertex(&self, id: VertexId) -> bool {
        id.index() < self.vertex_labels.len()
    }

    pub fn window(&self) -> TimeWindow {
        self.window
    }

    pub fn time_unit(&self) -> &str {
        &self.time_unit
    }

    /// Transforms the hypergraph into its equivalent bipartite view: one
    /// partition for vertices, one for channels, with an edge `(v, c)` iff
    /// `v` participates in `c`.
    pub fn to_bipartite(&self) -> BipartiteView {
        BipartiteView::from_graph(self)
    }
}
