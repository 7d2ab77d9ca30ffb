//! Bipartite representation of a temporal hypergraph.
//!
//! Both horizon algorithms run on this view: the left partition holds the
//! vertices, the right partition holds the channels, and an edge `(v, c)`
//! exists iff `v` participates in `c`. Each channel node carries its presence
//! interval and latency. Incidence is stored CSR-style in both directions.

use crate::graph::{Channel, ChannelId, TemporalHypergraph, VertexId};
use crate::time::{Duration, TimeStamp, TimeWindow};

/// Temporal attributes of one channel node.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChannelPresence {
    pub open: TimeStamp,
    pub close: TimeStamp,
    pub latency: Duration,
}

/// Immutable bipartite incidence structure. The two partitions live in
/// disjoint id spaces (`VertexId` vs. `ChannelId`), so they can never be
/// confused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteView {
    vertex_count: usize,
    chan_offsets: Vec<u32>,
    chan_parts: Vec<VertexId>,
    vert_offsets: Vec<u32>,
    vert_chans: Vec<ChannelId>,
    presence: Vec<ChannelPresence>,
    window: TimeWindow,
}

impl BipartiteView {
    pub fn from_graph(graph: &TemporalHypergraph) -> Self {
        let n = graph.vertex_count();
        let m = graph.channel_count();

        let mut chan_offsets = Vec::with_capacity(m + 1);
        let mut chan_parts = Vec::new();
        let mut presence = Vec::with_capacity(m);
        let mut degree = vec![0u32; n];

        chan_offsets.push(0);
        for channel in graph.channels() {
            for &v in &channel.participants {
                chan_parts.push(v);
                degree[v.index()] += 1;
            }
            chan_offsets.push(chan_parts.len() as u32);
            presence.push(ChannelPresence {
                open: channel.open,
                close: channel.close,
                latency: channel.latency,
            });
        }

        // Reverse incidence by counting sort, so each vertex's channel list
        // comes out in ascending channel order.
        let mut vert_offsets = vec![0u32; n + 1];
        for v in 0..n {
            vert_offsets[v + 1] = vert_offsets[v] + degree[v];
        }
        let mut cursor = vert_offsets[..n].to_vec();
        let mut vert_chans = vec![ChannelId(0); chan_parts.len()];
        for channel in graph.channels() {
            for &v in &channel.participants {
                let slot = cursor[v.index()] as usize;
                vert_chans[slot] = channel.id;
                cursor[v.index()] += 1;
            }
        }

        BipartiteView {
            vertex_count: n,
            chan_offsets,
            chan_parts,
            vert_offsets,
            vert_chans,
            presence,
            window: graph.window(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn channel_count(&self) -> usize {
        self.presence.len()
    }

    /// Total number of bipartite edges, `Σ_c |participants(c)|`.
    pub fn edge_count(&self) -> usize {
        self.chan_parts.len()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index() < self.vertex_count
    }

    /// Ordered participant list of one channel.
    pub fn participants(&self, c: ChannelId) -> &[VertexId] {
        let lo = self.chan_offsets[c.index()] as usize;
        let hi = self.chan_offsets[c.index() + 1] as usize;
        &self.chan_parts[lo..hi]
    }

    /// Ordered list of channels containing one vertex.
    pub fn channels_of(&self, v: VertexId) -> &[ChannelId] {
        let lo = self.vert_offsets[v.index()] as usize;
        let hi = self.vert_offsets[v.index() + 1] as usize;
        &self.vert_chans[lo..hi]
    }

    pub fn presence(&self, c: ChannelId) -> ChannelPresence {
        self.presence[c.index()]
    }

    pub fn channel_ids(&self) -> impl Iterator<Item = ChannelId> + '_ {
        (0..self.presence.len() as u32).map(ChannelId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count as u32).map(VertexId)
    }

    /// Observation window of the underlying graph (carried along for
    /// seed-time rules).
    pub fn window(&self) -> TimeWindow {
        self.window
    }

    /// Reconstructs the channel multiset from the incidence structure.
    /// Inverse of the transformation on valid graphs.
    pub fn to_channels(&self) -> Vec<Channel> {
        self.channel_ids()
            .map(|c| {
                let p = self.presence(c);
                Channel {
                    id: c,
                    participants: self.participants(c).to_vec(),
                    open: p.open,
                    close: p.close,
                    latency: p.latency,
                }
            })
            .collect()
    }
}
