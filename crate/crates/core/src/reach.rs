//! Journey semantics and the two horizon algorithms.
//!
//! Information seeded at a vertex spreads along channels whose activation
//! times line up: a vertex informed at time `t` can pass information through
//! a channel only if the channel is still usable at `t`. The *time-respecting
//! horizon* is the set of vertices reachable this way; the *time-ignoring
//! horizon* discards all temporal information and collapses to connectivity
//! in the aggregated graph. Reachability under the temporal model is neither
//! reflexive nor symmetric.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};

use thiserror::Error;

use crate::bipartite::{BipartiteView, ChannelPresence};
use crate::graph::{ChannelId, VertexId};
use crate::time::TimeStamp;

/// How channel activation times are read during traversal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// A channel is a single event at its close time: crossing it informs
    /// all other participants at `close`.
    #[default]
    PointEvent,
    /// A channel is usable throughout `[open, close]` and takes `latency`
    /// ticks to cross; the channel must remain present until crossed.
    Interval,
}

/// Whether information arriving exactly at the channel's close time can
/// still be passed on through it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    /// The informed time must be strictly before the close time.
    #[default]
    Strict,
    /// Arrival at the close time still crosses (Casteigts-compatible).
    NonStrict,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TraversalPolicy {
    pub mode: Mode,
    pub strictness: Strictness,
}

impl TraversalPolicy {
    pub const fn new(mode: Mode, strictness: Strictness) -> Self {
        TraversalPolicy { mode, strictness }
    }

    pub const fn point_event(strictness: Strictness) -> Self {
        TraversalPolicy::new(Mode::PointEvent, strictness)
    }

    pub const fn interval(strictness: Strictness) -> Self {
        TraversalPolicy::new(Mode::Interval, strictness)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReachError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// Earliest-arrival map of one diffusion, keyed by informed vertex.
///
/// The seed itself is never recorded: reported horizons exclude the seed so
/// that both traversal models count reachable *other* vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HorizonResult {
    pub seed: VertexId,
    pub seed_time: TimeStamp,
    pub informed: BTreeMap<VertexId, TimeStamp>,
}

impl HorizonResult {
    /// The horizon: every vertex with a recorded earliest-informed time.
    pub fn horizon(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.informed.keys().copied()
    }

    pub fn horizon_set(&self) -> BTreeSet<VertexId> {
        self.informed.keys().copied().collect()
    }

    pub fn cardinality(&self) -> usize {
        self.informed.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.informed.contains_key(&v)
    }
}

/// A time-respecting walk: the channels crossed, each with the time its
/// crossing starts, between two endpoint vertices.
///
/// Consecutive channels must share a participant (the carrier relaying the
/// information), and crossing times must respect the policy: each crossing
/// starts within the channel's presence, completes before its close, and
/// starts no earlier than the information became available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Journey {
    pub steps: Vec<(ChannelId, TimeStamp)>,
    pub endpoints: (VertexId, VertexId),
}

impl Journey {
    /// The time the information arrives at the final endpoint, given the
    /// policy (crossings complete at the close in point-event mode, after
    /// the latency in interval mode). `None` for the empty journey.
    pub fn arrival(&self, view: &BipartiteView, policy: TraversalPolicy) -> Option<TimeStamp> {
        self.steps.last().map(|&(c, start)| {
            let p = view.presence(c);
            match policy.mode {
                Mode::PointEvent => p.close,
                Mode::Interval => start.saturating_add(p.latency),
            }
        })
    }

    /// Checks every journey invariant against the view: endpoint membership,
    /// the walk property, and the policy's time constraints starting from
    /// `seed_time`.
    pub fn is_valid(
        &self,
        view: &BipartiteView,
        seed_time: TimeStamp,
        policy: TraversalPolicy,
    ) -> bool {
        let Some(&(first, _)) = self.steps.first() else {
            return self.endpoints.0 == self.endpoints.1;
        };
        let (last, _) = *self.steps.last().expect("non-empty");
        if !view.participants(first).contains(&self.endpoints.0)
            || !view.participants(last).contains(&self.endpoints.1)
        {
            return false;
        }
        for window in self.steps.windows(2) {
            let (a, b) = (window[0].0, window[1].0);
            let shares = view
                .participants(a)
                .iter()
                .any(|v| view.participants(b).contains(v));
            if !shares {
                return false;
            }
        }

        let mut available = seed_time;
        for &(c, start) in &self.steps {
            let p = view.presence(c);
            let timely = match policy.strictness {
                Strictness::Strict => available < p.close,
                Strictness::NonStrict => available <= p.close,
            };
            if !timely {
                return false;
            }
            match policy.mode {
                Mode::PointEvent => {
                    // the crossing is the close-time event itself
                    if start != p.close {
                        return false;
                    }
                    available = p.close;
                }
                Mode::Interval => {
                    let completed = start.saturating_add(p.latency);
                    if start < p.open || start < available || completed > p.close {
                        return false;
                    }
                    available = completed;
                }
            }
        }
        true
    }
}

/// One traversal step: given the informed time `t` of some participant,
/// returns the time at which the other participants become informed through
/// the channel, or `None` if the channel is not usable from `t`.
///
/// The step is monotone in `t`: entering a channel earlier never invalidates
/// the crossing and never produces a later arrival. Every produced arrival
/// satisfies `arrival >= t`.
fn traversal_step(
    policy: TraversalPolicy,
    t: TimeStamp,
    presence: ChannelPresence,
) -> Option<TimeStamp> {
    let timely = match policy.strictness {
        Strictness::Strict => t < presence.close,
        Strictness::NonStrict => t <= presence.close,
    };
    if !timely {
        return None;
    }
    match policy.mode {
        Mode::PointEvent => Some(presence.close),
        Mode::Interval => {
            let arrival = t.max(presence.open).saturating_add(presence.latency);
            (arrival <= presence.close).then_some(arrival)
        }
    }
}

/// Time-respecting horizon of `seed`, seeded at `seed_time`.
///
/// Earliest-arrival search over the bipartite view: vertices settle in
/// nondecreasing informed-time order, and each channel fires at most once,
/// at its first settled participant. Step monotonicity guarantees this
/// reaches the same fixed point as unbounded relabelling.
pub fn temporal_horizon(
    view: &BipartiteView,
    seed: VertexId,
    seed_time: TimeStamp,
    policy: TraversalPolicy,
) -> Result<HorizonResult, ReachError> {
    if !view.contains_vertex(seed) {
        return Err(ReachError::UnknownVertex(seed));
    }

    let n = view.vertex_count();
    let mut best = vec![TimeStamp::MAX; n];
    let mut settled = vec![false; n];
    let mut channel_done = vec![false; view.channel_count()];
    let mut heap = BinaryHeap::new();

    best[seed.index()] = seed_time;
    heap.push(Reverse((seed_time, seed)));

    while let Some(Reverse((t, v))) = heap.pop() {
        if settled[v.index()] {
            continue;
        }
        settled[v.index()] = true;

        for &c in view.channels_of(v) {
            if channel_done[c.index()] {
                continue;
            }
            // Later participants settle no earlier than v, so whatever the
            // step decides here is final for this channel.
            channel_done[c.index()] = true;
            let Some(arrival) = traversal_step(policy, t, view.presence(c)) else {
                continue;
            };
            for &w in view.participants(c) {
                if w == v || w == seed {
                    continue;
                }
                if arrival < best[w.index()] {
                    best[w.index()] = arrival;
                    heap.push(Reverse((arrival, w)));
                }
            }
        }
    }

    let informed = best
        .iter()
        .enumerate()
        .filter(|&(i, &t)| t != TimeStamp::MAX && i != seed.index())
        .map(|(i, &t)| (VertexId(i as u32), t))
        .collect();

    Ok(HorizonResult {
        seed,
        seed_time,
        informed,
    })
}

/// Time-ignoring horizon of `seed`: all vertices other than the seed that
/// are connected to it in the time-aggregated bipartite graph.
pub fn static_horizon(
    view: &BipartiteView,
    seed: VertexId,
) -> Result<BTreeSet<VertexId>, ReachError> {
    if !view.contains_vertex(seed) {
        return Err(ReachError::UnknownVertex(seed));
    }

    let mut seen_vertex = vec![false; view.vertex_count()];
    let mut seen_channel = vec![false; view.channel_count()];
    let mut queue = VecDeque::new();
    let mut horizon = BTreeSet::new();

    seen_vertex[seed.index()] = true;
    queue.push_back(seed);

    while let Some(v) = queue.pop_front() {
        for &c in view.channels_of(v) {
            if seen_channel[c.index()] {
                continue;
            }
            seen_channel[c.index()] = true;
            for &w in view.participants(c) {
                if !seen_vertex[w.index()] {
                    seen_vertex[w.index()] = true;
                    horizon.insert(w);
                    queue.push_back(w);
                }
            }
        }
    }

    Ok(horizon)
}

/// True iff information seeded at `u` at time `t` can reach `v`.
pub fn is_reachable(
    view: &BipartiteView,
    u: VertexId,
    v: VertexId,
    t: TimeStamp,
    policy: TraversalPolicy,
) -> Result<bool, ReachError> {
    if !view.contains_vertex(v) {
        return Err(ReachError::UnknownVertex(v));
    }
    Ok(temporal_horizon(view, u, t, policy)?.contains(v))
}
