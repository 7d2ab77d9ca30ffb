//! Exhaustive reachability oracle for validating the horizon algorithms.
//!
//! Walks every policy-valid journey by brute force, directly over the
//! graph's channel list — it never touches the bipartite view or the search
//! used by [`crate::reach::temporal_horizon`]. Intended for small instances;
//! a guard rejects anything larger than a configurable channel count.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Channel, ChannelId, TemporalHypergraph, VertexId};
use crate::reach::{Journey, Mode, Strictness, TraversalPolicy};
use crate::time::TimeStamp;

/// Default ceiling on the number of channels the oracle will enumerate.
pub const DEFAULT_CHANNEL_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for exhaustive enumeration: {channels} channels (limit {limit})")]
    InstanceTooLarge { channels: usize, limit: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// Minimum arrival time per vertex over all policy-valid journeys from
/// `seed`, found by exhaustive enumeration of channel sequences.
///
/// Journey steps may repeat channels; the enumeration is bounded by
/// arrival-time monotonicity: re-entering a vertex no earlier than a time
/// already explored cannot improve any continuation, so such branches are
/// cut without loss.
pub fn enumerate_reachable(
    graph: &TemporalHypergraph,
    seed: VertexId,
    seed_time: TimeStamp,
    policy: TraversalPolicy,
) -> Result<BTreeMap<VertexId, TimeStamp>, OracleError> {
    enumerate_reachable_with_limit(graph, seed, seed_time, policy, DEFAULT_CHANNEL_LIMIT)
}

/// Same as [`enumerate_reachable`] with an explicit channel-count guard.
pub fn enumerate_reachable_with_limit(
    graph: &TemporalHypergraph,
    seed: VertexId,
    seed_time: TimeStamp,
    policy: TraversalPolicy,
    max_channels: usize,
) -> Result<BTreeMap<VertexId, TimeStamp>, OracleError> {
    run_search(graph, seed, seed_time, policy, max_channels).map(|s| s.informed)
}

/// For every reachable vertex, one concrete earliest-arrival journey.
/// Witnesses carry the crossing-start times, so they can be checked against
/// [`Journey::is_valid`] independently of the arrival map.
pub fn witness_journeys(
    graph: &TemporalHypergraph,
    seed: VertexId,
    seed_time: TimeStamp,
    policy: TraversalPolicy,
) -> Result<BTreeMap<VertexId, Journey>, OracleError> {
    let search = run_search(graph, seed, seed_time, policy, DEFAULT_CHANNEL_LIMIT)?;
    Ok(search.witnesses)
}

fn run_search(
    graph: &TemporalHypergraph,
    seed: VertexId,
    seed_time: TimeStamp,
    policy: TraversalPolicy,
    max_channels: usize,
) -> Result<Search<'_>, OracleError> {
    if graph.channel_count() > max_channels {
        return Err(OracleError::InstanceTooLarge {
            channels: graph.channel_count(),
            limit: max_channels,
        });
    }
    if !graph.contains_vertex(seed) {
        return Err(OracleError::UnknownVertex(seed));
    }

    let mut search = Search {
        channels: graph.channels(),
        policy,
        seed,
        expanded: vec![TimeStamp::MAX; graph.vertex_count()],
        informed: BTreeMap::new(),
        trail: Vec::new(),
        witnesses: BTreeMap::new(),
    };
    search.expanded[seed.index()] = seed_time;
    search.walk(seed, seed_time);
    Ok(search)
}

struct Search<'a> {
    channels: &'a [Channel],
    policy: TraversalPolicy,
    seed: VertexId,
    /// Earliest time each vertex has been expanded from, seed included.
    expanded: Vec<TimeStamp>,
    informed: BTreeMap<VertexId, TimeStamp>,
    /// Crossings of the walk currently being explored.
    trail: Vec<(ChannelId, TimeStamp)>,
    witnesses: BTreeMap<VertexId, Journey>,
}

impl Search<'_> {
    fn walk(&mut self, at: VertexId, t: TimeStamp) {
        for i in 0..self.channels.len() {
            let channel = &self.channels[i];
            if !channel.participants.contains(&at) {
                continue;
            }
            let Some((start, arrival)) = journey_step(self.policy, t, channel) else {
                continue;
            };
            self.trail.push((channel.id, start));
            for j in 0..self.channels[i].participants.len() {
                let next = self.channels[i].participants[j];
                if next == at {
                    continue;
                }
                if next != self.seed {
                    let known = self.informed.get(&next).copied();
                    if known.is_none_or(|best| arrival < best) {
                        self.informed.insert(next, arrival);
                        self.witnesses.insert(
                            next,
                            Journey {
                                steps: self.trail.clone(),
                                endpoints: (self.seed, next),
                            },
                        );
                    }
                }
                if arrival < self.expanded[next.index()] {
                    self.expanded[next.index()] = arrival;
                    self.walk(next, arrival);
                }
            }
            self.trail.pop();
        }
    }
}

/// The journey-step rule, written out from the journey definition: a
/// crossing of `channel` requires a start within the presence interval, the
/// channel present until the crossing completes, and the carrier to hold the
/// information in time relative to the close. Returns the crossing start and
/// the completion time.
fn journey_step(
    policy: TraversalPolicy,
    t: TimeStamp,
    channel: &Channel,
) -> Option<(TimeStamp, TimeStamp)> {
    let holds_in_time = match policy.strictness {
        Strictness::Strict => t < channel.close,
        Strictness::NonStrict => t <= channel.close,
    };
    if !holds_in_time {
        return None;
    }
    match policy.mode {
        // the exchange is the close-time event itself
        Mode::PointEvent => Some((channel.close, channel.close)),
        Mode::Interval => {
            let start = if t > channel.open { t } else { channel.open };
            let completed = start.saturating_add(channel.latency);
            if completed <= channel.close {
                Some((start, completed))
            } else {
                None
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ChannelDef;
    use crate::time::TimeWindow;

    fn build(defs: &[ChannelDef]) -> TemporalHypergraph {
        let window = TimeWindow::new(TimeStamp(0), TimeStamp(100));
        TemporalHypergraph::build(defs, window, &[]).unwrap()
    }

    #[test]
    fn empty_channel_set_yields_empty_map() {
        let g = TemporalHypergraph::build(
            &[],
            TimeWindow::new(TimeStamp(0), TimeStamp(10)),
            &["a".to_string()],
        )
        .unwrap();
        let seed = g.vertex_by_label("a").unwrap();
        let map = enumerate_reachable(&g, seed, TimeStamp(0), TraversalPolicy::default()).unwrap();
        assert!(map.is_empty());
    }

    #[test]
    fn chain_with_decreasing_tail_blocks_the_last_hop() {
        let g = build(&[
            ChannelDef::new("c1", &["a", "b"], 1, 1),
            ChannelDef::new("c2", &["b", "c"], 2, 2),
            ChannelDef::new("c3", &["c", "d"], 1, 1),
        ]);
        let seed = g.vertex_by_label("a").unwrap();
        let map = enumerate_reachable(&g, seed, TimeStamp(0), TraversalPolicy::default()).unwrap();
        let b = g.vertex_by_label("b").unwrap();
        let c = g.vertex_by_label("c").unwrap();
        let d = g.vertex_by_label("d").unwrap();
        assert_eq!(map[&b], TimeStamp(1));
        assert_eq!(map[&c], TimeStamp(2));
        // d would need the information at c before time 1
        assert!(!map.contains_key(&d));
        assert_eq!(map.len(), 2);
    }

    #[test]
    fn example_instance_matches_hand_simulation() {
        let g = build(&crate::graph::tests::example_defs(1, 2, 4, 3));
        let seed = g.vertex_by_label("v1").unwrap();
        let map = enumerate_reachable(&g, seed, TimeStamp(0), TraversalPolicy::default()).unwrap();
        let expected: BTreeMap<VertexId, TimeStamp> = [
            ("v2", 1),
            ("v3", 1),
            ("v8", 1),
            ("v4", 2),
            ("v9", 2),
            ("v5", 3),
            ("v6", 3),
            ("v7", 4),
        ]
        .into_iter()
        .map(|(l, t)| (g.vertex_by_label(l).unwrap(), TimeStamp(t)))
        .collect();
        assert_eq!(map, expected);
    }

    #[test]
    fn witnesses_are_valid_journeys_achieving_the_recorded_arrivals() {
        let g = build(&crate::graph::tests::example_defs(1, 2, 4, 3));
        let view = g.to_bipartite();
        let seed = g.vertex_by_label("v1").unwrap();
        let policy = TraversalPolicy::default();
        let map = enumerate_reachable(&g, seed, TimeStamp(0), policy).unwrap();
        let witnesses = witness_journeys(&g, seed, TimeStamp(0), policy).unwrap();

        assert_eq!(
            witnesses.keys().collect::<Vec<_>>(),
            map.keys().collect::<Vec<_>>()
        );
        for (v, journey) in &witnesses {
            assert_eq!(journey.endpoints, (seed, *v));
            assert!(journey.is_valid(&view, TimeStamp(0), policy));
            assert_eq!(journey.arrival(&view, policy), Some(map[v]));
        }

        // v6's earliest witness runs through e2 then e4, not through e3
        let v6 = g.vertex_by_label("v6").unwrap();
        let path: Vec<&str> = witnesses[&v6]
            .steps
            .iter()
            .map(|&(c, _)| g.channel_external_id(c))
            .collect();
        assert_eq!(path, vec!["e1", "e2", "e4"]);
    }

    #[test]
    fn guard_rejects_large_instances() {
        let defs: Vec<ChannelDef> = (0..13)
            .map(|i| ChannelDef::new(format!("c{i}"), &["a", "b"], 0, 1))
            .collect();
        let g = build(&defs);
        let seed = g.vertex_by_label("a").unwrap();
        let err =
            enumerate_reachable(&g, seed, TimeStamp(0), TraversalPolicy::default()).unwrap_err();
        assert_eq!(
            err,
            OracleError::InstanceTooLarge {
                channels: 13,
                limit: 12
            }
        );
        assert!(enumerate_reachable_with_limit(
            &g,
            seed,
            TimeStamp(0),
            TraversalPolicy::default(),
            13
        )
        .is_ok());
    }
}
