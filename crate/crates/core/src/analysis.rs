//! All-seeds horizon sweeps and the two-model comparison.
//!
//! A sweep measures the horizon cardinality of every vertex under one
//! traversal model. The comparison runs both models over the same view and
//! reports per-vertex differences; by the subset law (every journey is also
//! a walk in the aggregated graph) the time-ignoring horizon dominates the
//! time-respecting one pointwise, so all differences are non-negative.

use rayon::prelude::*;

use crate::bipartite::BipartiteView;
use crate::graph::{ChannelId, VertexId};
use crate::reach::{temporal_horizon, Mode, Strictness, TraversalPolicy};
use crate::time::TimeStamp;
use crate::union_find::UnionFind;

/// Which traversal model a sweep ran under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelTag {
    TimeRespecting,
    TimeIgnoring,
}

/// When each seed starts its diffusion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SeedTimeRule {
    /// Every seed starts at the window start (maximal horizons).
    #[default]
    WindowStart,
    /// Each seed starts at the open time of its earliest channel; isolated
    /// vertices fall back to the window start.
    FirstAppearance,
}

/// Statistical locations of a cardinality distribution. The median is the
/// lower median for even-length samples, so it stays integer-valued.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CardinalitySummary {
    pub mean: f64,
    pub median: u64,
    pub min: u64,
    pub max: u64,
}

/// Statistical locations of the per-vertex difference distribution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiffSummary {
    pub mean: f64,
    pub median: u64,
    pub max: u64,
}

/// Per-vertex horizon cardinalities under one model. `per_vertex` is indexed
/// by dense vertex id.
#[derive(Clone, Debug, PartialEq)]
pub struct HorizonCardinalities {
    pub model: ModelTag,
    pub per_vertex: Vec<u32>,
    pub summary: CardinalitySummary,
}

/// Result of running both models over the same view.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub respecting: HorizonCardinalities,
    pub ignoring: HorizonCardinalities,
    /// `ignoring - respecting`, per vertex.
    pub per_vertex_diff: Vec<u32>,
    pub diff_summary: DiffSummary,
}

/// Measures the horizon cardinality of every vertex.
///
/// `workers` sizes a private thread pool for the sweep; `None` (or zero)
/// uses the current rayon configuration. Results are merged in vertex-id
/// order, so the output is identical for any worker count. The policy and
/// seed-time rule only apply to the time-respecting model.
pub fn sweep_horizons(
    view: &BipartiteView,
    model: ModelTag,
    policy: TraversalPolicy,
    rule: SeedTimeRule,
    workers: Option<usize>,
) -> HorizonCardinalities {
    let per_vertex = match model {
        ModelTag::TimeIgnoring => ignoring_counts(view),
        ModelTag::TimeRespecting => respecting_counts(view, policy, rule, workers),
    };
    let summary = summarize(&per_vertex);
    HorizonCardinalities {
        model,
        per_vertex,
        summary,
    }
}

/// Runs both sweeps over the same view and assembles per-vertex differences.
pub fn compare_models(
    view: &BipartiteView,
    policy: TraversalPolicy,
    rule: SeedTimeRule,
    workers: Option<usize>,
) -> ComparisonReport {
    let respecting = sweep_horizons(view, ModelTag::TimeRespecting, policy, rule, workers);
    let ignoring = sweep_horizons(view, ModelTag::TimeIgnoring, policy, rule, workers);

    let per_vertex_diff: Vec<u32> = ignoring
        .per_vertex
        .iter()
        .zip(&respecting.per_vertex)
        .map(|(&i, &r)| {
            i.checked_sub(r)
                .expect("time-respecting horizon exceeded the time-ignoring horizon")
        })
        .collect();
    let diff_summary = summarize_diff(&per_vertex_diff);

    ComparisonReport {
        respecting,
        ignoring,
        per_vertex_diff,
        diff_summary,
    }
}

/// Connected components of the aggregated vertex projection, as a histogram
/// of `(component_size, count)` sorted by size descending.
pub fn largest_components(view: &BipartiteView) -> Vec<(usize, usize)> {
    let mut uf = components(view);
    let mut histogram = std::collections::BTreeMap::new();
    for v in 0..view.vertex_count() {
        if uf.find(v) == v {
            *histogram.entry(uf.set_size(v)).or_insert(0usize) += 1;
        }
    }
    histogram.into_iter().rev().collect()
}

fn components(view: &BipartiteView) -> UnionFind {
    let mut uf = UnionFind::new(view.vertex_count());
    for c in view.channel_ids() {
        let parts = view.participants(c);
        if let Some((&first, rest)) = parts.split_first() {
            for &w in rest {
                uf.union(first.index(), w.index());
            }
        }
    }
    uf
}

fn ignoring_counts(view: &BipartiteView) -> Vec<u32> {
    let mut uf = components(view);
    (0..view.vertex_count())
        .map(|v| (uf.set_size(v) - 1) as u32)
        .collect()
}

fn respecting_counts(
    view: &BipartiteView,
    policy: TraversalPolicy,
    rule: SeedTimeRule,
    workers: Option<usize>,
) -> Vec<u32> {
    let seed_times = seed_times(view, rule);
    match policy.mode {
        Mode::PointEvent => {
            let index = EventIndex::new(view);
            let n = view.vertex_count();
            with_pool(workers, || {
                (0..n)
                    .into_par_iter()
                    .map_init(
                        || vec![i64::MAX; n],
                        |arrival, v| {
                            index.count_informed(
                                v as u32,
                                seed_times[v].0,
                                policy.strictness,
                                arrival,
                            )
                        },
                    )
                    .collect()
            })
        }
        Mode::Interval => with_pool(workers, || {
            (0..view.vertex_count())
                .into_par_iter()
                .map(|v| {
                    let seed = VertexId(v as u32);
                    temporal_horizon(view, seed, seed_times[v], policy)
                        .expect("seed ids are dense")
                        .cardinality() as u32
                })
                .collect()
        }),
    }
}

fn seed_times(view: &BipartiteView, rule: SeedTimeRule) -> Vec<TimeStamp> {
    let start = view.window().start;
    match rule {
        SeedTimeRule::WindowStart => vec![start; view.vertex_count()],
        SeedTimeRule::FirstAppearance => view
            .vertex_ids()
            .map(|v| {
                view.channels_of(v)
                    .iter()
                    .map(|&c| view.presence(c).open)
                    .min()
                    .unwrap_or(start)
            })
            .collect(),
    }
}

fn with_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("failed to build sweep thread pool")
            .install(f),
        _ => f(),
    }
}

/// Channels flattened in ascending close order, for the point-event sweep.
///
/// Under the point-event reading every arrival is some channel's close time,
/// so informed times are finalized by one pass over the channels in close
/// order: when a channel is reached, every earlier arrival is already final.
struct EventIndex {
    closes: Vec<i64>,
    offsets: Vec<u32>,
    parts: Vec<u32>,
}

impl EventIndex {
    fn new(view: &BipartiteView) -> Self {
        let m = view.channel_count();
        let mut order: Vec<u32> = (0..m as u32).collect();
        order.sort_unstable_by_key(|&c| (view.presence(ChannelId(c)).close, c));

        let mut closes = Vec::with_capacity(m);
        let mut offsets = Vec::with_capacity(m + 1);
        let mut parts = Vec::with_capacity(view.edge_count());
        offsets.push(0);
        for &c in &order {
            let c = ChannelId(c);
            closes.push(view.presence(c).close.0);
            parts.extend(view.participants(c).iter().map(|v| v.0));
            offsets.push(parts.len() as u32);
        }
        EventIndex {
            closes,
            offsets,
            parts,
        }
    }

    fn participants(&self, i: usize) -> &[u32] {
        &self.parts[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    /// Number of vertices other than the seed that become informed.
    /// `arrival` is caller-provided scratch of length `vertex_count`.
    fn count_informed(
        &self,
        seed: u32,
        seed_time: i64,
        strictness: Strictness,
        arrival: &mut [i64],
    ) -> u32 {
        arrival.fill(i64::MAX);
        arrival[seed as usize] = seed_time;
        let mut count = 0u32;

        match strictness {
            Strictness::Strict => {
                // A strict chain has strictly increasing close times, so a
                // single pass suffices and equal-close channels cannot
                // enable one another.
                for i in 0..self.closes.len() {
                    let close = self.closes[i];
                    let parts = self.participants(i);
                    if parts.iter().any(|&p| arrival[p as usize] < close) {
                        for &p in parts {
                            if arrival[p as usize] == i64::MAX && p != seed {
                                arrival[p as usize] = close;
                                count += 1;
                            }
                        }
                    }
                }
            }
            Strictness::NonStrict => {
                // Firing at close T can enable another channel closing at
                // the same T, so each equal-close group iterates to a fixed
                // point.
                let mut i = 0;
                while i < self.closes.len() {
                    let close = self.closes[i];
                    let mut group_end = i + 1;
                    while group_end < self.closes.len() && self.closes[group_end] == close {
                        group_end += 1;
                    }
                    loop {
                        let mut changed = false;
                        for j in i..group_end {
                            let parts = self.participants(j);
                            if parts.iter().any(|&p| arrival[p as usize] <= close) {
                                for &p in parts {
                                    if arrival[p as usize] == i64::MAX && p != seed {
                                        arrival[p as usize] = close;
                                        count += 1;
                                        changed = true;
                                    }
                                }
                            }
                        }
                        if !changed {
                            break;
                        }
                    }
                    i = group_end;
                }
            }
        }
        count
    }
}

fn summarize(per_vertex: &[u32]) -> CardinalitySummary {
    if per_vertex.is_empty() {
        return CardinalitySummary {
            mean: 0.0,
            median: 0,
            min: 0,
            max: 0,
        };
    }
    let mut sorted = per_vertex.to_vec();
    sorted.sort_unstable();
    CardinalitySummary {
        mean: sorted.iter().map(|&x| x as f64).sum::<f64>() / sorted.len() as f64,
        median: sorted[(sorted.len() - 1) / 2] as u64,
        min: sorted[0] as u64,
        max: sorted[sorted.len() - 1] as u64,
    }
}

fn summarize_diff(per_vertex: &[u32]) -> DiffSummary {
    let s = summarize(per_vertex);
    DiffSummary {
        mean: s.mean,
        median: s.median,
        max: s.max,
    }
}
