//! Shared fixtures and instance generators for the integration suites.

use horizons::graph::{ChannelDef, TemporalHypergraph};
use horizons::time::{Duration, TimeStamp, TimeWindow};
use rand::Rng;

/// The four-channel example instance:
/// e1={v1,v2,v3,v8}, e2={v2,v4,v9}, e3={v3,v5,v6,v7}, e4={v4,v5,v6},
/// each channel a point event at the given time.
pub fn fig_defs(e1: i64, e2: i64, e3: i64, e4: i64) -> Vec<ChannelDef> {
    vec![
        ChannelDef::new("e1", &["v1", "v2", "v3", "v8"], e1, e1),
        ChannelDef::new("e2", &["v2", "v4", "v9"], e2, e2),
        ChannelDef::new("e3", &["v3", "v5", "v6", "v7"], e3, e3),
        ChannelDef::new("e4", &["v4", "v5", "v6"], e4, e4),
    ]
}

pub fn build(defs: &[ChannelDef]) -> TemporalHypergraph {
    let window = TimeWindow::new(TimeStamp(0), TimeStamp(10));
    TemporalHypergraph::build(defs, window, &[]).unwrap()
}

/// Random instance small enough for the exhaustive oracle: up to `max_vertices`
/// vertices and `max_channels` channels, integer times in `[0, 10]`,
/// latencies in `[0, 3]`. All vertices enter the graph (isolated ones via the
/// universe), so every id is a valid seed.
pub fn random_small_instance(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_channels: usize,
) -> TemporalHypergraph {
    let n_vertices = rng.random_range(1..=max_vertices);
    let n_channels = rng.random_range(0..=max_channels);
    let defs = random_defs(rng, n_vertices, n_channels);
    let universe: Vec<String> = (0..n_vertices).map(|i| format!("n{i}")).collect();
    let window = TimeWindow::new(TimeStamp(0), TimeStamp(10));
    TemporalHypergraph::build(&defs, window, &universe).unwrap()
}

/// Random channel definitions over the labels `n0..n{n_vertices-1}`.
pub fn random_defs(rng: &mut impl Rng, n_vertices: usize, n_channels: usize) -> Vec<ChannelDef> {
    (0..n_channels)
        .map(|k| random_def(rng, n_vertices, &format!("c{k}")))
        .collect()
}

pub fn random_def(rng: &mut impl Rng, n_vertices: usize, id: &str) -> ChannelDef {
    let size = rng.random_range(1..=n_vertices);
    let mut chosen = rand::seq::index::sample(rng, n_vertices, size).into_vec();
    chosen.sort_unstable();
    let open = rng.random_range(0..=10);
    let close = rng.random_range(open..=10);
    ChannelDef {
        external_id: id.to_string(),
        participants: chosen.into_iter().map(|v| format!("n{v}")).collect(),
        open: TimeStamp(open),
        close: TimeStamp(close),
        latency: Duration(rng.random_range(0..=3)),
    }
}
