//! Deterministic synthetic communication-network generator.
//!
//! Produces channel records with the published scale and multi-party share
//! as defaults: 37,103 participants, 309,740 channels, 33.98 % of channels
//! involving more than two participants. Only that share is published; the
//! tail shape (geometric over sizes >= 3 with mean 4) and the duration
//! distribution (geometric over ticks) are explicit inventions, documented
//! here and configurable. Participant selection is uniform — no community
//! structure — which makes this module the extension point for richer
//! topologies.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ingest::ChannelRecord;
use crate::time::{TimeStamp, TimeWindow};

/// Four weeks of seconds, matching the reference observation-window length.
const DEFAULT_WINDOW_TICKS: i64 = 28 * 24 * 3600;

#[derive(Clone, Debug, PartialEq)]
pub struct SynthParams {
    pub n_vertices: usize,
    pub n_channels: usize,
    pub window: TimeWindow,
    /// P(channel size > 2).
    pub multi_party_share: f64,
    /// Mean size of multi-party channels (geometric tail over sizes >= 3).
    pub tail_mean_size: f64,
    /// Mean channel duration in ticks (geometric).
    pub mean_duration: f64,
    /// Smallest channel size ever generated.
    pub min_size: usize,
    pub rng_seed: u64,
}

impl Default for SynthParams {
    fn default() -> Self {
        SynthParams {
            n_vertices: 37_103,
            n_channels: 309_740,
            window: TimeWindow::new(TimeStamp(0), TimeStamp(DEFAULT_WINDOW_TICKS)),
            multi_party_share: 0.3398,
            tail_mean_size: 4.0,
            mean_duration: 86_400.0,
            min_size: 2,
            rng_seed: 0,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

fn validate(params: &SynthParams) -> Result<(), SynthError> {
    let fail = |msg: String| Err(SynthError::InvalidParams(msg));
    if params.min_size < 2 {
        return fail(format!(
            "min_size must be at least 2, got {}",
            params.min_size
        ));
    }
    if params.n_vertices < params.min_size {
        return fail(format!(
            "channel size support exceeds the vertex universe: min_size {} > {} vertices",
            params.min_size, params.n_vertices
        ));
    }
    if !(0.0..=1.0).contains(&params.multi_party_share) {
        return fail(format!(
            "multi_party_share must be in [0, 1], got {}",
            params.multi_party_share
        ));
    }
    if params.tail_mean_size < 3.0 {
        return fail(format!(
            "tail_mean_size must be at least 3, got {}",
            params.tail_mean_size
        ));
    }
    if params.mean_duration < 0.0 || !params.mean_duration.is_finite() {
        return fail(format!(
            "mean_duration must be non-negative, got {}",
            params.mean_duration
        ));
    }
    if !params.window.is_well_ordered() {
        return fail(format!(
            "window start {} is after end {}",
            params.window.start, params.window.end
        ));
    }
    Ok(())
}

/// Generates exactly `n_channels` records, fully determined by `rng_seed`.
///
/// Per channel, in fixed draw order: size, open time (uniform in the
/// window), duration (geometric), then participants (uniform without
/// replacement). Close times are clamped to the window end, so every record
/// lies inside the window.
pub fn generate(params: &SynthParams) -> Result<Vec<ChannelRecord>, SynthError> {
    validate(params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.rng_seed);
    let tail_p = 1.0 / (1.0 + (params.tail_mean_size - 3.0));
    let duration_p = 1.0 / (1.0 + params.mean_duration);

    let mut records = Vec::with_capacity(params.n_channels);
    for k in 0..params.n_channels {
        let size = if rng.random::<f64>() < params.multi_party_share {
            3 + geometric(&mut rng, tail_p) as usize
        } else {
            2
        };
        let size = size.clamp(params.min_size, params.n_vertices);

        let opened_at = rng.random_range(params.window.start.0..=params.window.end.0);
        let duration = geometric(&mut rng, duration_p) as i64;
        let closed_at = opened_at.saturating_add(duration).min(params.window.end.0);

        let mut chosen = rand::seq::index::sample(&mut rng, params.n_vertices, size).into_vec();
        chosen.sort_unstable();

        records.push(ChannelRecord {
            external_id: format!("c{k}"),
            participants: chosen.into_iter().map(|v| format!("v{v}")).collect(),
            opened_at,
            closed_at,
        });
    }
    Ok(records)
}

/// Number of failures before the first success, P(success) = `p`.
/// Inverse-transform sampling keeps the draw count per record fixed.
fn geometric(rng: &mut impl Rng, p: f64) -> u64 {
    let u: f64 = rng.random();
    if p >= 1.0 {
        return 0;
    }
    let k = (1.0 - u).ln() / (1.0 - p).ln();
    if k.is_finite() && k >= 0.0 {
        k as u64
    } else {
        0
    }
}
