//! Discrete time axis shared by all temporal types.
//!
//! Time is a signed 64-bit tick count. What one tick means (seconds since
//! epoch, hours, review rounds, ...) is metadata carried by the graph, not by
//! the value, so arithmetic and ordering stay exact with no floating-point
//! ties.

use std::fmt;
use std::ops::Add;

/// A point on the discrete time axis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TimeStamp(pub i64);

/// A non-negative span of ticks, e.g. the latency of a channel.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Duration(pub u64);

impl TimeStamp {
    pub const MIN: TimeStamp = TimeStamp(i64::MIN);
    pub const MAX: TimeStamp = TimeStamp(i64::MAX);

    /// Adds a duration, clamping at the representable maximum so that
    /// timestamp arithmetic is closed.
    pub fn saturating_add(self, d: Duration) -> TimeStamp {
        let ticks = i64::try_from(d.0).unwrap_or(i64::MAX);
        TimeStamp(self.0.saturating_add(ticks))
    }
}

impl Add<Duration> for TimeStamp {
    type Output = TimeStamp;

    fn add(self, d: Duration) -> TimeStamp {
        self.saturating_add(d)
    }
}

impl fmt::Display for TimeStamp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Duration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Closed observation interval `[start, end]`.
///
/// Channels whose presence interval intersects the window are observed;
/// everything else is invisible to the model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TimeWindow {
    pub start: TimeStamp,
    pub end: TimeStamp,
}

impl TimeWindow {
    pub fn new(start: TimeStamp, end: TimeStamp) -> Self {
        TimeWindow { start, end }
    }

    /// `start <= end`; the empty-window case is rejected at graph build time.
    pub fn is_well_ordered(&self) -> bool {
        self.start <= self.end
    }

    /// True iff the closed interval `[open, close]` intersects the window.
    pub fn overlaps(&self, open: TimeStamp, close: TimeStamp) -> bool {
        open <= self.end && close >= self.start
    }
}
