use std::fmt;
use std::str::FromStr;

use super::PpnError;

/// Distance used to compare two vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Metric {
    #[default]
    Euclidean,
    Manhattan,
}

impl FromStr for Metric {
    type Err = PpnError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" => Ok(Metric::Euclidean),
            "manhattan" => Ok(Metric::Manhattan),
            other => Err(PpnError::InvalidParams(format!("unknown metric '{other}'"))),
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::Euclidean => "euclidean",
            Metric::Manhattan => "manhattan",
        })
    }
}

/// Neighborhood radius, stride between window centers, and comparison options.
///
/// Windows are centered every `stride + 1` positions and span `radius` bases on
/// each side. By default `1 <= stride <= radius` so that consecutive windows overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PpnParams {
    radius: u32,
    stride: u32,
    metric: Metric,
    allow_gaps: bool,
    normalize: bool,
}

impl PpnParams {
    /// Largest radius for which `7^(2l+1)` still fits in 63 bits.
    pub const MAX_RADIUS: u32 = 10;
    pub const DEFAULT_RADIUS: u32 = 4;
    pub const DEFAULT_STRIDE: u32 = 1;

    /// Validated parameters with `1 <= stride <= radius <= 10`.
    pub fn new(radius: u32, stride: u32) -> Result<Self, PpnError> {
        Self::build(radius, stride, false)
    }

    /// Like [`PpnParams::new`] but also accepts `stride > radius`, leaving
    /// uncovered bases between windows.
    pub fn with_gaps(radius: u32, stride: u32) -> Result<Self, PpnError> {
        Self::build(radius, stride, true)
    }

    fn build(radius: u32, stride: u32, allow_gaps: bool) -> Result<Self, PpnError> {
        if radius < 1 {
            return Err(PpnError::InvalidParams("radius l must be at least 1".into()));
        }
        if radius > Self::MAX_RADIUS {
            return Err(PpnError::InvalidParams(format!(
                "radius l must be at most {} (got {radius})",
                Self::MAX_RADIUS
            )));
        }
        if stride < 1 {
            return Err(PpnError::InvalidParams("stride t must be at least 1".into()));
        }
        if stride > radius && !allow_gaps {
            return Err(PpnError::InvalidParams(format!(
                "stride t={stride} exceeds radius l={radius}; adjacent windows would not overlap"
            )));
        }
        Ok(Self {
            radius,
            stride,
            metric: Metric::Euclidean,
            allow_gaps,
            normalize: false,
        })
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    /// Divide each component by the window count before comparing. Off by default.
    pub fn with_normalization(mut self, normalize: bool) -> Self {
        self.normalize = normalize;
        self
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn stride(&self) -> u32 {
        self.stride
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    pub fn normalize(&self) -> bool {
        self.normalize
    }

    /// True when consecutive windows leave bases uncovered.
    pub fn has_gaps(&self) -> bool {
        self.stride > self.radius
    }

    /// Largest possible window size, `2l + 1`.
    pub fn window_span(&self) -> u32 {
        2 * self.radius + 1
    }
}

impl Default for PpnParams {
    fn default() -> Self {
        Self::new(Self::DEFAULT_RADIUS, Self::DEFAULT_STRIDE).expect("defaults are valid")
    }
}
