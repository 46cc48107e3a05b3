/// Limits and seeds shared by the analyses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    /// Largest transition monoid that will be enumerated.
    pub monoid_cap: usize,
    /// Words up to this length are used by sampled cross-checks.
    pub max_len: usize,
    pub seed: u64,
    /// Random attempts per piece when splitting a module.
    pub trials: usize,
}

pub const DEFAULT_MONOID_CAP: usize = 1_000_000;

impl Default for Config {
    fn default() -> Self {
        Config { monoid_cap: DEFAULT_MONOID_CAP, max_len: 8, seed: 0, trials: 64 }
    }
}
