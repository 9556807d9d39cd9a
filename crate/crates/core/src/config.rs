/// Enumeration guards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_rank: usize,
    pub max_weyl_order: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_rank: 8,
            max_weyl_order: 100_000,
        }
    }
}

impl Config {
    pub const RANK_ENV: &'static str = "DIRAC_MAX_RANK";

    /// Defaults, with the rank cap overridden by `DIRAC_MAX_RANK` when set.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(r) = Self::rank_override() {
            cfg.max_rank = r;
        }
        cfg
    }

    /// The value of `DIRAC_MAX_RANK`, if set and numeric.
    pub fn rank_override() -> Option<usize> {
        std::env::var(Self::RANK_ENV).ok().and_then(|v| v.trim().parse().ok())
    }

    pub fn with_max_rank(mut self, max_rank: usize) -> Self {
        self.max_rank = max_rank;
        self
    }
}
