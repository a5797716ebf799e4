//! Enumeration budgets. Every exhaustive scan checks its item count up front.

/// Default cap on subspaces enumerated in one call.
pub const DEFAULT_SUBSPACES: u64 = 2_000_000;
/// Default cap on codewords (`q^k`) enumerated in one call.
pub const DEFAULT_CODEWORDS: u64 = 1 << 24;

/// Environment variable that overrides both caps.
pub const ENV_VAR: &str = "GFCODES_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub subspaces: u64,
    pub codewords: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { subspaces: DEFAULT_SUBSPACES, codewords: DEFAULT_CODEWORDS }
    }
}

impl Budget {
    pub fn uniform(n: u64) -> Self {
        Budget { subspaces: n, codewords: n }
    }

    pub fn unlimited() -> Self {
        Self::uniform(u64::MAX)
    }

    /// Defaults, or `GFCODES_BUDGET` applied to both caps when set to a
    /// positive integer.
    pub fn from_env() -> Self {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .filter(|&n| n > 0)
            .map(Self::uniform)
            .unwrap_or_default()
    }
}
