//! Enumeration caps for the exponential subset scans.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_MINOR_CAP: usize = 20;
pub const DEFAULT_CLAN_CAP: usize = 16;
/// No override may raise a cap above this.
pub const HARD_CEILING: usize = 24;
pub const ENV_VAR: &str = "EFFSPEC_MAX_N";

/// Largest dimensions accepted by full principal-minor and boolean-grid
/// enumeration (`minor_cap`) and by clan enumeration (`clan_cap`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub minor_cap: usize,
    pub clan_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            minor_cap: DEFAULT_MINOR_CAP,
            clan_cap: DEFAULT_CLAN_CAP,
        }
    }
}

impl Limits {
    /// Caps in force for this process: the defaults, or the value of
    /// `EFFSPEC_MAX_N` (clamped to [`HARD_CEILING`]) applied to both caps.
    /// The environment is read once.
    pub fn current() -> Limits {
        static CURRENT: OnceLock<Limits> = OnceLock::new();
        *CURRENT.get_or_init(|| Limits::from_override(std::env::var(ENV_VAR).ok().as_deref()))
    }

    /// Unparsable overrides are ignored.
    pub fn from_override(value: Option<&str>) -> Limits {
        match value.and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(n) => {
                let n = n.min(HARD_CEILING);
                Limits {
                    minor_cap: n,
                    clan_cap: n,
                }
            }
            None => Limits::default(),
        }
    }

    pub fn check_minors(&self, n: usize) -> Result<()> {
        check(n, self.minor_cap)
    }

    pub fn check_clans(&self, n: usize) -> Result<()> {
        check(n, self.clan_cap)
    }
}

fn check(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}
