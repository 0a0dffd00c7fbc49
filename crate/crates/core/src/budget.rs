use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Caps on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum number of colour maps (`k^n`, or the product of list sizes).
    pub colorings: u64,
    /// Maximum number of edge subsets (`2^m`).
    pub subsets: u64,
    /// Maximum number of nodes visited by the list-assignment search.
    pub search_nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            colorings: 100_000_000,
            subsets: 1 << 24,
            search_nodes: 10_000_000,
        }
    }
}

impl Budget {
    pub fn check_subsets(&self, m: usize) -> Result<()> {
        if m >= 64 || (1u64 << m) > self.subsets {
            return Err(Error::budget("edge subsets", format!("2^{m}"), self.subsets));
        }
        Ok(())
    }

    /// `base^exp` colour maps; saturates instead of overflowing.
    pub fn check_colorings(&self, base: u64, exp: usize) -> Result<()> {
        let mut total: u64 = 1;
        for _ in 0..exp {
            total = total.saturating_mul(base);
            if total > self.colorings {
                return Err(Error::budget(
                    "colorings",
                    format!("{base}^{exp}"),
                    self.colorings,
                ));
            }
        }
        Ok(())
    }
}
