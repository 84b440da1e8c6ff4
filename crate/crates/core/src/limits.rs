//! Enumeration caps.
//!
//! Every exhaustive count is guarded so that a mistyped parameter fails fast
//! instead of running for hours. All caps are plain fields and may be raised
//! by callers; the CLI exposes `--cap-bits` and the `DOMCOUNT_CAP_BITS`
//! environment variable.

use crate::error::{Error, Result};

pub const CAP_BITS_ENV: &str = "DOMCOUNT_CAP_BITS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// log2 of the largest coloring/map search space (`|K|^n`, `q^n`).
    pub search_bits: u32,
    /// Largest vertex count for raw `2^n` subset enumeration.
    pub subset_bits: u32,
    /// Largest `n` for the all-labeled-graphs generator.
    pub max_graph_n: usize,
    /// Largest `n` for the labeled tree generator.
    pub max_tree_n: usize,
    /// Largest `n` for the labeled regular graph generator.
    pub max_regular_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search_bits: 30,
            subset_bits: 26,
            max_graph_n: 6,
            max_tree_n: 9,
            max_regular_n: 12,
        }
    }
}

impl Limits {
    /// No effective limits; for callers that have already sized their work.
    pub fn unbounded() -> Self {
        Limits {
            search_bits: 128,
            subset_bits: 64,
            max_graph_n: 11,
            max_tree_n: 64,
            max_regular_n: 64,
        }
    }

    /// Defaults, with `DOMCOUNT_CAP_BITS` applied when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(CAP_BITS_ENV) {
            let bits: u32 = raw
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{CAP_BITS_ENV}={raw:?} is not an integer")))?;
            limits = limits.with_cap_bits(bits)?;
        }
        Ok(limits)
    }

    /// Sets both enumeration caps from a single bit budget.
    pub fn with_cap_bits(mut self, bits: u32) -> Result<Self> {
        if bits == 0 {
            return Err(Error::Config("cap bits must be positive".into()));
        }
        self.search_bits = bits;
        self.subset_bits = bits.min(64);
        Ok(self)
    }

    pub(crate) fn check_search(&self, what: &str, n: usize, base: usize) -> Result<()> {
        if n == 0 || base <= 1 {
            return Ok(());
        }
        let log2_size = n as f64 * (base as f64).log2();
        if log2_size > self.search_bits as f64 + 1e-9 {
            return Err(Error::CapExceeded {
                what: format!("{what}: search space 2^{log2_size:.2}"),
                limit: format!("2^{}", self.search_bits),
            });
        }
        Ok(())
    }

    pub(crate) fn check_subsets(&self, what: &str, n: usize) -> Result<()> {
        if n as u32 > self.subset_bits {
            return Err(Error::CapExceeded {
                what: format!("{what}: 2^{n} subsets"),
                limit: format!("n <= {}", self.subset_bits),
            });
        }
        Ok(())
    }

    pub(crate) fn check_generator(&self, what: &str, n: usize, max: usize) -> Result<()> {
        if n > max {
            return Err(Error::CapExceeded {
                what: format!("{what} on {n} vertices"),
                limit: format!("n <= {max}"),
            });
        }
        Ok(())
    }
}
