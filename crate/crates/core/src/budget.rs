use std::cell::Cell;

use crate::error::{Error, Result};

/// Step budget shared by the enumeration routines.
///
/// Exhausting the budget is reported as an explicit [`Error::Budget`];
/// partial results are never returned.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: Cell::new(0) }
    }

    /// Account for `n` elementary steps inside `context`.
    #[inline]
    pub fn charge(&self, n: u64, context: &'static str) -> Result<()> {
        let used = self.used.get().saturating_add(n);
        self.used.set(used);
        if used > self.limit {
            Err(Error::Budget { context, limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        // Roomy enough for the default corpus; the CLI can lower it.
        Budget::new(2_000_000_000)
    }
}
