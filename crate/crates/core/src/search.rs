//! Node-budget bookkeeping shared by the exact solvers.

/// Default number of search nodes a solver may expand.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    limit: u64,
    used: u64,
}

impl SearchBudget {
    pub fn new(limit: u64) -> Self {
        SearchBudget { limit, used: 0 }
    }

    /// Accounts one node; returns false once the budget is exhausted.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used > self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

/// Outcome bookkeeping for a branch-and-bound run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    /// Set when the search ran out of nodes; the answer is then only a
    /// best-known value, not an exact one.
    pub budget_exceeded: bool,
    /// Set when the caller asked the search to stop at a target value.
    pub stopped_at_target: bool,
}

impl SolveStats {
    pub fn exact(&self) -> bool {
        !self.budget_exceeded && !self.stopped_at_target
    }
}
