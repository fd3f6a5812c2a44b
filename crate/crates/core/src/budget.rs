use std::sync::atomic::{AtomicU64, Ordering};

/// Default cap on the number of ring elements any exhaustive scan may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 20;

/// Default cap on isomorphism search nodes.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

static ENUMERATION_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_ENUMERATION_BUDGET);
static SEARCH_BUDGET: AtomicU64 = AtomicU64::new(DEFAULT_SEARCH_BUDGET);

pub fn enumeration_budget() -> u64 {
    ENUMERATION_BUDGET.load(Ordering::Relaxed)
}

/// Process-wide; the CLI sets this once from `--budget`.
pub fn set_enumeration_budget(limit: u64) {
    ENUMERATION_BUDGET.store(limit, Ordering::Relaxed);
}

pub fn search_budget() -> u64 {
    SEARCH_BUDGET.load(Ordering::Relaxed)
}

pub fn set_search_budget(limit: u64) {
    SEARCH_BUDGET.store(limit, Ordering::Relaxed);
}
