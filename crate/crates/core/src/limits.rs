//! Process-wide size caps. Defaults bound memory for cyclotomic vectors and
//! enumerated groups; front-ends may raise them.

use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};

pub const DEFAULT_MAX_CONDUCTOR: u32 = 10_000;
pub const DEFAULT_MAX_GROUP_ORDER: usize = 20_000;
pub const DEFAULT_MAX_TABLE_ORDER: usize = 200;

static MAX_CONDUCTOR: AtomicU32 = AtomicU32::new(DEFAULT_MAX_CONDUCTOR);
static MAX_GROUP_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_GROUP_ORDER);

pub fn max_conductor() -> u32 {
    MAX_CONDUCTOR.load(Ordering::Relaxed)
}

pub fn set_max_conductor(cap: u32) {
    MAX_CONDUCTOR.store(cap.max(1), Ordering::Relaxed);
}

pub fn max_group_order() -> usize {
    MAX_GROUP_ORDER.load(Ordering::Relaxed)
}

pub fn set_max_group_order(cap: usize) {
    MAX_GROUP_ORDER.store(cap.max(1), Ordering::Relaxed);
}
