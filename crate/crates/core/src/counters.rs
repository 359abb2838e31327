//! Exact operation counts used to substantiate linear running time.

use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    /// Exact predicate evaluations issued by the sweeps.
    pub predicate_evals: u64,
    /// Single-step moves of any sweep cursor.
    pub cursor_advances: u64,
    /// Candidate constructions tried by the stability gadget.
    pub gadget_calls: u64,
    /// Unit and stripe pointer moves of the batched final scan.
    pub scan_moves: u64,
}

impl AddAssign for Counters {
    fn add_assign(&mut self, rhs: Self) {
        self.predicate_evals += rhs.predicate_evals;
        self.cursor_advances += rhs.cursor_advances;
        self.gadget_calls += rhs.gadget_calls;
        self.scan_moves += rhs.scan_moves;
    }
}
