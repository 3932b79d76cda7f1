//! Exact optimization oracles, the closed-form completion-time
//! recursion, and the jump-removal transform.

mod closed_form;
mod exhaustive;
mod jump_removal;
mod nonjumping;

pub use closed_form::{closed_form_completion_times, ClosedFormError, CompletionSchedule};
pub use exhaustive::{solve_exhaustive, SolveError, DEFAULT_STATE_CAP};
pub use jump_removal::{
    lemma1_transform, strip_all_jumps, DurationBound, JumpRemoval, Lemma1Error, StripResult,
};
pub use nonjumping::solve_nonjumping;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::instance::NodeId;

/// Search counters reported alongside a solve.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub states_expanded: usize,
    pub memo_hits: usize,
}

/// Result of an exact solve: the optimal reward, a witness control
/// sequence realizing it (fully expanded, one node id per time-step),
/// and the set of nodes it repairs. The witness is empty iff no node
/// can be repaired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub reward: usize,
    pub witness: Vec<NodeId>,
    pub repaired: BTreeSet<NodeId>,
    pub stats: SearchStats,
}
