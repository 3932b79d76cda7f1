//! Exact optimum over non-jumping sequences.
//!
//! Search is depth-first over macro-actions "target one actionable node
//! until repaired", memoized on the health vector (plus elapsed time
//! when the horizon is finite). Each macro repairs exactly one node, so
//! the recursion depth is at most N and no cycles can occur. A branch
//! stops early once it matches the upper bound of one repair per still
//! active node.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::dynamics::{actionable_set, simulate, HealthState};
use crate::instance::{Horizon, Instance, NodeId};
use crate::rational::Rat;

use super::{SearchStats, SolveResult};

type Key = (Vec<Rat>, Option<u64>);

#[derive(Clone)]
struct Entry {
    gain: usize,
    /// Smallest-id macro achieving `gain`; `None` when no macro fits.
    best: Option<(NodeId, u64)>,
}

struct Search<'a> {
    instance: &'a Instance,
    memo: HashMap<Key, Entry>,
    memo_hits: usize,
}

/// Number of targeting steps to bring node `j` from its current health
/// to 1.
pub(super) fn steps_to_repair(instance: &Instance, state: &HealthState, j: NodeId) -> u64 {
    let deficit = Rat::one() - state.value(j).clone();
    let steps: BigInt = (deficit / instance.node(j).inc.clone()).ceil_int();
    u64::try_from(steps).expect("repair duration fits in u64")
}

/// State after targeting active node `j` for `steps` consecutive steps:
/// `j` reaches 1, every other active node decays `steps` times (clipped
/// at 0), resolved nodes stay put.
pub(super) fn apply_macro(
    instance: &Instance,
    state: &HealthState,
    j: NodeId,
    steps: u64,
) -> HealthState {
    let decay_steps = Rat::from_int(steps as i64);
    let values = instance
        .node_ids()
        .map(|l| {
            let v = state.value(l);
            if l == j {
                Rat::one()
            } else if v.is_zero() || v.is_one() {
                v.clone()
            } else {
                (v - &(instance.node(l).dec.clone() * decay_steps.clone())).max(Rat::zero())
            }
        })
        .collect();
    HealthState {
        t: state.t + steps,
        values,
    }
}

impl Search<'_> {
    fn solve(&mut self, state: &HealthState, elapsed: u64) -> Entry {
        let key: Key = (
            state.values.clone(),
            self.instance.horizon().is_finite().then_some(elapsed),
        );
        if let Some(entry) = self.memo.get(&key) {
            self.memo_hits += 1;
            return entry.clone();
        }
        let active_count = self
            .instance
            .node_ids()
            .filter(|&j| !state.is_resolved(j))
            .count();
        let mut best = Entry {
            gain: 0,
            best: None,
        };
        for j in actionable_set(self.instance, state) {
            let steps = steps_to_repair(self.instance, state, j);
            if let Horizon::Finite(limit) = self.instance.horizon() {
                // the repairing action must land at a time-step <= T
                if elapsed + steps > limit + 1 {
                    continue;
                }
            }
            let child = apply_macro(self.instance, state, j, steps);
            let gain = 1 + self.solve(&child, elapsed + steps).gain;
            if gain > best.gain {
                best = Entry {
                    gain,
                    best: Some((j, steps)),
                };
                if best.gain == active_count {
                    break;
                }
            }
        }
        self.memo.insert(key, best.clone());
        best
    }
}

/// Exact maximum reward over all non-jumping precedence-respecting
/// sequences within the horizon. The witness is the lexicographically
/// smallest expanded action list among the optimal ones.
pub fn solve_nonjumping(instance: &Instance) -> SolveResult {
    let mut search = Search {
        instance,
        memo: HashMap::new(),
        memo_hits: 0,
    };
    let initial = HealthState::initial(instance);
    let reward = search.solve(&initial, 0).gain;

    // replay the memoized choices into a per-step witness
    let mut witness: Vec<NodeId> = Vec::new();
    let mut state = initial;
    let mut elapsed = 0u64;
    loop {
        let key: Key = (
            state.values.clone(),
            instance.horizon().is_finite().then_some(elapsed),
        );
        let entry = search.memo.get(&key).expect("state visited during search");
        let Some((j, steps)) = entry.best else { break };
        witness.extend(std::iter::repeat(j).take(steps as usize));
        state = apply_macro(instance, &state, j, steps);
        elapsed += steps;
    }

    let repaired = if witness.is_empty() {
        Default::default()
    } else {
        let traj = simulate(instance, &witness).expect("witness respects constraints");
        let repaired = traj.repaired_set();
        debug_assert_eq!(repaired.len(), reward);
        repaired
    };
    SolveResult {
        reward,
        witness,
        repaired,
        stats: SearchStats {
            states_expanded: search.memo.len(),
            memo_hits: search.memo_hits,
        },
    }
}
