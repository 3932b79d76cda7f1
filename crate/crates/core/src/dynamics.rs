//! Discrete-time health dynamics: states, the single-step update, and
//! replay of whole control sequences.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::instance::{Instance, NodeId};
use crate::rational::Rat;

/// Status of a node, derived from its exact health value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeStatus {
    /// Health is exactly 0 (absorbing).
    Failed,
    /// Health is exactly 1 (absorbing).
    Repaired,
    /// Health is strictly between 0 and 1.
    Active,
}

/// Health values of all nodes at one time-step.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HealthState {
    pub t: u64,
    pub values: Vec<Rat>,
}

impl HealthState {
    pub fn initial(instance: &Instance) -> Self {
        HealthState {
            t: 0,
            values: instance.params().iter().map(|p| p.v0.clone()).collect(),
        }
    }

    /// Health of node `id` (1-based).
    pub fn value(&self, id: NodeId) -> &Rat {
        &self.values[id - 1]
    }

    pub fn status(&self, id: NodeId) -> NodeStatus {
        let v = self.value(id);
        if v.is_zero() {
            NodeStatus::Failed
        } else if v.is_one() {
            NodeStatus::Repaired
        } else {
            NodeStatus::Active
        }
    }

    pub fn is_resolved(&self, id: NodeId) -> bool {
        self.status(id) != NodeStatus::Active
    }
}

/// One step of the dynamics: the targeted active node gains its repair
/// rate (clipped at 1), every other active node loses its deterioration
/// rate (clipped at 0), and resolved nodes stay put.
pub fn step(instance: &Instance, state: &HealthState, action: NodeId) -> HealthState {
    assert!(
        action >= 1 && action <= instance.n(),
        "action {action} out of range 1..={}",
        instance.n()
    );
    let values = instance
        .node_ids()
        .map(|j| {
            let v = state.value(j);
            if v.is_one() || v.is_zero() {
                v.clone()
            } else if j == action {
                (v + &instance.node(j).inc).min(Rat::one())
            } else {
                (v - &instance.node(j).dec).max(Rat::zero())
            }
        })
        .collect();
    HealthState {
        t: state.t + 1,
        values,
    }
}

/// Nodes whose in-neighbors are all at full health. A node's own status
/// does not matter; resolved nodes can appear here.
pub fn feasible_set(instance: &Instance, state: &HealthState) -> BTreeSet<NodeId> {
    instance
        .node_ids()
        .filter(|&k| instance.dag().in_neighbors(k).all(|j| state.value(j).is_one()))
        .collect()
}

/// The feasible set restricted to nodes that are still active; policies
/// and solvers draw targets from here.
pub fn actionable_set(instance: &Instance, state: &HealthState) -> BTreeSet<NodeId> {
    feasible_set(instance, state)
        .into_iter()
        .filter(|&k| !state.is_resolved(k))
        .collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimulateError {
    #[error("action at time-step {0} targets a node whose in-neighbors are not all repaired")]
    PrecedenceViolation(u64),
    #[error("sequence of length {len} exceeds the horizon T = {limit}")]
    HorizonExceeded { len: usize, limit: u64 },
    #[error("control sequence is empty")]
    EmptyActions,
}

/// A control sequence plus the state history it induces.
///
/// `states[0]` holds the initial healths and `states[i + 1]` is the
/// result of applying `actions[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    instance: Instance,
    actions: Vec<NodeId>,
    states: Vec<HealthState>,
}

impl Trajectory {
    /// Assembles a trajectory from parts already known to be consistent
    /// (used by the policy runner, which steps states itself). Unlike
    /// `simulate`, the action list may be empty.
    pub(crate) fn new_unchecked(
        instance: Instance,
        actions: Vec<NodeId>,
        states: Vec<HealthState>,
    ) -> Self {
        debug_assert_eq!(states.len(), actions.len() + 1);
        Trajectory {
            instance,
            actions,
            states,
        }
    }

    pub fn instance(&self) -> &Instance {
        &self.instance
    }

    pub fn actions(&self) -> &[NodeId] {
        &self.actions
    }

    pub fn states(&self) -> &[HealthState] {
        &self.states
    }

    pub fn final_state(&self) -> &HealthState {
        self.states.last().expect("trajectory has at least one state")
    }

    /// Nodes that reach full health at some step after the start.
    pub fn repaired_set(&self) -> BTreeSet<NodeId> {
        let mut repaired = BTreeSet::new();
        for state in &self.states[1..] {
            for j in self.instance.node_ids() {
                if state.value(j).is_one() {
                    repaired.insert(j);
                }
            }
        }
        repaired
    }
}

/// Replays `actions` from the initial state, checking precedence at
/// every step. Targeting a resolved node is legal (a no-op on that node
/// while the others decay).
pub fn simulate(instance: &Instance, actions: &[NodeId]) -> Result<Trajectory, SimulateError> {
    if actions.is_empty() {
        return Err(SimulateError::EmptyActions);
    }
    if let crate::instance::Horizon::Finite(limit) = instance.horizon() {
        if actions.len() as u64 > limit + 1 {
            return Err(SimulateError::HorizonExceeded {
                len: actions.len(),
                limit,
            });
        }
    }
    let mut states = vec![HealthState::initial(instance)];
    for (t, &action) in actions.iter().enumerate() {
        let state = states.last().unwrap();
        if !feasible_set(instance, state).contains(&action) {
            return Err(SimulateError::PrecedenceViolation(t as u64));
        }
        states.push(step(instance, state, action));
    }
    Ok(Trajectory {
        instance: instance.clone(),
        actions: actions.to_vec(),
        states,
    })
}

/// Number of nodes permanently repaired by the trajectory.
pub fn reward(traj: &Trajectory) -> usize {
    traj.repaired_set().len()
}

/// Time-steps at which the entity switched away from an unrepaired
/// target: all `t >= 1` with `u_{t-1} = j`, `v_t^j < 1`, `u_t != j`.
pub fn detect_jumps(traj: &Trajectory) -> Vec<u64> {
    let actions = traj.actions();
    (1..actions.len())
        .filter(|&t| {
            let prev = actions[t - 1];
            actions[t] != prev && !traj.states()[t].value(prev).is_one()
        })
        .map(|t| t as u64)
        .collect()
}
