//! Greedy feedback policies and a runner that unrolls a policy (or a
//! fixed repair-to-completion order) into a trajectory.

use std::collections::HashSet;

use thiserror::Error;

use crate::dynamics::{actionable_set, feasible_set, step, HealthState, Trajectory};
use crate::instance::{Instance, NodeId};
use crate::rational::Rat;

/// Which policy to unroll.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolicyKind {
    /// Target the actionable node with the highest health; ties go to
    /// the smallest id.
    HealthiestFirst,
    /// Target the actionable node with the least health minus
    /// deterioration rate; ties go to the smallest id.
    LeastModifiedHealthFirst,
    /// Target each listed node until repaired, skipping nodes already
    /// resolved when reached. Produces a non-jumping trajectory.
    FixedOrder(Vec<NodeId>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolicyError {
    #[error("fixed order targets node {node} at time-step {t} before its in-neighbors are repaired")]
    PrecedenceViolation { node: NodeId, t: u64 },
    #[error("fixed order list is not a set of distinct node ids in range: {0:?}")]
    BadOrder(Vec<NodeId>),
}

/// Node with the highest health among the actionable set, or `None` if
/// the set is empty.
pub fn healthiest_first(instance: &Instance, state: &HealthState) -> Option<NodeId> {
    select_by_key(instance, state, |j| state.value(j).clone(), false)
}

/// Node with the least modified health (health minus deterioration
/// rate) among the actionable set, or `None` if the set is empty.
pub fn least_modified_health_first(instance: &Instance, state: &HealthState) -> Option<NodeId> {
    select_by_key(
        instance,
        state,
        |j| state.value(j) - &instance.node(j).dec,
        true,
    )
}

fn select_by_key(
    instance: &Instance,
    state: &HealthState,
    key: impl Fn(NodeId) -> Rat,
    minimize: bool,
) -> Option<NodeId> {
    let mut best: Option<(NodeId, Rat)> = None;
    // ascending id iteration keeps the smallest id on ties
    for j in actionable_set(instance, state) {
        let k = key(j);
        let better = match &best {
            None => true,
            Some((_, bk)) => {
                if minimize {
                    k < *bk
                } else {
                    k > *bk
                }
            }
        };
        if better {
            best = Some((j, k));
        }
    }
    best.map(|(j, _)| j)
}

/// Unrolls a policy from the initial state until the policy yields no
/// target, the horizon runs out, or (for the greedy policies with no
/// time limit) the state repeats, which would loop forever since both
/// policies are functions of the health vector alone.
pub fn run_policy(instance: &Instance, policy: &PolicyKind) -> Result<Trajectory, PolicyError> {
    if let PolicyKind::FixedOrder(order) = policy {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != order.len() || order.iter().any(|&j| j < 1 || j > instance.n()) {
            return Err(PolicyError::BadOrder(order.clone()));
        }
    }

    let mut states = vec![HealthState::initial(instance)];
    let mut actions: Vec<NodeId> = Vec::new();
    let mut order_idx = 0usize;
    let mut seen: HashSet<Vec<Rat>> = HashSet::new();

    loop {
        let t = actions.len() as u64;
        if !instance.horizon().allows_action_at(t) {
            break;
        }
        let state = states.last().unwrap();
        let action = match policy {
            PolicyKind::HealthiestFirst => healthiest_first(instance, state),
            PolicyKind::LeastModifiedHealthFirst => least_modified_health_first(instance, state),
            PolicyKind::FixedOrder(order) => {
                while order_idx < order.len() && state.is_resolved(order[order_idx]) {
                    order_idx += 1;
                }
                if order_idx == order.len() {
                    None
                } else {
                    let node = order[order_idx];
                    if !feasible_set(instance, state).contains(&node) {
                        return Err(PolicyError::PrecedenceViolation { node, t });
                    }
                    Some(node)
                }
            }
        };
        let Some(action) = action else { break };
        if !instance.horizon().is_finite()
            && !matches!(policy, PolicyKind::FixedOrder(_))
            && !seen.insert(state.values.clone())
        {
            break;
        }
        let next = step(instance, state, action);
        actions.push(action);
        states.push(next);
    }
    Ok(Trajectory::new_unchecked(
        instance.clone(),
        actions,
        states,
    ))
}
