//! Closed-form completion times of a fixed non-jumping order under
//! homogeneous rates.
//!
//! With dec = n * inc and every health deficit an integer multiple of
//! inc, the health of the k-th node in the order when it is reached is
//!
//! ```text
//! E_1 = v0 of the first node
//! E_k = v0 of the k-th node - n * sum_{j=2..k} (1 - E_{j-1})
//! ```
//!
//! and it then takes exactly (1 - E_k) / inc targeting steps, always a
//! positive integer.

use serde::Serialize;
use thiserror::Error;

use crate::graphs::classify_regime;
use crate::instance::{Instance, NodeId};
use crate::rational::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("node at position {0} in the order fails before it is reached")]
    NodeFailsBeforeReached(usize),
    #[error("instance does not satisfy the homogeneous integer-rate structure")]
    AssumptionViolated,
    #[error("order is not executable: node {node} at position {position} has an in-neighbor outside the preceding prefix")]
    OrderViolatesPrecedence { node: NodeId, position: usize },
    #[error("order entries must be distinct valid node ids")]
    BadOrder,
}

/// Exact schedule of a non-jumping order: health when each node is
/// reached, per-node targeting durations, and the total step count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletionSchedule {
    pub order: Vec<NodeId>,
    pub reached_health: Vec<Rat>,
    pub durations: Vec<u64>,
    pub total: u64,
}

pub fn closed_form_completion_times(
    instance: &Instance,
    order: &[NodeId],
) -> Result<CompletionSchedule, ClosedFormError> {
    let Some(a1) = classify_regime(instance).assumption1 else {
        return Err(ClosedFormError::AssumptionViolated);
    };
    let mut seen = vec![false; instance.n()];
    for &j in order {
        if j < 1 || j > instance.n() || seen[j - 1] {
            return Err(ClosedFormError::BadOrder);
        }
        seen[j - 1] = true;
    }
    for (pos, &j) in order.iter().enumerate() {
        for w in instance.dag().in_neighbors(j) {
            if !order[..pos].contains(&w) {
                return Err(ClosedFormError::OrderViolatesPrecedence {
                    node: j,
                    position: pos + 1,
                });
            }
        }
    }

    let n_rat = Rat::from_int(a1.n.clone());
    let inc = &instance.params()[0].inc;
    let mut reached_health = Vec::with_capacity(order.len());
    let mut durations = Vec::with_capacity(order.len());
    let mut deficit_sum = Rat::zero();
    let mut total = 0u64;
    for (pos, &j) in order.iter().enumerate() {
        let reached = instance.node(j).v0.clone() - n_rat.clone() * deficit_sum.clone();
        if !reached.is_positive() {
            return Err(ClosedFormError::NodeFailsBeforeReached(pos + 1));
        }
        let deficit = Rat::one() - reached.clone();
        let steps = deficit
            .exact_div_int(inc)
            .expect("durations are integers under the homogeneous structure");
        let steps = u64::try_from(steps).expect("duration fits in u64");
        total += steps;
        deficit_sum += deficit;
        reached_health.push(reached);
        durations.push(steps);
    }
    Ok(CompletionSchedule {
        order: order.to_vec(),
        reached_health,
        durations,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::simulate;
    use crate::policies::{run_policy, PolicyKind};
    use crate::testutil::{example1, example2, rat, simple_instance};

    #[test]
    fn two_node_schedule_matches_hand_recursion() {
        let inst = simple_instance(&["4/5", "3/5"], "1/10", "1/10");
        let schedule = closed_form_completion_times(&inst, &[1, 2]).unwrap();
        assert_eq!(schedule.reached_health, vec![rat("4/5"), rat("2/5")]);
        assert_eq!(schedule.durations, vec![2, 6]);
        assert_eq!(schedule.total, 8);
    }

    #[test]
    fn schedule_total_matches_simulation() {
        let inst = example1();
        let schedule = closed_form_completion_times(&inst, &[2, 3]).unwrap();
        assert_eq!(schedule.durations, vec![7, 9]);
        let traj = run_policy(&inst, &PolicyKind::FixedOrder(vec![2, 3])).unwrap();
        assert_eq!(traj.actions().len() as u64, schedule.total);
        // exact replay of the expanded order agrees
        let mut actions = vec![2; 7];
        actions.extend(vec![3; 9]);
        let traj = simulate(&inst, &actions).unwrap();
        assert_eq!(traj.repaired_set(), [2, 3].into());
    }

    #[test]
    fn failing_node_is_reported_by_position() {
        let inst = simple_instance(&["3/5", "7/20"], "1/20", "1/20");
        // node 2 loses 8/20 while node 1 repairs; 7/20 - 8/20 < 0
        assert_eq!(
            closed_form_completion_times(&inst, &[1, 2]),
            Err(ClosedFormError::NodeFailsBeforeReached(2))
        );
    }

    #[test]
    fn single_node_order() {
        let inst = simple_instance(&["7/10", "1/2"], "1/10", "1/10");
        let schedule = closed_form_completion_times(&inst, &[1]).unwrap();
        assert_eq!(schedule.reached_health, vec![rat("7/10")]);
        assert_eq!(schedule.durations, vec![3]);
        assert_eq!(schedule.total, 3);
    }

    #[test]
    fn heterogeneous_rates_are_rejected() {
        assert_eq!(
            closed_form_completion_times(&example2(), &[1]),
            Err(ClosedFormError::AssumptionViolated)
        );
    }

    #[test]
    fn blocked_order_is_rejected() {
        let inst = example1();
        assert_eq!(
            closed_form_completion_times(&inst, &[3, 2]),
            Err(ClosedFormError::OrderViolatesPrecedence {
                node: 3,
                position: 1
            })
        );
    }
}
