//! Rewriting a single-jump repair-all sequence into a non-jumping one,
//! and the iterated stripper built on top of it.

use thiserror::Error;

use crate::dynamics::{detect_jumps, reward, simulate, Trajectory};
use crate::graphs::classify_regime;
use crate::instance::{Instance, NodeId};
use crate::policies::{run_policy, PolicyKind};

use super::solve_nonjumping;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Lemma1Error {
    #[error("trajectory must contain exactly one jump, found {0}")]
    NotSingleJump(usize),
    #[error("jump structure does not match the single-detour shape: {0}")]
    ShapeMismatch(String),
    #[error("precondition failed: {0}")]
    LemmaPreconditionFailed(String),
}

/// Per-node targeting durations in the original sequence A and the
/// rewritten sequence B, with the proven lower-bound gap: the claim is
/// `t_a >= t_b + bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DurationBound {
    pub node: NodeId,
    pub t_a: u64,
    pub t_b: u64,
    pub bound: u64,
}

/// Output of the single-jump rewrite.
#[derive(Debug, Clone)]
pub struct JumpRemoval {
    pub b_traj: Trajectory,
    pub comparisons: Vec<DurationBound>,
}

/// Maximal runs of identical actions: `(node, length)` pairs.
fn runs(actions: &[NodeId]) -> Vec<(NodeId, u64)> {
    let mut out: Vec<(NodeId, u64)> = Vec::new();
    for &a in actions {
        match out.last_mut() {
            Some((node, len)) if *node == a => *len += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

/// Rewrites a sequence that partially repairs a first node, detours to
/// repair a block of other nodes, returns to finish the first node and
/// then completes the rest, into the non-jumping sequence that runs the
/// detour block first. Requires dec >= inc per node and that the input
/// repairs every node.
pub fn lemma1_transform(
    instance: &Instance,
    traj: &Trajectory,
) -> Result<JumpRemoval, Lemma1Error> {
    if !classify_regime(instance).dominant_decay {
        return Err(Lemma1Error::LemmaPreconditionFailed(
            "deterioration rates must dominate repair rates".into(),
        ));
    }
    let jumps = detect_jumps(traj);
    if jumps.len() != 1 {
        return Err(Lemma1Error::NotSingleJump(jumps.len()));
    }
    if traj.repaired_set().len() != instance.n() {
        return Err(Lemma1Error::LemmaPreconditionFailed(
            "input sequence must permanently repair every node".into(),
        ));
    }
    let jump_at = jumps[0] as usize;
    let first = traj.actions()[0];
    if traj.actions()[..jump_at].iter().any(|&a| a != first) {
        return Err(Lemma1Error::ShapeMismatch(
            "pre-jump prefix must target a single node".into(),
        ));
    }
    let pre_jump_len = jump_at as u64;

    // after the jump the sequence is non-jumping: a block of full runs
    // ending with the return to the first node, then the tail
    let post_runs = runs(&traj.actions()[jump_at..]);
    let return_pos = match post_runs.iter().position(|&(node, _)| node == first) {
        Some(pos) if pos >= 1 => pos,
        _ => {
            return Err(Lemma1Error::ShapeMismatch(
                "first node is never returned to after the jump".into(),
            ))
        }
    };
    if post_runs[return_pos + 1..].iter().any(|&(n, _)| n == first) {
        return Err(Lemma1Error::ShapeMismatch(
            "first node is targeted more than once after the jump".into(),
        ));
    }
    let mut ordered: Vec<(NodeId, u64)> = Vec::with_capacity(instance.n());
    ordered.push((first, pre_jump_len + post_runs[return_pos].1));
    ordered.extend(post_runs[..return_pos].iter().copied());
    ordered.extend(post_runs[return_pos + 1..].iter().copied());
    let detour_len = return_pos; // nodes i_2..i_k, so k = detour_len + 1
    {
        let mut nodes: Vec<NodeId> = ordered.iter().map(|&(n, _)| n).collect();
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.len() != instance.n() {
            return Err(Lemma1Error::ShapeMismatch(
                "each node must be targeted in exactly one run".into(),
            ));
        }
    }

    // sequence B: detour block, the first node, then the tail
    let b_order: Vec<NodeId> = post_runs[..return_pos]
        .iter()
        .map(|&(n, _)| n)
        .chain(std::iter::once(first))
        .chain(post_runs[return_pos + 1..].iter().map(|&(n, _)| n))
        .collect();
    let b_traj = run_policy(instance, &PolicyKind::FixedOrder(b_order)).map_err(|e| {
        Lemma1Error::ShapeMismatch(format!("rewritten order is not executable: {e}"))
    })?;
    if b_traj.repaired_set().len() != instance.n() {
        return Err(Lemma1Error::LemmaPreconditionFailed(
            "rewritten sequence fails to repair every node".into(),
        ));
    }
    let b_runs = runs(b_traj.actions());
    let b_duration = |node: NodeId| -> u64 {
        b_runs
            .iter()
            .filter(|&&(n, _)| n == node)
            .map(|&(_, len)| len)
            .sum()
    };

    // position j of each node in A's ordering i_1, i_2, ..., i_N
    let k = detour_len + 1;
    let comparisons = ordered
        .iter()
        .enumerate()
        .map(|(idx, &(node, t_a))| {
            let j = if idx == 0 { 1 } else { idx + 1 };
            let bound = match j {
                1 => (1u64 << (k - 1)) - 2,
                j if j <= k => 1u64 << (j - 2),
                j => (1u64 << (j - 1)) - (1u64 << (j - k)),
            };
            DurationBound {
                node,
                t_a,
                t_b: b_duration(node),
                bound: bound * pre_jump_len,
            }
        })
        .collect();
    Ok(JumpRemoval {
        b_traj,
        comparisons,
    })
}

/// A jump-free trajectory whose reward is at least that of the input.
#[derive(Debug, Clone)]
pub struct StripResult {
    pub trajectory: Trajectory,
    /// True when the run-order rewrite could not preserve the reward and
    /// the non-jumping solver's witness was substituted instead.
    pub used_fallback: bool,
}

/// Removes every jump from a trajectory. The run-order rewrite (repair
/// the nodes in their original completion order, dropping abandoned
/// partial runs) is the fixed point of removing one detour at a time;
/// when verification shows it losing reward, the non-jumping optimum's
/// witness is returned instead.
pub fn strip_all_jumps(instance: &Instance, traj: &Trajectory) -> StripResult {
    if detect_jumps(traj).is_empty() {
        return StripResult {
            trajectory: traj.clone(),
            used_fallback: false,
        };
    }
    let target = reward(traj);

    // nodes in the order they first reach full health
    let mut completion_order: Vec<NodeId> = Vec::new();
    for state in traj.states() {
        for j in instance.node_ids() {
            if state.value(j).is_one() && !completion_order.contains(&j) {
                completion_order.push(j);
            }
        }
    }
    if let Ok(candidate) = run_policy(instance, &PolicyKind::FixedOrder(completion_order)) {
        if reward(&candidate) >= target {
            debug_assert!(detect_jumps(&candidate).is_empty());
            return StripResult {
                trajectory: candidate,
                used_fallback: false,
            };
        }
    }

    let solved = solve_nonjumping(instance);
    debug_assert!(solved.reward >= target);
    let trajectory = if solved.witness.is_empty() {
        run_policy(instance, &PolicyKind::FixedOrder(Vec::new()))
            .expect("empty order always runs")
    } else {
        simulate(instance, &solved.witness).expect("solver witness replays")
    };
    StripResult {
        trajectory,
        used_fallback: true,
    }
}
