//! Exact optimum over ALL feasible per-step action sequences, including
//! jumping ones.
//!
//! The deterministic transition graph reachable from the initial state
//! is enumerated explicitly (health vectors, plus the time-step when the
//! horizon is finite). Repair events strictly grow the absorbed set of
//! fully repaired nodes, so every cycle in the graph repairs nothing;
//! strongly connected components therefore share one optimal value and
//! the maximum-reward path is a longest path on the condensation.

use std::collections::{HashMap, VecDeque};

use petgraph::graph::{DiGraph, NodeIndex};
use thiserror::Error;

use crate::dynamics::{actionable_set, simulate, step, HealthState};
use crate::instance::{Instance, NodeId};
use crate::rational::Rat;

use super::{SearchStats, SolveResult};

/// Default cap on the number of expanded states.
pub const DEFAULT_STATE_CAP: usize = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("state budget exceeded: more than {cap} distinct states reachable")]
    StateBudgetExceeded { cap: usize },
}

type Key = (Vec<Rat>, Option<u64>);

struct Edge {
    action: NodeId,
    gain: usize,
    to: NodeIndex,
}

/// Exact maximum over every feasible per-step action sequence. Solvers
/// draw targets from the actionable set only; targeting a resolved node
/// is a pure no-op and never helps.
pub fn solve_exhaustive(instance: &Instance, state_cap: usize) -> Result<SolveResult, SolveError> {
    let finite = instance.horizon().is_finite();
    let initial = HealthState::initial(instance);

    let mut graph: DiGraph<(), ()> = DiGraph::new();
    let mut index: HashMap<Key, NodeIndex> = HashMap::new();
    let mut states: Vec<HealthState> = Vec::new();
    let mut out_edges: Vec<Vec<Edge>> = Vec::new();
    let mut memo_hits = 0usize;

    let root = graph.add_node(());
    index.insert((initial.values.clone(), finite.then_some(0)), root);
    states.push(initial.clone());
    out_edges.push(Vec::new());

    let mut frontier = vec![root];
    while let Some(u) = frontier.pop() {
        let state = states[u.index()].clone();
        if !instance.horizon().allows_action_at(state.t) {
            continue;
        }
        // actionable_set iterates ascending, keeping edges sorted by action
        for action in actionable_set(instance, &state) {
            let next = step(instance, &state, action);
            let gain = usize::from(next.value(action).is_one() && !state.value(action).is_one());
            let key: Key = (next.values.clone(), finite.then_some(next.t));
            let v = match index.get(&key) {
                Some(&v) => {
                    memo_hits += 1;
                    v
                }
                None => {
                    if states.len() >= state_cap {
                        return Err(SolveError::StateBudgetExceeded { cap: state_cap });
                    }
                    let v = graph.add_node(());
                    index.insert(key, v);
                    states.push(next);
                    out_edges.push(Vec::new());
                    frontier.push(v);
                    v
                }
            };
            graph.add_edge(u, v, ());
            out_edges[u.index()].push(Edge {
                action,
                gain,
                to: v,
            });
        }
    }

    // tarjan_scc yields components in reverse topological order, so every
    // successor component is valued before its predecessors
    let sccs = petgraph::algo::tarjan_scc(&graph);
    let mut scc_of = vec![usize::MAX; graph.node_count()];
    for (i, scc) in sccs.iter().enumerate() {
        for &n in scc {
            scc_of[n.index()] = i;
        }
    }
    let mut scc_value = vec![0usize; sccs.len()];
    for (i, scc) in sccs.iter().enumerate() {
        let mut best = 0usize;
        for &u in scc {
            for e in &out_edges[u.index()] {
                let j = scc_of[e.to.index()];
                if j == i {
                    debug_assert_eq!(e.gain, 0, "a repairing edge cannot sit inside a cycle");
                    continue;
                }
                best = best.max(e.gain + scc_value[j]);
            }
        }
        scc_value[i] = best;
    }
    let value = |u: NodeIndex| scc_value[scc_of[u.index()]];

    // distance-to-done over value-preserving edges, for a finite witness
    let mut reverse_optimal: Vec<Vec<usize>> = vec![Vec::new(); graph.node_count()];
    for u in graph.node_indices() {
        for e in &out_edges[u.index()] {
            if e.gain + value(e.to) == value(u) {
                reverse_optimal[e.to.index()].push(u.index());
            }
        }
    }
    let mut dist = vec![usize::MAX; graph.node_count()];
    let mut queue: VecDeque<usize> = graph
        .node_indices()
        .filter(|&u| value(u) == 0)
        .map(|u| {
            dist[u.index()] = 0;
            u.index()
        })
        .collect();
    while let Some(v) = queue.pop_front() {
        for &u in &reverse_optimal[v] {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }

    let reward = value(root);
    let mut witness: Vec<NodeId> = Vec::new();
    let mut cur = root;
    while value(cur) > 0 {
        debug_assert!(dist[cur.index()] != usize::MAX);
        let e = out_edges[cur.index()]
            .iter()
            .find(|e| e.gain + value(e.to) == value(cur) && dist[e.to.index()] + 1 == dist[cur.index()])
            .expect("an optimal shortest continuation exists");
        witness.push(e.action);
        cur = e.to;
    }

    let repaired = if witness.is_empty() {
        Default::default()
    } else {
        let traj = simulate(instance, &witness).expect("witness respects constraints");
        debug_assert_eq!(traj.repaired_set().len(), reward);
        traj.repaired_set()
    };
    Ok(SolveResult {
        reward,
        witness,
        repaired,
        stats: SearchStats {
            states_expanded: states.len(),
            memo_hits,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::reward;
    use crate::solver::solve_nonjumping;
    use crate::testutil::{example1, example2, example3, simple_instance};

    #[test]
    fn example1_matches_nonjumping_optimum() {
        let result = solve_exhaustive(&example1(), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(result.reward, 2);
        assert_eq!(result.reward, solve_nonjumping(&example1()).reward);
    }

    #[test]
    fn example2_jumping_cannot_beat_two() {
        let result = solve_exhaustive(&example2(), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(result.reward, 2);
        assert_eq!(result.repaired, [2, 3].into());
    }

    #[test]
    fn example3_optimum_is_one() {
        let result = solve_exhaustive(&example3(), DEFAULT_STATE_CAP).unwrap();
        assert_eq!(result.reward, 1);
    }

    #[test]
    fn witness_replays_to_claimed_reward() {
        for inst in [example1(), example2(), example3()] {
            let result = solve_exhaustive(&inst, DEFAULT_STATE_CAP).unwrap();
            if result.reward > 0 {
                let traj = simulate(&inst, &result.witness).unwrap();
                assert_eq!(reward(&traj), result.reward);
            }
        }
    }

    #[test]
    fn state_cap_is_enforced() {
        assert_eq!(
            solve_exhaustive(&example1(), 3),
            Err(SolveError::StateBudgetExceeded { cap: 3 })
        );
    }

    #[test]
    fn cyclic_state_space_terminates() {
        // inc = dec lets target-1-then-2 return to the initial healths
        let inst = simple_instance(&["3/5", "1/2"], "1/10", "1/10");
        let result = solve_exhaustive(&inst, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(result.reward, 2);
    }
}
