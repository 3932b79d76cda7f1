//! Polynomial reduction from Clique to the infinite-horizon decision
//! problem over non-jumping sequences, plus brute-force oracles for both
//! sides.
//!
//! For a graph with `s` vertices and `q` edges and a target clique size
//! `p`, the constructed instance has one node per vertex, one per edge,
//! and a root that precedes everything. Rates are tuned so that the
//! `i`-th node repaired in a fresh non-jumping sequence takes exactly
//! `2^i` targeting steps, and the decision threshold is `N - z` with
//! `z = q - p(p-1)/2`.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::{Horizon, Instance, NodeId, NodeParams, PrecedenceDag};
use crate::rational::Rat;
use crate::solver::solve_nonjumping;

/// Undirected graph with vertices `1..=s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndirectedGraph {
    pub s: usize,
    pub edges: Vec<(usize, usize)>,
}

impl UndirectedGraph {
    pub fn new(s: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        // store endpoints sorted, deduplicated
        let edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .sorted()
            .dedup()
            .collect();
        UndirectedGraph { s, edges }
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }
}

/// Role of each node in the constructed instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NodeRole {
    Root,
    /// Corresponds to a vertex of the source graph.
    VNode(usize),
    /// Corresponds to an edge of the source graph.
    ENode(usize, usize),
}

/// Constructed decision-problem instance: `N = s + q + 1` nodes, an
/// integer threshold `z`, and the role of every node.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub instance: Instance,
    pub z: i64,
    pub roles: BTreeMap<NodeId, NodeRole>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("clique size p = {p} must satisfy 1 <= p <= {s}")]
    BadP { p: usize, s: usize },
    #[error("edge ({0},{1}) references a vertex outside 1..={2}")]
    BadEdge(usize, usize, usize),
}

/// Parameters with v0/dec = 2*(2^exponent - 1) + 1 and
/// inc = dec = 1 / (2^(exponent+1) + 1).
fn gadget_params(id: NodeId, exponent: u32) -> NodeParams {
    let denom: BigInt = BigInt::from(2u32).pow(exponent + 1) + 1;
    let rate = Rat::new(1, denom.clone());
    NodeParams {
        id,
        v0: Rat::new(denom.clone() - 2, denom),
        inc: rate.clone(),
        dec: rate,
    }
}

/// Builds the decision instance for "does the graph have a p-clique".
/// Node ids: 1 is the root, `1 + i` is the node of vertex `i`, and edge
/// nodes follow in the sorted edge order.
pub fn reduce_clique(graph: &UndirectedGraph, p: usize) -> Result<ReductionOutput, ReductionError> {
    if p < 1 || p > graph.s {
        return Err(ReductionError::BadP { p, s: graph.s });
    }
    for &(a, b) in &graph.edges {
        if a < 1 || b < 1 || a > graph.s || b > graph.s || a == b {
            return Err(ReductionError::BadEdge(a, b, graph.s));
        }
    }
    let s = graph.s;
    let q = graph.q();
    let v_exponent = (s + q) as u32;
    let e_exponent = (p * (p + 1) / 2) as u32;

    let mut params = Vec::with_capacity(s + q + 1);
    let mut roles = BTreeMap::new();
    params.push(gadget_params(1, v_exponent));
    roles.insert(1, NodeRole::Root);
    for vertex in 1..=s {
        params.push(gadget_params(1 + vertex, v_exponent));
        roles.insert(1 + vertex, NodeRole::VNode(vertex));
    }
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    for (i, &(a, b)) in graph.edges.iter().enumerate() {
        let id = 1 + s + i + 1;
        params.push(gadget_params(id, e_exponent));
        roles.insert(id, NodeRole::ENode(a, b));
        edges.push((1 + a, id));
        edges.push((1 + b, id));
    }
    // the root precedes every other node
    let n = params.len();
    for id in 2..=n {
        edges.push((1, id));
    }
    let instance = Instance::new(params, PrecedenceDag::new(n, edges), Horizon::Infinite)
        .expect("constructed instance is valid");
    let z = q as i64 - (p * (p - 1) / 2) as i64;
    Ok(ReductionOutput { instance, z, roles })
}

/// Decides the constructed instance: is there a non-jumping sequence
/// repairing at least `N - z` nodes? Non-jumping search is exact here
/// since the decision problem ranges over non-jumping sequences by
/// definition.
pub fn decide_ord(red: &ReductionOutput) -> bool {
    let n = red.instance.n() as i64;
    let threshold = n - red.z;
    if threshold > n {
        return false;
    }
    let threshold = threshold.max(0) as usize;
    solve_nonjumping(&red.instance).reward >= threshold
}

/// Subset-enumeration oracle: does the graph contain `p` pairwise
/// adjacent vertices? Intended for small graphs only.
pub fn brute_force_clique(graph: &UndirectedGraph, p: usize) -> bool {
    if p <= 1 {
        return graph.s >= p;
    }
    (1..=graph.s)
        .combinations(p)
        .any(|subset| {
            subset
                .iter()
                .tuple_combinations()
                .all(|(&a, &b)| graph.has_edge(a, b))
        })
}
