//! Problem instances: node parameters, the precedence DAG, and the
//! repair-time budget.
//!
//! The canonical interchange format is JSON:
//!
//! ```json
//! { "nodes": [ { "id": 1, "v0": "3/5", "inc": "1/10", "dec": "1/10" } ],
//!   "edges": [ [2, 3] ],
//!   "T": 10 }
//! ```
//!
//! `"T"` is either a nonnegative integer or the literal `"inf"`. Rationals
//! are accepted as `"p/q"` or decimal strings, both parsed exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::rational::Rat;

/// Node identifier, 1-based (`1..=N`).
pub type NodeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("precedence edges contain a cycle")]
    CycleDetected,
    #[error("node {id}: rate {name} = {value} is outside (0,1)")]
    RateOutOfRange {
        id: NodeId,
        name: &'static str,
        value: Rat,
    },
    #[error("node {id}: initial health {value} is outside (0,1)")]
    HealthOutOfRange { id: NodeId, value: Rat },
    #[error("instance has {0} nodes, need at least 2")]
    BadNodeCount(usize),
    #[error("edge ({0},{1}) references a node outside 1..={2}")]
    DanglingEdge(NodeId, NodeId, usize),
    #[error("node ids must be exactly 1..=N without repeats: {0}")]
    BadNodeIds(String),
}

/// Per-node parameters: initial health and the two rates, all in (0,1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeParams {
    pub id: NodeId,
    pub v0: Rat,
    pub inc: Rat,
    pub dec: Rat,
}

/// Directed acyclic graph of precedence constraints over nodes `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecedenceDag {
    n: usize,
    edges: BTreeSet<(NodeId, NodeId)>,
}

impl PrecedenceDag {
    /// Builds a DAG; duplicate edges collapse. Acyclicity is checked by
    /// `validate_instance`, not here.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> Self {
        PrecedenceDag {
            n,
            edges: edges.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, from: NodeId, to: NodeId) -> bool {
        self.edges.contains(&(from, to))
    }

    /// In-neighbor set of `k` (nodes that must reach full health before
    /// `k` may be targeted).
    pub fn in_neighbors(&self, k: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        self.edges
            .iter()
            .filter(move |(_, to)| *to == k)
            .map(|(from, _)| *from)
    }

    pub fn in_degree(&self, k: NodeId) -> usize {
        self.in_neighbors(k).count()
    }

    /// True iff the edge set admits a topological order over `1..=n`.
    pub fn is_acyclic(&self) -> bool {
        let mut in_deg: BTreeMap<NodeId, usize> = (1..=self.n).map(|v| (v, 0)).collect();
        for (_, to) in &self.edges {
            *in_deg.entry(*to).or_insert(0) += 1;
        }
        let mut queue: Vec<NodeId> = in_deg
            .iter()
            .filter(|(_, d)| **d == 0)
            .map(|(v, _)| *v)
            .collect();
        let mut seen = 0usize;
        while let Some(v) = queue.pop() {
            seen += 1;
            for (from, to) in &self.edges {
                if *from == v {
                    let d = in_deg.get_mut(to).unwrap();
                    *d -= 1;
                    if *d == 0 {
                        queue.push(*to);
                    }
                }
            }
        }
        seen == self.n
    }
}

/// Largest time-step index available for repair actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Horizon {
    Finite(u64),
    Infinite,
}

impl Horizon {
    pub fn is_finite(&self) -> bool {
        matches!(self, Horizon::Finite(_))
    }

    /// Whether an action at time-step `t` is within the budget.
    pub fn allows_action_at(&self, t: u64) -> bool {
        match self {
            Horizon::Finite(limit) => t <= *limit,
            Horizon::Infinite => true,
        }
    }
}

impl fmt::Display for Horizon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Horizon::Finite(t) => write!(f, "{t}"),
            Horizon::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Horizon {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Horizon::Finite(t) => serializer.serialize_u64(*t),
            Horizon::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Horizon {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(t) => Ok(Horizon::Finite(t)),
            Raw::Str(s) if s == "inf" => Ok(Horizon::Infinite),
            Raw::Str(s) => Err(D::Error::custom(format!(
                "horizon must be an integer or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// A complete problem instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    params: Vec<NodeParams>,
    dag: PrecedenceDag,
    horizon: Horizon,
}

impl Instance {
    /// Builds and validates an instance in one go.
    pub fn new(
        params: Vec<NodeParams>,
        dag: PrecedenceDag,
        horizon: Horizon,
    ) -> Result<Self, ValidationError> {
        validate_instance(Instance {
            params,
            dag,
            horizon,
        })
    }

    pub fn n(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[NodeParams] {
        &self.params
    }

    /// Parameters of node `id` (1-based).
    pub fn node(&self, id: NodeId) -> &NodeParams {
        &self.params[id - 1]
    }

    pub fn dag(&self) -> &PrecedenceDag {
        &self.dag
    }

    pub fn horizon(&self) -> Horizon {
        self.horizon
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> {
        1..=self.n()
    }

    /// Same instance with a different time budget.
    pub fn with_horizon(&self, horizon: Horizon) -> Instance {
        Instance {
            params: self.params.clone(),
            dag: self.dag.clone(),
            horizon,
        }
    }
}

/// Checks every type invariant and returns the instance unchanged.
pub fn validate_instance(raw: Instance) -> Result<Instance, ValidationError> {
    let n = raw.params.len();
    if n < 2 {
        return Err(ValidationError::BadNodeCount(n));
    }
    let mut ids: Vec<NodeId> = raw.params.iter().map(|p| p.id).collect();
    ids.sort_unstable();
    if ids != (1..=n).collect::<Vec<_>>() {
        return Err(ValidationError::BadNodeIds(format!("{ids:?}")));
    }
    if raw.dag.n != n {
        return Err(ValidationError::BadNodeIds(format!(
            "dag has {} nodes, params have {n}",
            raw.dag.n
        )));
    }
    let zero = Rat::zero();
    let one = Rat::one();
    let open_unit = |x: &Rat| *x > zero && *x < one;
    for p in &raw.params {
        if !open_unit(&p.v0) {
            return Err(ValidationError::HealthOutOfRange {
                id: p.id,
                value: p.v0.clone(),
            });
        }
        for (name, value) in [("inc", &p.inc), ("dec", &p.dec)] {
            if !open_unit(value) {
                return Err(ValidationError::RateOutOfRange {
                    id: p.id,
                    name,
                    value: value.clone(),
                });
            }
        }
    }
    for (from, to) in raw.dag.edges() {
        if from < 1 || from > n || to < 1 || to > n {
            return Err(ValidationError::DanglingEdge(from, to, n));
        }
        if from == to {
            return Err(ValidationError::CycleDetected);
        }
    }
    if !raw.dag.is_acyclic() {
        return Err(ValidationError::CycleDetected);
    }
    // Params are kept sorted by id so node(id) indexes directly.
    let mut inst = raw;
    inst.params.sort_by_key(|p| p.id);
    Ok(inst)
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    nodes: Vec<NodeParams>,
    edges: Vec<(NodeId, NodeId)>,
    #[serde(rename = "T")]
    horizon: Horizon,
}

impl Serialize for Instance {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        InstanceJson {
            nodes: self.params.clone(),
            edges: self.dag.edges().collect(),
            horizon: self.horizon,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Instance {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = InstanceJson::deserialize(deserializer)?;
        let n = raw.nodes.len();
        Instance::new(raw.nodes, PrecedenceDag::new(n, raw.edges), raw.horizon)
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example1, rat};

    #[test]
    fn example1_instance_is_accepted() {
        let inst = example1();
        assert_eq!(inst.n(), 3);
        assert_eq!(inst.node(1).v0, rat("3/5"));
        assert_eq!(inst.node(2).v0, rat("3/10"));
        assert_eq!(inst.node(3).v0, rat("4/5"));
        assert!(inst.dag().has_edge(2, 3));
    }

    #[test]
    fn two_cycle_is_rejected() {
        let params = vec![
            NodeParams {
                id: 1,
                v0: rat("1/2"),
                inc: rat("1/10"),
                dec: rat("1/10"),
            },
            NodeParams {
                id: 2,
                v0: rat("1/2"),
                inc: rat("1/10"),
                dec: rat("1/10"),
            },
        ];
        let dag = PrecedenceDag::new(2, [(1, 2), (2, 1)]);
        assert_eq!(
            Instance::new(params, dag, Horizon::Infinite),
            Err(ValidationError::CycleDetected)
        );
    }

    #[test]
    fn full_health_start_is_rejected() {
        let params = vec![
            NodeParams {
                id: 1,
                v0: rat("1"),
                inc: rat("1/10"),
                dec: rat("1/10"),
            },
            NodeParams {
                id: 2,
                v0: rat("1/2"),
                inc: rat("1/10"),
                dec: rat("1/10"),
            },
        ];
        let dag = PrecedenceDag::new(2, []);
        assert!(matches!(
            Instance::new(params, dag, Horizon::Infinite),
            Err(ValidationError::HealthOutOfRange { id: 1, .. })
        ));
    }

    #[test]
    fn single_node_is_rejected() {
        let params = vec![NodeParams {
            id: 1,
            v0: rat("1/2"),
            inc: rat("1/10"),
            dec: rat("1/10"),
        }];
        let dag = PrecedenceDag::new(1, []);
        assert_eq!(
            Instance::new(params, dag, Horizon::Infinite),
            Err(ValidationError::BadNodeCount(1))
        );
    }

    #[test]
    fn dangling_edge_is_rejected() {
        let params = vec![
            NodeParams {
                id: 1,
                v0: rat("1/2"),
                inc: rat("1/10"),
                dec: rat("1/10"),
            },
            NodeParams {
                id: 2,
                v0: rat("1/2"),
                inc: rat("1/10"),
                dec: rat("1/10"),
            },
        ];
        let dag = PrecedenceDag::new(2, [(1, 5)]);
        assert_eq!(
            Instance::new(params, dag, Horizon::Infinite),
            Err(ValidationError::DanglingEdge(1, 5, 2))
        );
    }

    #[test]
    fn json_roundtrip_is_bit_exact() {
        let inst = example1();
        let json = serde_json::to_string(&inst).unwrap();
        let back: Instance = serde_json::from_str(&json).unwrap();
        assert_eq!(back, inst);
        // decimal and p/q forms parse to the same instance
        let alt = r#"{"nodes":[
            {"id":1,"v0":"0.6","inc":"0.1","dec":"0.1"},
            {"id":2,"v0":"0.3","inc":"0.1","dec":"0.1"},
            {"id":3,"v0":"0.8","inc":"0.1","dec":"0.1"}],
            "edges":[[2,3]],"T":"inf"}"#;
        let alt: Instance = serde_json::from_str(alt).unwrap();
        assert_eq!(alt, inst);
    }

    #[test]
    fn finite_horizon_parses_from_number() {
        let json = r#"{"nodes":[
            {"id":1,"v0":"1/2","inc":"1/10","dec":"1/10"},
            {"id":2,"v0":"1/2","inc":"1/10","dec":"1/10"}],
            "edges":[],"T":10}"#;
        let inst: Instance = serde_json::from_str(json).unwrap();
        assert_eq!(inst.horizon(), Horizon::Finite(10));
    }
}
