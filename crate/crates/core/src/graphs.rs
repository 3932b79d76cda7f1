//! Structural analysis of the precedence DAG and classification of
//! instances into the parameter regimes the policy guarantees apply to.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::instance::{Instance, NodeId, PrecedenceDag};
use crate::rational::Rat;

/// Iterative source-peeling of the DAG: level 1 holds the nodes with no
/// incoming edges, level i+1 the nodes that become sources once levels
/// <= i are deleted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelDecomposition {
    pub levels: Vec<BTreeSet<NodeId>>,
}

impl LevelDecomposition {
    /// Level index (1-based) of a node.
    pub fn level_of(&self, id: NodeId) -> Option<usize> {
        self.levels.iter().position(|l| l.contains(&id)).map(|i| i + 1)
    }
}

pub fn levels(dag: &PrecedenceDag) -> LevelDecomposition {
    let mut remaining: BTreeSet<NodeId> = (1..=dag.n()).collect();
    let mut levels = Vec::new();
    while !remaining.is_empty() {
        let level: BTreeSet<NodeId> = remaining
            .iter()
            .copied()
            .filter(|&k| !dag.in_neighbors(k).any(|j| remaining.contains(&j)))
            .collect();
        assert!(!level.is_empty(), "dag must be acyclic");
        for v in &level {
            remaining.remove(v);
        }
        levels.push(level);
    }
    LevelDecomposition { levels }
}

/// True iff every node in level i+1 has incoming edges from all nodes in
/// level i and there are no other edges. An edgeless graph (one level)
/// counts: the inter-level condition is vacuous.
pub fn is_complete_series(dag: &PrecedenceDag) -> bool {
    let decomposition = levels(dag);
    let mut required = 0usize;
    for pair in decomposition.levels.windows(2) {
        required += pair[0].len() * pair[1].len();
        for &j in &pair[0] {
            for &k in &pair[1] {
                if !dag.has_edge(j, k) {
                    return false;
                }
            }
        }
    }
    dag.edge_count() == required
}

/// A rooted tree inside a forest decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootedTree {
    pub root: NodeId,
    pub nodes: BTreeSet<NodeId>,
}

/// Forest decomposition of the DAG together with the largest tree size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Forest {
    pub trees: Vec<RootedTree>,
    pub k: usize,
}

/// Decomposes the DAG into disjoint rooted trees if every node has at
/// most one in-neighbor; returns `None` otherwise. With in-degree <= 1
/// and acyclicity the components are automatically trees.
pub fn as_disjoint_trees(dag: &PrecedenceDag) -> Option<Forest> {
    let n = dag.n();
    if (1..=n).any(|k| dag.in_degree(k) > 1) {
        return None;
    }
    // union-find over undirected components
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (j, k) in dag.edges() {
        let (a, b) = (find(&mut parent, j - 1), find(&mut parent, k - 1));
        if a != b {
            parent[a] = b;
        }
    }
    let mut trees: Vec<RootedTree> = Vec::new();
    let mut component_of: Vec<Option<usize>> = vec![None; n];
    for id in 1..=n {
        let rep = find(&mut parent, id - 1);
        let idx = match component_of[rep] {
            Some(idx) => idx,
            None => {
                trees.push(RootedTree {
                    root: 0,
                    nodes: BTreeSet::new(),
                });
                component_of[rep] = Some(trees.len() - 1);
                trees.len() - 1
            }
        };
        trees[idx].nodes.insert(id);
        if dag.in_degree(id) == 0 {
            trees[idx].root = id;
        }
    }
    let k = trees.iter().map(|t| t.nodes.len()).max().unwrap_or(1);
    Some(Forest { trees, k })
}

fn bigint_string<S: serde::Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn bigint_vec_string<S: serde::Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

/// Homogeneous-rate structure: dec = n * inc and 1 - v0^j = m_j * inc
/// with positive integers, which guarantees no node overshoots 1 partway
/// through a time-step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assumption1 {
    #[serde(serialize_with = "bigint_string")]
    pub n: BigInt,
    #[serde(serialize_with = "bigint_vec_string")]
    pub m: Vec<BigInt>,
}

/// Which rate regime an instance falls into.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegimeReport {
    /// dec_j >= inc_j for every node.
    pub dominant_decay: bool,
    /// inc_j > (N-1) * dec_j and inc_j > sum of the other nodes' dec,
    /// for every node.
    pub dominant_repair: bool,
    pub assumption1: Option<Assumption1>,
}

pub fn classify_regime(instance: &Instance) -> RegimeReport {
    let dominant_decay = instance
        .params()
        .iter()
        .all(|p| p.dec >= p.inc);
    let n_minus_1 = Rat::from_int(instance.n() as i64 - 1);
    let dec_total: Rat = instance
        .params()
        .iter()
        .fold(Rat::zero(), |acc, p| acc + p.dec.clone());
    let dominant_repair = instance.params().iter().all(|p| {
        p.inc > n_minus_1.clone() * p.dec.clone() && p.inc > dec_total.clone() - p.dec.clone()
    });
    let assumption1 = assumption1_of(instance);
    RegimeReport {
        dominant_decay,
        dominant_repair,
        assumption1,
    }
}

fn assumption1_of(instance: &Instance) -> Option<Assumption1> {
    let first = &instance.params()[0];
    let inc = &first.inc;
    let dec = &first.dec;
    let homogeneous = instance
        .params()
        .iter()
        .all(|p| &p.inc == inc && &p.dec == dec);
    if !homogeneous {
        return None;
    }
    let n = dec.exact_div_int(inc)?;
    if n < BigInt::from(1) {
        return None;
    }
    let mut m = Vec::with_capacity(instance.n());
    for p in instance.params() {
        let mj = (Rat::one() - p.v0.clone()).exact_div_int(inc)?;
        if mj < BigInt::from(1) {
            return None;
        }
        m.push(mj);
    }
    Some(Assumption1 { n, m })
}
