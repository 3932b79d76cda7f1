//! Seeded random instance generation per parameter regime, and batch
//! verification suites for the optimality and approximation guarantees.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dynamics::{detect_jumps, reward, simulate, step, HealthState, Trajectory};
use crate::graphs::{as_disjoint_trees, classify_regime, is_complete_series};
use crate::instance::{Horizon, Instance, NodeId, NodeParams, PrecedenceDag};
use crate::policies::{run_policy, PolicyError, PolicyKind};
use crate::rational::Rat;
use crate::reduction::{brute_force_clique, decide_ord, reduce_clique, UndirectedGraph};
use crate::solver::{
    lemma1_transform, solve_exhaustive, solve_nonjumping, SolveError, DEFAULT_STATE_CAP,
};

/// Shape of the generated precedence graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    GeneralDag,
    /// Disjoint rooted trees, each with at most `max_k` nodes.
    Forest { max_k: usize },
    CompleteSeries,
    Edgeless,
}

/// Rate regime the generated instance must fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Homogeneous rates with dec an integer multiple of inc and every
    /// health deficit an integer multiple of inc.
    DominantDecayAssumption1,
    /// inc_j strictly above both (N-1) dec_j and the sum of the other
    /// nodes' deterioration rates.
    DominantRepair,
}

#[derive(Debug, Clone)]
pub struct GenConfig {
    pub n: usize,
    pub graph_class: GraphClass,
    pub regime: Regime,
    pub rate_grid_denominator: u64,
    pub horizon: Horizon,
    pub seed: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),
}

fn random_dag_edges(rng: &mut ChaCha8Rng, n: usize, class: GraphClass) -> Vec<(NodeId, NodeId)> {
    let mut order: Vec<NodeId> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    match class {
        GraphClass::Edgeless => {}
        GraphClass::GeneralDag => {
            for a in 0..n {
                for b in (a + 1)..n {
                    if rng.gen_bool(0.3) {
                        edges.push((order[a], order[b]));
                    }
                }
            }
        }
        GraphClass::Forest { max_k } => {
            let mut rest = order.as_slice();
            while !rest.is_empty() {
                let size = rng.gen_range(1..=max_k.min(rest.len()));
                let (tree, tail) = rest.split_at(size);
                for i in 1..tree.len() {
                    let parent = tree[rng.gen_range(0..i)];
                    edges.push((parent, tree[i]));
                }
                rest = tail;
            }
        }
        GraphClass::CompleteSeries => {
            let mut levels: Vec<&[NodeId]> = Vec::new();
            let mut rest = order.as_slice();
            while !rest.is_empty() {
                let size = rng.gen_range(1..=rest.len());
                let (level, tail) = rest.split_at(size);
                levels.push(level);
                rest = tail;
            }
            for pair in levels.windows(2) {
                for &a in pair[0] {
                    for &b in pair[1] {
                        edges.push((a, b));
                    }
                }
            }
        }
    }
    edges
}

/// Deterministic in the seed. The generated instance always validates,
/// matches the requested regime, and matches the requested graph class;
/// all three are asserted before returning.
pub fn generate_random_instance(config: &GenConfig) -> Result<Instance, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.n;
    let d = config.rate_grid_denominator;
    if n < 2 {
        return Err(GenError::InfeasibleConfig("need at least 2 nodes".into()));
    }
    let params = match config.regime {
        Regime::DominantDecayAssumption1 => {
            if d < 3 {
                return Err(GenError::InfeasibleConfig(
                    "grid denominator must be at least 3 for the homogeneous regime".into(),
                ));
            }
            let inc = Rat::new(1, d as i64);
            let mult = rng.gen_range(1..=(d - 1).min(3));
            let dec = Rat::new(mult as i64, d as i64);
            (1..=n)
                .map(|id| {
                    let m = rng.gen_range(1..=d - 1);
                    NodeParams {
                        id,
                        v0: Rat::one() - Rat::new(m as i64, d as i64),
                        inc: inc.clone(),
                        dec: dec.clone(),
                    }
                })
                .collect::<Vec<_>>()
        }
        Regime::DominantRepair => {
            // small deterioration numerators, then repair numerators
            // strictly above both regime thresholds
            let a_max = ((d - 2) / (n as u64 - 1)).max(1).min(2);
            let a: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=a_max)).collect();
            let a_sum: u64 = a.iter().sum();
            let mut params = Vec::with_capacity(n);
            for (i, &aj) in a.iter().enumerate() {
                let lo = ((n as u64 - 1) * aj).max(a_sum - aj) + 1;
                if lo > d - 1 {
                    return Err(GenError::InfeasibleConfig(format!(
                        "grid denominator {d} too coarse for the dominant-repair regime with n = {n}"
                    )));
                }
                let b = rng.gen_range(lo..=d - 1);
                let v0 = rng.gen_range(1..=d - 1);
                params.push(NodeParams {
                    id: i + 1,
                    v0: Rat::new(v0 as i64, d as i64),
                    inc: Rat::new(b as i64, d as i64),
                    dec: Rat::new(aj as i64, d as i64),
                });
            }
            params
        }
    };
    let edges = random_dag_edges(&mut rng, n, config.graph_class);
    let instance = Instance::new(params, PrecedenceDag::new(n, edges), config.horizon)
        .expect("generated instance validates");

    let report = classify_regime(&instance);
    match config.regime {
        Regime::DominantDecayAssumption1 => {
            assert!(report.dominant_decay && report.assumption1.is_some())
        }
        Regime::DominantRepair => assert!(report.dominant_repair),
    }
    match config.graph_class {
        GraphClass::Edgeless => assert_eq!(instance.dag().edge_count(), 0),
        GraphClass::CompleteSeries => assert!(is_complete_series(instance.dag())),
        GraphClass::Forest { max_k } => {
            let forest = as_disjoint_trees(instance.dag()).expect("forest by construction");
            assert!(forest.k <= max_k);
        }
        GraphClass::GeneralDag => {}
    }
    Ok(instance)
}

/// One corpus entry: the seed it was generated from plus the instance.
pub type CorpusEntry = (u64, Instance);

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub seed: u64,
    pub details: String,
}

/// Outcome of one batch verification run. `violations` must be empty on
/// shipped corpora; any entry is a build-blocking failure.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances_run: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub min_observed_ratio: Option<Rat>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("instance with seed {seed} does not match the suite regime: {why}")]
    RegimeMismatch { seed: u64, why: String },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

struct Outcome {
    violation: Option<Violation>,
    ratio: Option<Rat>,
    skipped: bool,
}

impl Outcome {
    fn ok() -> Self {
        Outcome {
            violation: None,
            ratio: None,
            skipped: false,
        }
    }

    fn skip() -> Self {
        Outcome {
            violation: None,
            ratio: None,
            skipped: true,
        }
    }
}

fn assemble(suite: &str, outcomes: Vec<Outcome>) -> SuiteReport {
    let mut violations = Vec::new();
    let mut min_ratio: Option<Rat> = None;
    let mut skipped = 0usize;
    let mut run = 0usize;
    for o in outcomes {
        if o.skipped {
            skipped += 1;
            continue;
        }
        run += 1;
        if let Some(v) = o.violation {
            violations.push(v);
        }
        if let Some(r) = o.ratio {
            min_ratio = Some(match min_ratio {
                Some(m) => m.min(r),
                None => r,
            });
        }
    }
    violations.sort_by_key(|v| v.seed);
    SuiteReport {
        suite: suite.to_string(),
        instances_run: run,
        skipped,
        violations,
        min_observed_ratio: min_ratio,
    }
}

/// Checks that the optimum over all sequences equals the optimum over
/// non-jumping sequences on every dominant-decay instance.
pub fn suite_theorem1(corpus: &[CorpusEntry]) -> Result<SuiteReport, SuiteError> {
    for (seed, instance) in corpus {
        if !classify_regime(instance).dominant_decay {
            return Err(SuiteError::RegimeMismatch {
                seed: *seed,
                why: "deterioration must dominate repair".into(),
            });
        }
    }
    let outcomes = corpus
        .par_iter()
        .map(|(seed, instance)| -> Result<Outcome, SuiteError> {
            let full = solve_exhaustive(instance, DEFAULT_STATE_CAP)?;
            let nonjumping = solve_nonjumping(instance);
            let mut o = Outcome::ok();
            if full.reward != nonjumping.reward {
                o.violation = Some(Violation {
                    seed: *seed,
                    details: format!(
                        "exhaustive reward {} != non-jumping reward {}",
                        full.reward, nonjumping.reward
                    ),
                });
            }
            Ok(o)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble("theorem1", outcomes))
}

/// Checks the healthiest-first half-bound: 2 * greedy >= optimum on
/// homogeneous-rate dominant-decay instances, recording the worst ratio.
pub fn suite_theorem3(corpus: &[CorpusEntry]) -> Result<SuiteReport, SuiteError> {
    for (seed, instance) in corpus {
        if classify_regime(instance).assumption1.is_none() {
            return Err(SuiteError::RegimeMismatch {
                seed: *seed,
                why: "homogeneous integer-rate structure required".into(),
            });
        }
    }
    let outcomes = corpus
        .par_iter()
        .map(|(seed, instance)| {
            let greedy = reward(
                &run_policy(instance, &PolicyKind::HealthiestFirst).expect("greedy always runs"),
            );
            let optimum = solve_nonjumping(instance).reward;
            let mut o = Outcome::ok();
            if 2 * greedy < optimum {
                o.violation = Some(Violation {
                    seed: *seed,
                    details: format!("2 * greedy = {} < optimum = {optimum}", 2 * greedy),
                });
            }
            if optimum > 0 {
                o.ratio = Some(Rat::new(greedy as i64, optimum as i64));
            }
            o
        })
        .collect();
    Ok(assemble("theorem3", outcomes))
}

/// Checks the least-modified-health 1/k bound on dominant-repair forest
/// instances without a time limit, and exactness on dominant-repair
/// complete-series instances. Finite-horizon entries are excluded (the
/// bound does not hold there) and counted as skipped.
pub fn suite_theorem5(corpus: &[CorpusEntry]) -> Result<SuiteReport, SuiteError> {
    for (seed, instance) in corpus {
        if !classify_regime(instance).dominant_repair {
            return Err(SuiteError::RegimeMismatch {
                seed: *seed,
                why: "repair must strictly dominate deterioration".into(),
            });
        }
        if as_disjoint_trees(instance.dag()).is_none() && !is_complete_series(instance.dag()) {
            return Err(SuiteError::RegimeMismatch {
                seed: *seed,
                why: "precedence graph must be a forest or a complete series graph".into(),
            });
        }
    }
    let outcomes = corpus
        .par_iter()
        .map(|(seed, instance)| -> Result<Outcome, SuiteError> {
            if instance.horizon().is_finite() {
                return Ok(Outcome::skip());
            }
            let greedy = reward(
                &run_policy(instance, &PolicyKind::LeastModifiedHealthFirst)
                    .expect("greedy always runs"),
            );
            let optimum = solve_exhaustive(instance, DEFAULT_STATE_CAP)?.reward;
            let mut o = Outcome::ok();
            if let Some(forest) = as_disjoint_trees(instance.dag()) {
                if forest.k * greedy < optimum {
                    o.violation = Some(Violation {
                        seed: *seed,
                        details: format!(
                            "k * greedy = {} < optimum = {optimum} (k = {})",
                            forest.k * greedy,
                            forest.k
                        ),
                    });
                }
            }
            if is_complete_series(instance.dag()) && greedy != optimum {
                o.violation = Some(Violation {
                    seed: *seed,
                    details: format!(
                        "complete series expects exact greedy, got {greedy} vs {optimum}"
                    ),
                });
            }
            if optimum > 0 {
                o.ratio = Some(Rat::new(greedy as i64, optimum as i64));
            }
            Ok(o)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble("theorem5", outcomes))
}

/// Runs a fixed order, truncating it at precedence blocks instead of
/// failing: once an entry cannot be targeted (its in-neighbor failed),
/// no later entry behind it could be either.
fn run_fixed_order_lenient(instance: &Instance, mut order: Vec<NodeId>) -> Trajectory {
    loop {
        match run_policy(instance, &PolicyKind::FixedOrder(order.clone())) {
            Ok(traj) => return traj,
            Err(PolicyError::PrecedenceViolation { node, .. }) => {
                let pos = order.iter().position(|&j| j == node).expect("node in order");
                order.truncate(pos);
            }
            Err(e) => panic!("unexpected fixed-order failure: {e}"),
        }
    }
}

/// For each instance, takes the non-jumping optimum's repair order A,
/// prepends every eligible healthier-first node h, and checks that the
/// modified order still repairs all but at most one of A's nodes.
/// Eligibility reading: h must be targetable at t = 0.
pub fn suite_lemma2(corpus: &[CorpusEntry]) -> Result<SuiteReport, SuiteError> {
    for (seed, instance) in corpus {
        if classify_regime(instance).assumption1.is_none() {
            return Err(SuiteError::RegimeMismatch {
                seed: *seed,
                why: "homogeneous integer-rate structure required".into(),
            });
        }
    }
    let outcomes = corpus
        .par_iter()
        .map(|(seed, instance)| {
            let solved = solve_nonjumping(instance);
            if solved.reward == 0 {
                return Outcome::skip();
            }
            let a_order = completion_order(&solved.witness);
            let first = a_order[0];
            let x = solved.reward;
            let eligible: Vec<NodeId> = instance
                .node_ids()
                .filter(|&h| {
                    h != first
                        && instance.node(h).v0 > instance.node(first).v0
                        && instance.dag().in_degree(h) == 0
                })
                .collect();
            if eligible.is_empty() {
                return Outcome::skip();
            }
            let mut o = Outcome::ok();
            for h in eligible {
                let mut b_order = vec![h];
                b_order.extend(a_order.iter().copied().filter(|&j| j != h));
                let b = run_fixed_order_lenient(instance, b_order);
                let got = reward(&b);
                if got + 1 < x {
                    o.violation = Some(Violation {
                        seed: *seed,
                        details: format!(
                            "prepending node {h} drops reward from {x} to {got}"
                        ),
                    });
                    break;
                }
            }
            o
        })
        .collect();
    Ok(assemble("lemma2", outcomes))
}

fn completion_order(witness: &[NodeId]) -> Vec<NodeId> {
    let mut order = Vec::new();
    for &a in witness {
        if !order.contains(&a) {
            order.push(a);
        }
    }
    order
}

/// A constructed single-jump repair-all sequence together with its
/// instance.
pub struct SingleJumpCase {
    pub seed: u64,
    pub instance: Instance,
    pub trajectory: Trajectory,
}

/// Builds `count` single-jump sequences that repair every node: the
/// first node is partially repaired, a detour block is completed, the
/// first node is finished, then the tail. Seeds that do not produce a
/// surviving sequence are discarded.
pub fn build_single_jump_cases(count: usize, seed_base: u64) -> Vec<SingleJumpCase> {
    let mut cases = Vec::with_capacity(count);
    let mut seed = seed_base;
    let mut attempts = 0usize;
    while cases.len() < count {
        attempts += 1;
        assert!(
            attempts < count * 200 + 10_000,
            "single-jump construction kept failing"
        );
        let s = seed;
        seed += 1;
        if let Some(case) = try_single_jump_case(s) {
            cases.push(case);
        }
    }
    cases
}

fn try_single_jump_case(seed: u64) -> Option<SingleJumpCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=4usize);
    let d: i64 = 96;
    let mult = rng.gen_range(1..=2i64);
    let inc = Rat::new(1, d);
    let dec = Rat::new(mult, d);
    let params: Vec<NodeParams> = (1..=n)
        .map(|id| {
            let m = rng.gen_range(2..=4i64);
            NodeParams {
                id,
                v0: Rat::one() - Rat::new(m, d),
                inc: inc.clone(),
                dec: dec.clone(),
            }
        })
        .collect();
    let mut order: Vec<NodeId> = (1..=n).collect();
    order.shuffle(&mut rng);
    let k = rng.gen_range(2..=n);
    // edges compatible with the completion order of the jumped sequence:
    // none into the first node, detour nodes depend only on earlier
    // detour nodes, tail nodes on anything completed before them
    let mut edges = Vec::new();
    for b in 1..n {
        for a in 0..b {
            let allowed = if b <= k - 1 { a >= 1 } else { true };
            if allowed && rng.gen_bool(0.25) {
                edges.push((order[a], order[b]));
            }
        }
    }
    let instance = Instance::new(
        params,
        PrecedenceDag::new(n, edges),
        Horizon::Infinite,
    )
    .ok()?;

    let first = order[0];
    let m_first = (Rat::one() - instance.node(first).v0.clone())
        .exact_div_int(&inc)
        .unwrap();
    let m_first = u64::try_from(m_first).unwrap();
    let partial = rng.gen_range(1..=m_first - 1);

    let mut actions: Vec<NodeId> = vec![first; partial as usize];
    let mut state = HealthState::initial(&instance);
    for _ in 0..partial {
        state = step(&instance, &state, first);
    }
    let completion: Vec<NodeId> = order[1..k]
        .iter()
        .chain(std::iter::once(&first))
        .chain(order[k..].iter())
        .copied()
        .collect();
    for node in completion {
        if state.value(node).is_zero() {
            return None;
        }
        while !state.value(node).is_one() {
            state = step(&instance, &state, node);
            actions.push(node);
        }
    }
    let trajectory = simulate(&instance, &actions).ok()?;
    if trajectory.repaired_set().len() != n || detect_jumps(&trajectory).len() != 1 {
        return None;
    }
    Some(SingleJumpCase {
        seed,
        instance,
        trajectory,
    })
}

/// Verifies the single-jump rewrite on constructed cases: the rewritten
/// sequence is non-jumping, repairs every node, finishes no later, and
/// every reported duration bound holds exactly.
pub fn suite_lemma1(count: usize, seed_base: u64) -> SuiteReport {
    let cases = build_single_jump_cases(count, seed_base);
    let outcomes = cases
        .par_iter()
        .map(|case| {
            let mut o = Outcome::ok();
            let fail = |details: String| Violation {
                seed: case.seed,
                details,
            };
            match lemma1_transform(&case.instance, &case.trajectory) {
                Err(e) => o.violation = Some(fail(format!("transform failed: {e}"))),
                Ok(removal) => {
                    if !detect_jumps(&removal.b_traj).is_empty() {
                        o.violation = Some(fail("rewritten sequence jumps".into()));
                    } else if removal.b_traj.repaired_set().len() != case.instance.n() {
                        o.violation = Some(fail("rewritten sequence loses a node".into()));
                    } else if removal.b_traj.actions().len() > case.trajectory.actions().len() {
                        o.violation = Some(fail("rewritten sequence finishes later".into()));
                    } else if let Some(c) = removal
                        .comparisons
                        .iter()
                        .find(|c| c.t_a < c.t_b + c.bound)
                    {
                        o.violation = Some(fail(format!(
                            "duration bound fails at node {}: {} < {} + {}",
                            c.node, c.t_a, c.t_b, c.bound
                        )));
                    }
                }
            }
            o
        })
        .collect();
    assemble("lemma1", outcomes)
}

/// Cross-validates the Clique reduction on every labeled graph with
/// `2..=max_s` vertices and every clique size, and checks the doubling
/// pattern of targeting durations in accepting witnesses.
pub fn suite_reduction(max_s: usize) -> SuiteReport {
    let mut inputs: Vec<(u64, UndirectedGraph, usize)> = Vec::new();
    let mut tag = 0u64;
    for s in 2..=max_s {
        let pairs: Vec<(usize, usize)> = (1..=s)
            .flat_map(|a| ((a + 1)..=s).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let graph = UndirectedGraph::new(s, edges);
            for p in 1..=s {
                inputs.push((tag, graph.clone(), p));
                tag += 1;
            }
        }
    }
    let outcomes = inputs
        .par_iter()
        .map(|(tag, graph, p)| {
            let mut o = Outcome::ok();
            let fail = |details: String| Violation {
                seed: *tag,
                details,
            };
            let red = reduce_clique(graph, *p).expect("p is in range");
            let expected = brute_force_clique(graph, *p);
            let got = decide_ord(&red);
            if got != expected {
                o.violation = Some(fail(format!(
                    "s={} edges={:?} p={p}: reduction decided {got}, clique oracle says {expected}",
                    graph.s, graph.edges
                )));
                return o;
            }
            if got {
                // the i-th node repaired takes exactly 2^i targeting steps
                let witness = solve_nonjumping(&red.instance).witness;
                let mut run_index = 0u32;
                let mut idx = 0usize;
                while idx < witness.len() {
                    let node = witness[idx];
                    let mut len = 0usize;
                    while idx < witness.len() && witness[idx] == node {
                        idx += 1;
                        len += 1;
                    }
                    run_index += 1;
                    if len != (1usize << run_index) {
                        o.violation = Some(fail(format!(
                            "run {run_index} of accepting witness has length {len}, expected {}",
                            1usize << run_index
                        )));
                        break;
                    }
                }
            }
            o
        })
        .collect();
    assemble("reduction", outcomes)
}

// --- corpus builders -------------------------------------------------

fn build_corpus(
    count: usize,
    seed_base: u64,
    mut config_of: impl FnMut(u64, &mut ChaCha8Rng) -> GenConfig,
) -> Vec<CorpusEntry> {
    (0..count as u64)
        .map(|i| {
            let seed = seed_base + i;
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_c0f1_65e5_u64);
            let config = config_of(seed, &mut rng);
            let instance = generate_random_instance(&config).expect("corpus config is feasible");
            (seed, instance)
        })
        .collect()
}

/// Small dominant-decay instances (N <= 4, grid <= 6) over finite and
/// infinite horizons; sized for the exhaustive oracle.
pub fn corpus_dominant_decay_small(count: usize, seed_base: u64) -> Vec<CorpusEntry> {
    build_corpus(count, seed_base, |seed, rng| GenConfig {
        n: rng.gen_range(2..=4),
        graph_class: GraphClass::GeneralDag,
        regime: Regime::DominantDecayAssumption1,
        rate_grid_denominator: rng.gen_range(3..=6),
        horizon: if rng.gen_bool(0.5) {
            Horizon::Finite(rng.gen_range(0..=30))
        } else {
            Horizon::Infinite
        },
        seed,
    })
}

/// Homogeneous-rate DAG instances up to N = 10, the half-bound corpus.
pub fn corpus_assumption1_dags(count: usize, seed_base: u64) -> Vec<CorpusEntry> {
    build_corpus(count, seed_base, |seed, rng| GenConfig {
        n: rng.gen_range(2..=10),
        graph_class: GraphClass::GeneralDag,
        regime: Regime::DominantDecayAssumption1,
        rate_grid_denominator: rng.gen_range(4..=10),
        horizon: if rng.gen_bool(0.5) {
            Horizon::Finite(rng.gen_range(0..=60))
        } else {
            Horizon::Infinite
        },
        seed,
    })
}

/// Edgeless homogeneous-rate instances with random finite horizons.
pub fn corpus_edgeless(count: usize, seed_base: u64) -> Vec<CorpusEntry> {
    build_corpus(count, seed_base, |seed, rng| GenConfig {
        n: rng.gen_range(2..=8),
        graph_class: GraphClass::Edgeless,
        regime: Regime::DominantDecayAssumption1,
        rate_grid_denominator: rng.gen_range(4..=10),
        horizon: Horizon::Finite(rng.gen_range(0..=40)),
        seed,
    })
}

/// Complete-series homogeneous-rate instances with random finite
/// horizons.
pub fn corpus_complete_series(count: usize, seed_base: u64) -> Vec<CorpusEntry> {
    build_corpus(count, seed_base, |seed, rng| GenConfig {
        n: rng.gen_range(2..=8),
        graph_class: GraphClass::CompleteSeries,
        regime: Regime::DominantDecayAssumption1,
        rate_grid_denominator: rng.gen_range(4..=10),
        horizon: Horizon::Finite(rng.gen_range(0..=40)),
        seed,
    })
}

/// Dominant-repair forests (k <= 3, N <= 4) without a time limit; the
/// 1/k-bound corpus.
pub fn corpus_dominant_repair_forests(count: usize, seed_base: u64) -> Vec<CorpusEntry> {
    build_corpus(count, seed_base, |seed, rng| GenConfig {
        n: rng.gen_range(2..=4),
        graph_class: GraphClass::Forest {
            max_k: rng.gen_range(1..=3),
        },
        regime: Regime::DominantRepair,
        rate_grid_denominator: rng.gen_range(10..=16),
        horizon: Horizon::Infinite,
        seed,
    })
}

/// Dominant-repair complete-series instances without a time limit.
pub fn corpus_dominant_repair_complete_series(count: usize, seed_base: u64) -> Vec<CorpusEntry> {
    build_corpus(count, seed_base, |seed, rng| GenConfig {
        n: rng.gen_range(2..=4),
        graph_class: GraphClass::CompleteSeries,
        regime: Regime::DominantRepair,
        rate_grid_denominator: rng.gen_range(10..=16),
        horizon: Horizon::Infinite,
        seed,
    })
}
