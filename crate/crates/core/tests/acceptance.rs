//! Release acceptance checks. Each test prints one `criterion NN: PASS`
//! or `criterion NN: FAIL` line (run with `--nocapture` to see them all)
//! and fails the build on any violation.

use recovery_core::dynamics::{detect_jumps, reward, HealthState};
use recovery_core::graphs::{as_disjoint_trees, classify_regime};
use recovery_core::harness::{
    corpus_assumption1_dags, corpus_complete_series, corpus_dominant_decay_small,
    corpus_dominant_repair_forests, corpus_edgeless, suite_lemma1, suite_lemma2, suite_reduction,
    suite_theorem1, suite_theorem3, suite_theorem5, CorpusEntry,
};
use recovery_core::policies::{run_policy, PolicyKind};
use recovery_core::presets::{ex1, ex2, ex3};
use recovery_core::solver::{
    closed_form_completion_times, solve_exhaustive, solve_nonjumping, ClosedFormError,
    DEFAULT_STATE_CAP,
};
use recovery_core::{Horizon, Instance, NodeId, Rat};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn report(number: u32, label: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("criterion {number:02}: PASS — {label}");
    } else {
        println!("criterion {number:02}: FAIL — {label}");
        for f in &failures {
            println!("    {f}");
        }
        panic!("criterion {number:02} failed");
    }
}

fn check(failures: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failures.push(what.to_string());
    }
}

#[test]
fn criterion_01_first_example_reproduction() {
    let mut failures = Vec::new();
    let inst = ex1();
    let greedy = reward(&run_policy(&inst, &PolicyKind::HealthiestFirst).unwrap());
    check(&mut failures, greedy == 1, "healthiest-first reward is 1");
    let nj = solve_nonjumping(&inst);
    let ex = solve_exhaustive(&inst, DEFAULT_STATE_CAP).unwrap();
    check(&mut failures, nj.reward == 2, "non-jumping optimum is 2");
    check(&mut failures, ex.reward == 2, "exhaustive optimum is 2");
    check(&mut failures, nj.repaired == [2, 3].into(), "repaired {2,3}");
    check(&mut failures, ex.repaired == [2, 3].into(), "repaired {2,3}");
    check(
        &mut failures,
        Rat::new(greedy as i64, nj.reward as i64) == Rat::new(1, 2),
        "ratio exactly 1/2",
    );
    report(1, "first preset: greedy 1 vs optimum 2", failures);
}

#[test]
fn criterion_02_second_example_reproduction() {
    let mut failures = Vec::new();
    let inst = ex2();
    let greedy = reward(&run_policy(&inst, &PolicyKind::LeastModifiedHealthFirst).unwrap());
    check(&mut failures, greedy == 1, "least-modified reward is 1");
    let opt = solve_exhaustive(&inst, DEFAULT_STATE_CAP).unwrap().reward;
    check(&mut failures, opt == 2, "optimal reward is 2");
    let forest = as_disjoint_trees(inst.dag()).expect("preset graph is a forest");
    check(&mut failures, forest.k == 2, "largest tree has 2 nodes");
    check(
        &mut failures,
        Rat::new(greedy as i64, opt as i64) == Rat::new(1, forest.k as i64),
        "ratio exactly 1/k = 1/2",
    );
    report(2, "second preset: policy 1 vs optimum 2, k = 2", failures);
}

#[test]
fn criterion_03_third_example_reproduction() {
    let mut failures = Vec::new();
    let inst = ex3();
    let traj = run_policy(&inst, &PolicyKind::LeastModifiedHealthFirst).unwrap();
    check(&mut failures, reward(&traj) == 0, "least-modified reward is 0");
    check(
        &mut failures,
        !detect_jumps(&traj).is_empty(),
        "policy oscillates (jumps detected)",
    );
    let fixed = run_policy(&inst, &PolicyKind::FixedOrder(vec![2, 1])).unwrap();
    check(&mut failures, reward(&fixed) == 1, "order (2,1) repairs one node");
    let opt = solve_exhaustive(&inst, DEFAULT_STATE_CAP).unwrap().reward;
    check(&mut failures, opt == 1, "exhaustive optimum is 1");
    report(3, "third preset: oscillation 0, optimum 1", failures);
}

#[test]
fn criterion_04_optimum_oracle_agreement() {
    let mut failures = Vec::new();
    let corpus = corpus_dominant_decay_small(200, 100_000);
    let r = suite_theorem1(&corpus).unwrap();
    check(&mut failures, r.instances_run >= 200, "at least 200 instances");
    for v in &r.violations {
        failures.push(format!("seed {}: {}", v.seed, v.details));
    }
    report(4, "exhaustive = non-jumping on 200 dominant-decay instances", failures);
}

#[test]
fn criterion_05_half_bound() {
    let mut failures = Vec::new();
    let mut corpus: Vec<CorpusEntry> = vec![(u64::MAX, ex1())];
    corpus.extend(corpus_assumption1_dags(500, 200_000));
    let r = suite_theorem3(&corpus).unwrap();
    check(&mut failures, r.instances_run >= 500, "at least 500 instances");
    for v in &r.violations {
        failures.push(format!("seed {}: {}", v.seed, v.details));
    }
    check(
        &mut failures,
        r.min_observed_ratio == Some(Rat::new(1, 2)),
        "minimum observed ratio is exactly 1/2",
    );
    report(5, "2 * healthiest-first >= optimum on 500 instances", failures);
}

#[test]
fn criterion_06_exactness_on_special_graphs() {
    let mut failures = Vec::new();
    for (name, corpus) in [
        ("edgeless", corpus_edgeless(200, 300_000)),
        ("complete series", corpus_complete_series(200, 310_000)),
    ] {
        let r = suite_theorem3(&corpus).unwrap();
        check(
            &mut failures,
            r.instances_run >= 200,
            &format!("{name}: at least 200 instances"),
        );
        for v in &r.violations {
            failures.push(format!("{name} seed {}: {}", v.seed, v.details));
        }
        check(
            &mut failures,
            r.min_observed_ratio == Some(Rat::one()),
            &format!("{name}: greedy is exactly optimal everywhere"),
        );
    }
    report(6, "greedy = optimum on edgeless and complete-series graphs", failures);
}

#[test]
fn criterion_07_one_over_k_bound() {
    let mut failures = Vec::new();
    let mut corpus: Vec<CorpusEntry> = vec![(u64::MAX, ex2())];
    corpus.extend(corpus_dominant_repair_forests(200, 400_000));
    let r = suite_theorem5(&corpus).unwrap();
    check(&mut failures, r.instances_run >= 200, "at least 200 instances");
    for v in &r.violations {
        failures.push(format!("seed {}: {}", v.seed, v.details));
    }
    // trees have at most 3 nodes, so no ratio may dip under 1/3
    check(
        &mut failures,
        r.min_observed_ratio.as_ref().is_some_and(|m| *m >= Rat::new(1, 3)),
        "minimum ratio stays at or above 1/3",
    );
    let tight = suite_theorem5(&[(u64::MAX, ex2())]).unwrap();
    check(
        &mut failures,
        tight.min_observed_ratio == Some(Rat::new(1, 2)),
        "second preset witnesses the tight 1/2 = 1/k ratio",
    );
    report(7, "k * least-modified >= optimum on 200 forests", failures);
}

/// Independent oracle for the completion-time recursion: walk the order
/// step by step with the raw dynamics and count targeting steps.
fn stepped_completion(
    instance: &Instance,
    order: &[NodeId],
) -> Result<u64, usize> {
    let mut state = HealthState::initial(instance);
    let mut total = 0u64;
    for (pos, &j) in order.iter().enumerate() {
        if state.value(j).is_zero() {
            return Err(pos + 1);
        }
        while !state.value(j).is_one() {
            state = recovery_core::dynamics::step(instance, &state, j);
            total += 1;
        }
    }
    Ok(total)
}

/// A uniform-ish random precedence-respecting order over a random subset.
fn random_topo_order(instance: &Instance, rng: &mut ChaCha8Rng) -> Vec<NodeId> {
    let n = instance.n();
    let len = rng.gen_range(1..=n);
    let mut picked: Vec<NodeId> = Vec::new();
    while picked.len() < len {
        let ready: Vec<NodeId> = instance
            .node_ids()
            .filter(|&j| {
                !picked.contains(&j)
                    && instance.dag().in_neighbors(j).all(|w| picked.contains(&w))
            })
            .collect();
        picked.push(*ready.choose(rng).expect("a DAG always has a ready node"));
    }
    picked
}

#[test]
fn criterion_08_completion_time_recursion() {
    let mut failures = Vec::new();
    let corpus = corpus_assumption1_dags(500, 500_000);
    let mut checked = 0usize;
    for (seed, inst) in &corpus {
        // completion times presume no budget cutoff
        let inst = inst.with_horizon(Horizon::Infinite);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31));
        let order = random_topo_order(&inst, &mut rng);
        let predicted = closed_form_completion_times(&inst, &order);
        let observed = stepped_completion(&inst, &order);
        checked += 1;
        match (predicted, observed) {
            (Ok(schedule), Ok(total)) => {
                if schedule.total != total {
                    failures.push(format!(
                        "seed {seed}: predicted {} steps, simulated {total}",
                        schedule.total
                    ));
                }
            }
            (Err(ClosedFormError::NodeFailsBeforeReached(p)), Err(q)) => {
                if p != q {
                    failures.push(format!(
                        "seed {seed}: failure predicted at position {p}, observed at {q}"
                    ));
                }
            }
            (predicted, observed) => {
                failures.push(format!(
                    "seed {seed}: prediction {predicted:?} disagrees with simulation {observed:?}"
                ));
            }
        }
    }
    check(&mut failures, checked >= 500, "at least 500 orders checked");
    report(8, "completion-time recursion matches stepped simulation", failures);
}

#[test]
fn criterion_09_single_jump_rewrite() {
    let mut failures = Vec::new();
    let r = suite_lemma1(100, 600_000);
    check(&mut failures, r.instances_run >= 100, "at least 100 constructions");
    for v in &r.violations {
        failures.push(format!("seed {}: {}", v.seed, v.details));
    }
    report(9, "single-jump rewrite and duration bounds on 100 cases", failures);
}

#[test]
fn criterion_10_healthier_first_node_swap() {
    let mut failures = Vec::new();
    let corpus = corpus_assumption1_dags(800, 700_000);
    let r = suite_lemma2(&corpus).unwrap();
    check(
        &mut failures,
        r.instances_run + r.skipped >= 800 && r.instances_run >= 200,
        "at least 200 instances actually exercised",
    );
    for v in &r.violations {
        failures.push(format!("seed {}: {}", v.seed, v.details));
    }
    report(10, "prepending a healthier first node costs at most one repair", failures);
}

#[test]
fn criterion_11_clique_reduction_equivalence() {
    let mut failures = Vec::new();
    let r = suite_reduction(4);
    check(
        &mut failures,
        r.instances_run == 284,
        "sweeps all graphs up to 4 vertices with every clique size",
    );
    for v in &r.violations {
        failures.push(format!("case {}: {}", v.seed, v.details));
    }
    report(11, "reduction agrees with the clique oracle on all small graphs", failures);
}

#[test]
fn presets_match_shipped_instance_files() {
    // the acceptance examples must be reachable through the CLI files too
    for (file, preset) in [
        ("ex1.json", ex1()),
        ("ex2.json", ex2()),
        ("ex3.json", ex3()),
    ] {
        let path = std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("../../instances")
            .join(file);
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed: Instance = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, preset, "{file} drifted from the built-in preset");
    }
    // sanity: the shipped corpora really sit in the regimes they claim
    assert!(classify_regime(&ex1()).assumption1.is_some());
    assert!(classify_regime(&ex2()).dominant_repair);
}
