//! Command-line frontend: file I/O and JSON report emission around the
//! core engine.
//!
//! Exit codes: 0 success, 1 domain errors (validation, infeasible
//! orders, I/O), 2 suite violations, 64 usage errors.

use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use recovery_core::dynamics::{detect_jumps, reward, simulate, Trajectory};
use recovery_core::graphs::classify_regime;
use recovery_core::harness::{
    corpus_assumption1_dags, corpus_complete_series, corpus_dominant_decay_small,
    corpus_dominant_repair_complete_series, corpus_dominant_repair_forests, corpus_edgeless,
    generate_random_instance, suite_lemma1, suite_lemma2, suite_reduction, suite_theorem1,
    suite_theorem3, suite_theorem5, CorpusEntry, GenConfig, GraphClass, Regime, SuiteReport,
};
use recovery_core::policies::{run_policy, PolicyKind};
use recovery_core::presets::{ex1, ex2};
use recovery_core::reduction::{brute_force_clique, decide_ord, reduce_clique, NodeRole, UndirectedGraph};
use recovery_core::solver::{
    solve_exhaustive, solve_nonjumping, SolveResult, DEFAULT_STATE_CAP,
};
use recovery_core::{Horizon, Instance, NodeId, Rat};

#[derive(Parser)]
#[command(name = "recovery", about = "Repair scheduling for deteriorating interdependent components", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an explicit action sequence and report the trajectory.
    Simulate {
        #[command(flatten)]
        instance: InstanceArg,
        /// Per-step list "2,2,3,3" or macro form "order:2,3".
        #[arg(long)]
        actions: String,
    },
    /// Run a feedback policy or a fixed repair order.
    Policy {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long, value_enum)]
        name: PolicyName,
        /// Repair order for --name order, e.g. "2,3".
        #[arg(long)]
        order: Option<String>,
    },
    /// Compute the exact optimal reward and a witness sequence.
    Solve {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long, value_enum)]
        method: SolveMethod,
        /// State budget for the exhaustive method.
        #[arg(long, default_value_t = DEFAULT_STATE_CAP)]
        state_cap: usize,
    },
    /// Report the parameter regime and rate structure of an instance.
    Classify {
        #[command(flatten)]
        instance: InstanceArg,
    },
    /// Build the clique-decision instance for an undirected graph.
    Reduce {
        /// Undirected graph JSON: {"s": 3, "edges": [[1,2],[2,3]]}.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        p: usize,
        /// Also decide the instance and cross-check the clique oracle.
        #[arg(long)]
        decide: bool,
    },
    /// Generate a seeded random instance and print its JSON.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        class: ClassName,
        /// Largest tree size for --class forest.
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[arg(long, value_enum)]
        regime: RegimeName,
        #[arg(long)]
        denominator: u64,
        /// Nonnegative integer or "inf".
        #[arg(long, default_value = "inf")]
        horizon: String,
        #[arg(long)]
        seed: u64,
    },
    /// Run a batch verification suite and print its report.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteName,
        /// Number of seeded instances (ignored by the reduction sweep).
        #[arg(long, default_value_t = 200)]
        seeds: usize,
        #[arg(long, default_value_t = 0)]
        seed_base: u64,
    },
}

#[derive(Args)]
struct InstanceArg {
    /// Path to an instance JSON file.
    #[arg(long)]
    instance: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyName {
    Healthiest,
    LeastModified,
    Order,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    Nonjumping,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassName {
    GeneralDag,
    Forest,
    CompleteSeries,
    Edgeless,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeName {
    DominantDecay,
    DominantRepair,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Theorem1,
    Theorem3,
    Theorem5,
    Lemma1,
    Lemma2,
    Reduction,
}

#[derive(Serialize)]
struct TrajectoryOut {
    actions: Vec<NodeId>,
    reward: usize,
    repaired: Vec<NodeId>,
    jumps: Vec<u64>,
    final_values: Vec<Rat>,
}

impl TrajectoryOut {
    fn of(traj: &Trajectory) -> Self {
        TrajectoryOut {
            actions: traj.actions().to_vec(),
            reward: reward(traj),
            repaired: traj.repaired_set().into_iter().collect(),
            jumps: detect_jumps(traj),
            final_values: traj.final_state().values.clone(),
        }
    }
}

#[derive(Serialize)]
struct ReduceOut {
    s: usize,
    q: usize,
    n: usize,
    z: i64,
    roles: BTreeMap<NodeId, NodeRole>,
    instance: Instance,
    #[serde(skip_serializing_if = "Option::is_none")]
    clique: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<bool>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(64);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_instance(arg: &InstanceArg) -> Result<Instance, String> {
    let text = fs::read_to_string(&arg.instance)
        .map_err(|e| format!("cannot read {}: {e}", arg.instance))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", arg.instance))
}

fn parse_order(s: &str) -> Result<Vec<NodeId>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<NodeId>()
                .map_err(|_| format!("bad node id {tok:?} in sequence"))
        })
        .collect()
}

fn emit<T: Serialize>(value: &T) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    // a closed pipe (e.g. piping into head) is not an error
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Simulate { instance, actions } => {
            let inst = load_instance(&instance)?;
            let traj = if let Some(order) = actions.strip_prefix("order:") {
                let order = parse_order(order)?;
                run_policy(&inst, &PolicyKind::FixedOrder(order)).map_err(|e| e.to_string())?
            } else {
                let actions = parse_order(&actions)?;
                simulate(&inst, &actions).map_err(|e| e.to_string())?
            };
            emit(&TrajectoryOut::of(&traj));
            Ok(ExitCode::SUCCESS)
        }
        Command::Policy {
            instance,
            name,
            order,
        } => {
            let inst = load_instance(&instance)?;
            let kind = match name {
                PolicyName::Healthiest => PolicyKind::HealthiestFirst,
                PolicyName::LeastModified => PolicyKind::LeastModifiedHealthFirst,
                PolicyName::Order => {
                    let order = order.ok_or("--order is required with --name order")?;
                    PolicyKind::FixedOrder(parse_order(&order)?)
                }
            };
            let traj = run_policy(&inst, &kind).map_err(|e| e.to_string())?;
            emit(&TrajectoryOut::of(&traj));
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve {
            instance,
            method,
            state_cap,
        } => {
            let inst = load_instance(&instance)?;
            let result: SolveResult = match method {
                SolveMethod::Nonjumping => solve_nonjumping(&inst),
                SolveMethod::Exhaustive => {
                    solve_exhaustive(&inst, state_cap).map_err(|e| e.to_string())?
                }
            };
            emit(&result);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { instance } => {
            let inst = load_instance(&instance)?;
            emit(&classify_regime(&inst));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { graph, p, decide } => {
            let text =
                fs::read_to_string(&graph).map_err(|e| format!("cannot read {graph}: {e}"))?;
            let graph: UndirectedGraph =
                serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let red = reduce_clique(&graph, p).map_err(|e| e.to_string())?;
            let (clique, oracle) = if decide {
                (
                    Some(decide_ord(&red)),
                    Some(brute_force_clique(&graph, p)),
                )
            } else {
                (None, None)
            };
            emit(&ReduceOut {
                s: graph.s,
                q: graph.q(),
                n: red.instance.n(),
                z: red.z,
                roles: red.roles,
                instance: red.instance,
                clique,
                oracle,
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            n,
            class,
            max_k,
            regime,
            denominator,
            horizon,
            seed,
        } => {
            let horizon = match horizon.as_str() {
                "inf" => Horizon::Infinite,
                s => Horizon::Finite(
                    s.parse()
                        .map_err(|_| format!("horizon must be an integer or \"inf\", got {s:?}"))?,
                ),
            };
            let config = GenConfig {
                n,
                graph_class: match class {
                    ClassName::GeneralDag => GraphClass::GeneralDag,
                    ClassName::Forest => GraphClass::Forest { max_k },
                    ClassName::CompleteSeries => GraphClass::CompleteSeries,
                    ClassName::Edgeless => GraphClass::Edgeless,
                },
                regime: match regime {
                    RegimeName::DominantDecay => Regime::DominantDecayAssumption1,
                    RegimeName::DominantRepair => Regime::DominantRepair,
                },
                rate_grid_denominator: denominator,
                horizon,
                seed,
            };
            let inst = generate_random_instance(&config).map_err(|e| e.to_string())?;
            emit(&inst);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            seeds,
            seed_base,
        } => {
            let report = run_suite(suite, seeds, seed_base)?;
            emit(&report);
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
    }
}

fn run_suite(suite: SuiteName, seeds: usize, seed_base: u64) -> Result<SuiteReport, String> {
    let err = |e: recovery_core::harness::SuiteError| e.to_string();
    match suite {
        SuiteName::Theorem1 => {
            suite_theorem1(&corpus_dominant_decay_small(seeds, seed_base)).map_err(err)
        }
        SuiteName::Theorem3 => {
            // the first preset witnesses the tight 1/2 ratio
            let mut corpus: Vec<CorpusEntry> = vec![(u64::MAX, ex1())];
            corpus.extend(corpus_assumption1_dags(seeds, seed_base));
            corpus.extend(corpus_edgeless(seeds / 4, seed_base + seeds as u64));
            corpus.extend(corpus_complete_series(
                seeds / 4,
                seed_base + 2 * seeds as u64,
            ));
            suite_theorem3(&corpus).map_err(err)
        }
        SuiteName::Theorem5 => {
            // the second preset witnesses the tight 1/k ratio at k = 2
            let mut corpus: Vec<CorpusEntry> = vec![(u64::MAX, ex2())];
            corpus.extend(corpus_dominant_repair_forests(seeds, seed_base));
            corpus.extend(corpus_dominant_repair_complete_series(
                seeds / 4,
                seed_base + seeds as u64,
            ));
            suite_theorem5(&corpus).map_err(err)
        }
        SuiteName::Lemma1 => Ok(suite_lemma1(seeds, seed_base)),
        SuiteName::Lemma2 => suite_lemma2(&corpus_assumption1_dags(seeds, seed_base)).map_err(err),
        SuiteName::Reduction => Ok(suite_reduction(4)),
    }
}
