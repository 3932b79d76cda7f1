//! Deterministic engine for post-disruption repair scheduling.
//!
//! Components deteriorate over discrete time unless targeted by a single
//! repair entity, subject to precedence constraints given by a DAG. This
//! crate simulates the exact dynamics, runs the greedy feedback policies,
//! computes exact optima by search, and provides the Clique reduction and
//! batch verification suites.

pub mod dynamics;
pub mod graphs;
pub mod harness;
pub mod instance;
pub mod policies;
pub mod presets;
pub mod rational;
pub mod reduction;
pub mod solver;

pub use dynamics::{
    actionable_set, detect_jumps, feasible_set, reward, simulate, step, HealthState, NodeStatus,
    SimulateError, Trajectory,
};
pub use instance::{
    validate_instance, Horizon, Instance, NodeId, NodeParams, PrecedenceDag, ValidationError,
};
pub use rational::Rat;
