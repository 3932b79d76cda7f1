//! Small built-in instances used across the test suites and shipped as
//! JSON alongside the CLI.

use crate::instance::{Horizon, Instance, NodeParams, PrecedenceDag};
use crate::rational::Rat;

fn rat(s: &str) -> Rat {
    s.parse().expect("preset literal")
}

fn params(id: usize, v0: &str, inc: &str, dec: &str) -> NodeParams {
    NodeParams {
        id,
        v0: rat(v0),
        inc: rat(inc),
        dec: rat(dec),
    }
}

/// Three nodes with healths 3/5, 3/10, 4/5, homogeneous rates 1/10, an
/// edge 2 -> 3 and no time limit. The healthiest-first policy repairs
/// one node here while the optimum repairs two.
pub fn ex1() -> Instance {
    Instance::new(
        vec![
            params(1, "3/5", "1/10", "1/10"),
            params(2, "3/10", "1/10", "1/10"),
            params(3, "4/5", "1/10", "1/10"),
        ],
        PrecedenceDag::new(3, [(2, 3)]),
        Horizon::Infinite,
    )
    .expect("ex1 is valid")
}

/// Same graph shape as [`ex1`] but in the dominant-repair regime
/// (inc = 1/4, dec = 1/10) with healths 1/100, 1/50, 4/5.
pub fn ex2() -> Instance {
    Instance::new(
        vec![
            params(1, "1/100", "1/4", "1/10"),
            params(2, "1/50", "1/4", "1/10"),
            params(3, "4/5", "1/4", "1/10"),
        ],
        PrecedenceDag::new(3, [(2, 3)]),
        Horizon::Infinite,
    )
    .expect("ex2 is valid")
}

/// Two independent nodes, inc = 11/100 just above dec = 1/10, T = 10.
/// The least-modified-health policy oscillates and repairs nothing.
pub fn ex3() -> Instance {
    Instance::new(
        vec![
            params(1, "1/100", "11/100", "1/10"),
            params(2, "11/100", "11/100", "1/10"),
        ],
        PrecedenceDag::new(2, []),
        Horizon::Finite(10),
    )
    .expect("ex3 is valid")
}
