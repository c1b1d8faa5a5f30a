//! Inputs shared by the engine benchmarks.

use palstream::{gen_nu, gen_random, Symbol};

/// Benchmark inputs of length `n`: uniform over 4 letters, uniform binary,
/// a single repeated letter, and the slowly growing palindrome string.
pub fn workloads(n: usize) -> Vec<(&'static str, Vec<Symbol>)> {
    vec![
        ("random4", gen_random(n, 4, 1).expect("sigma >= 2")),
        ("random2", gen_random(n, 2, 2).expect("sigma >= 2")),
        ("unary", vec![0; n]),
        ("nu", gen_nu(n)),
    ]
}
