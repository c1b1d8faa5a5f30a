//! Parameter sweeps over generated inputs.
//!
//! A grid is a `;`-separated list of cells, each `mode:key=values:...` with
//! comma-separated values, for example
//! `additive:n=1000000:E=2,8,32,128;exact:n=100000:m=8,16`. Every cell
//! expands to the product of its `n` values and its parameter values.
//! Optional keys `sigma` (default 4) and `seed` (default 0) pick the input.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::io::Write;
use std::time::Instant;

use palstream::{gen_random, oracle_lps, Symbol};
use serde::Serialize;

use crate::error::CliError;
use crate::run::{Mode, RunConfig, Runner};

pub const DEFAULT_GRID: &str = "additive:n=1000000:E=2,8,32,128;\
multiplicative:n=10000,100000,1000000:eps=1;\
exact:n=100000:m=8,16,32,64";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchCase {
    pub mode: Mode,
    pub n: usize,
    pub sigma: u64,
    pub seed: u64,
}

impl BenchCase {
    /// The swept parameter: E, eps, or m.
    pub fn param(&self) -> f64 {
        match self.mode {
            Mode::Additive { error } => error as f64,
            Mode::Multiplicative { eps } | Mode::Combined { eps, .. } => eps,
            Mode::Exact { window } => window as f64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub mode: &'static str,
    pub n: usize,
    pub param: f64,
    pub space_words: u64,
    pub ns_per_symbol: f64,
    /// `L - len` for additive and exact runs, `L / len - 1` for
    /// multiplicative ones.
    pub achieved_error: f64,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_list<T: std::str::FromStr>(key: &str, values: &str) -> Result<Vec<T>, CliError> {
    values
        .split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| usage(format!("bad value {v:?} for {key}")))
        })
        .collect()
}

pub fn parse_grid(spec: &str) -> Result<Vec<BenchCase>, CliError> {
    let mut cases = Vec::new();
    for cell in spec.split(';').map(str::trim).filter(|c| !c.is_empty()) {
        let mut parts = cell.split(':');
        let mode = parts.next().unwrap_or_default();
        let mut keys: HashMap<&str, &str> = HashMap::new();
        for part in parts {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| usage(format!("expected key=values in {part:?}")))?;
            keys.insert(k.trim(), v);
        }
        let take = |names: &[&str]| names.iter().find_map(|k| keys.get(k).copied());
        let ns: Vec<usize> = parse_list("n", take(&["n"]).ok_or_else(|| usage("cell needs n="))?)?;
        let sigma = take(&["sigma"]).map_or(Ok(4), |v| {
            v.parse().map_err(|_| usage(format!("bad sigma {v:?}")))
        })?;
        let seed = take(&["seed"]).map_or(Ok(0), |v| {
            v.parse().map_err(|_| usage(format!("bad seed {v:?}")))
        })?;
        let modes: Vec<Mode> = match mode {
            "additive" => {
                let v = take(&["E", "error"]).ok_or_else(|| usage("additive cell needs E="))?;
                parse_list("E", v)?
                    .into_iter()
                    .map(|error| Mode::Additive { error })
                    .collect()
            }
            "multiplicative" => {
                let v = take(&["eps", "epsilon"])
                    .ok_or_else(|| usage("multiplicative cell needs eps="))?;
                parse_list("eps", v)?
                    .into_iter()
                    .map(|eps| Mode::Multiplicative { eps })
                    .collect()
            }
            "exact" => {
                let v = take(&["m", "window"]).ok_or_else(|| usage("exact cell needs m="))?;
                parse_list("m", v)?
                    .into_iter()
                    .map(|window| Mode::Exact { window })
                    .collect()
            }
            other => return Err(usage(format!("unknown bench mode {other:?}"))),
        };
        for &n in &ns {
            for &mode in &modes {
                cases.push(BenchCase {
                    mode,
                    n,
                    sigma,
                    seed,
                });
            }
        }
    }
    Ok(cases)
}

/// Runs one case on a random input, timing only the pushes.
pub fn run_case(case: &BenchCase, input: &[Symbol], longest: u64) -> Result<BenchRow, CliError> {
    let mut config = RunConfig::new(case.mode);
    config.seed = case.seed;
    let mut runner = Runner::new(config)?;
    let start = Instant::now();
    for &a in input {
        runner.push(a);
    }
    let elapsed = start.elapsed();
    let report = runner.report();
    let len = report.length;
    let achieved_error = match case.mode {
        Mode::Multiplicative { .. } | Mode::Combined { .. } if len > 0 => {
            longest as f64 / len as f64 - 1.0
        }
        _ => longest.saturating_sub(len) as f64,
    };
    Ok(BenchRow {
        mode: case.mode.name(),
        n: case.n,
        param: case.param(),
        space_words: report.space_words,
        ns_per_symbol: elapsed.as_nanos() as f64 / case.n.max(1) as f64,
        achieved_error,
    })
}

/// Runs every case, generating each distinct input once.
pub fn run_grid(cases: &[BenchCase]) -> Result<Vec<BenchRow>, CliError> {
    let mut inputs: HashMap<(usize, u64, u64), (Vec<Symbol>, u64)> = HashMap::new();
    let mut rows = Vec::with_capacity(cases.len());
    for case in cases {
        let key = (case.n, case.sigma, case.seed);
        let (input, longest) = match inputs.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => {
                let s = gen_random(case.n, case.sigma, case.seed)?;
                let longest = oracle_lps(&s).len;
                e.insert((s, longest))
            }
        };
        rows.push(run_case(case, input, *longest)?);
    }
    Ok(rows)
}

pub fn write_csv(rows: &[BenchRow], out: impl Write) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush().map_err(|e| CliError::io("writing csv", e))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_expansion() {
        let cases = parse_grid(DEFAULT_GRID).unwrap();
        assert_eq!(cases.len(), 4 + 3 + 4);
        assert_eq!(cases[0].mode, Mode::Additive { error: 2 });
        assert_eq!(cases[5].n, 100_000);
        let cases = parse_grid("exact:n=10,20:m=3:sigma=2:seed=9").unwrap();
        assert_eq!(cases.len(), 2);
        assert_eq!((cases[1].n, cases[1].sigma, cases[1].seed), (20, 2, 9));
    }

    #[test]
    fn bad_grids() {
        for spec in [
            "additive:E=2",
            "additive:n=5",
            "foo:n=1:E=2",
            "exact:n=x:m=2",
            "exact:n",
        ] {
            assert!(parse_grid(spec).is_err(), "{spec}");
        }
    }

    #[test]
    fn small_sweep() {
        let rows =
            run_grid(&parse_grid("additive:n=2000:E=2,16;exact:n=2000:m=4").unwrap()).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows[0].space_words > rows[1].space_words);
        assert_eq!(rows[0].achieved_error, 0.0);
        let mut out = Vec::new();
        write_csv(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("mode,n,param,space_words,ns_per_symbol,achieved_error\n"));
    }
}
