//! Mode selection, one-pass stream driving, and the JSON report.

use std::io::{BufRead, BufReader, Read};

use palstream::{
    is_palindrome_at, oracle_lps, oracle_lps_complement, Additive, Answer, ComplementMap, Engine,
    ExactKind, ExactResult, HashConfig, Multiplicative, PushStats, Symbol, WindowedManacher,
};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mode {
    Additive {
        error: u64,
    },
    Multiplicative {
        eps: f64,
    },
    Exact {
        window: u64,
    },
    /// Multiplicative and exact-window engines side by side; the exact
    /// answer wins whenever it is certified.
    Combined {
        eps: f64,
        window: u64,
    },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Additive { .. } => "additive",
            Mode::Multiplicative { .. } => "multiplicative",
            Mode::Exact { .. } => "exact",
            Mode::Combined { .. } => "combined",
        }
    }

    fn uses_hashing(&self) -> bool {
        !matches!(self, Mode::Exact { .. })
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    pub seed: u64,
    /// Reverse-complement palindromes over DNA letters.
    pub complement: bool,
    /// Permitted input bytes; anything else is rejected.
    pub alphabet: Option<Vec<u8>>,
}

impl RunConfig {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            seed: 0,
            complement: false,
            alphabet: None,
        }
    }

    fn complement_map(&self) -> ComplementMap {
        if self.complement {
            ComplementMap::dna()
        } else {
            ComplementMap::identity()
        }
    }

    fn hash_config(&self) -> HashConfig {
        HashConfig::from_seed(self.seed).with_complement(self.complement_map())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub error: Option<u64>,
    pub epsilon: Option<f64>,
    pub window: Option<u64>,
    pub seed: Option<u64>,
    pub prime: Option<u64>,
    pub complement: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Span {
    pub start: u64,
    pub length: u64,
}

impl From<Answer> for Span {
    fn from(a: Answer) -> Self {
        Span {
            start: a.pos,
            length: a.len,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowReport {
    /// `exact` or `at_least`.
    pub kind: &'static str,
    pub start: u64,
    pub length: u64,
}

impl From<ExactResult> for WindowReport {
    fn from(r: ExactResult) -> Self {
        WindowReport {
            kind: match r.kind {
                ExactKind::Exact => "exact",
                ExactKind::AtLeast => "at_least",
            },
            start: r.pos,
            length: r.len,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub mode: &'static str,
    pub n: u64,
    pub length: u64,
    pub start: u64,
    pub exact: bool,
    /// Peak working memory in machine words.
    pub space_words: u64,
    pub max_ops_per_push: u32,
    pub config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<WindowReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<Span>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_len: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_satisfied: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_valid: Option<bool>,
}

enum Engines {
    Additive(Additive),
    Multiplicative(Multiplicative),
    Exact(WindowedManacher),
    Combined(Multiplicative, WindowedManacher),
}

/// The selected engines plus peak space and per-push work tracking.
pub struct Runner {
    config: RunConfig,
    engines: Engines,
    n: u64,
    peak_space: u64,
    max_ops: u32,
    peak_stats: PushStats,
}

impl Runner {
    pub fn new(config: RunConfig) -> Result<Self, CliError> {
        let fingerprint_only = matches!(
            config.mode,
            Mode::Additive { .. } | Mode::Multiplicative { .. }
        );
        if config.complement && !fingerprint_only {
            return Err(CliError::Usage(
                "--complement applies only to the additive and multiplicative modes".into(),
            ));
        }
        let engines = match config.mode {
            Mode::Additive { error } => {
                Engines::Additive(Additive::new(config.hash_config(), error)?)
            }
            Mode::Multiplicative { eps } => {
                Engines::Multiplicative(Multiplicative::new(config.hash_config(), eps)?)
            }
            Mode::Exact { window } => Engines::Exact(WindowedManacher::new(window)?),
            Mode::Combined { eps, window } => Engines::Combined(
                Multiplicative::new(config.hash_config(), eps)?,
                WindowedManacher::new(window)?,
            ),
        };
        let mut runner = Self {
            config,
            engines,
            n: 0,
            peak_space: 0,
            max_ops: 0,
            peak_stats: PushStats::default(),
        };
        runner.peak_space = runner.space_now();
        Ok(runner)
    }

    fn space_now(&self) -> u64 {
        let words = match &self.engines {
            Engines::Additive(e) => e.space_words(),
            Engines::Multiplicative(e) => e.space_words(),
            Engines::Exact(e) => e.space_words(),
            Engines::Combined(m, e) => m.space_words() + e.space_words(),
        };
        words as u64
    }

    #[inline]
    pub fn push(&mut self, a: Symbol) {
        let stats = match &mut self.engines {
            Engines::Additive(e) => {
                e.push(a);
                e.last_stats()
            }
            Engines::Multiplicative(e) => {
                e.push(a);
                e.last_stats()
            }
            Engines::Exact(e) => {
                e.push(a);
                e.last_stats()
            }
            Engines::Combined(m, e) => {
                m.push(a);
                e.push(a);
                let (s, t) = (m.last_stats(), e.last_stats());
                PushStats {
                    cursor_steps: s.cursor_steps,
                    checks: s.checks,
                    deletions: s.deletions,
                    inner_iterations: t.inner_iterations,
                }
            }
        };
        self.n += 1;
        self.max_ops = self.max_ops.max(stats.ops());
        self.peak_stats = self.peak_stats.max(stats);
        self.peak_space = self.peak_space.max(self.space_now());
    }

    /// Per-field maxima of the work done by any single push.
    pub fn peak_stats(&self) -> PushStats {
        self.peak_stats
    }

    pub fn answer(&self) -> Answer {
        self.report().answer()
    }

    fn window_result(&self) -> Option<ExactResult> {
        match &self.engines {
            Engines::Exact(e) | Engines::Combined(_, e) => Some(e.finish()),
            _ => None,
        }
    }

    pub fn report(&self) -> RunReport {
        let config = &self.config;
        let hashing = config.mode.uses_hashing();
        let cfg = config.hash_config();
        let mut echo = ConfigEcho {
            error: None,
            epsilon: None,
            window: None,
            seed: hashing.then_some(config.seed),
            prime: hashing.then(|| cfg.prime()),
            complement: config.complement,
        };
        let (answer, exact, window, approx) = match (&self.engines, config.mode) {
            (Engines::Additive(e), Mode::Additive { error }) => {
                echo.error = Some(error);
                (e.answer(), false, None, None)
            }
            (Engines::Multiplicative(e), Mode::Multiplicative { eps }) => {
                echo.epsilon = Some(eps);
                (e.answer(), false, None, None)
            }
            (Engines::Exact(e), Mode::Exact { window }) => {
                echo.window = Some(window);
                let r = e.finish();
                (r.answer(), r.is_exact(), Some(r.into()), None)
            }
            (Engines::Combined(m, e), Mode::Combined { eps, window }) => {
                echo.epsilon = Some(eps);
                echo.window = Some(window);
                let r = e.finish();
                let reported = if r.is_exact() { r.answer() } else { m.answer() };
                (
                    reported,
                    r.is_exact(),
                    Some(r.into()),
                    Some(m.answer().into()),
                )
            }
            _ => unreachable!("engines are built from the mode"),
        };
        RunReport {
            mode: config.mode.name(),
            n: self.n,
            length: answer.len,
            start: answer.pos,
            exact,
            space_words: self.peak_space,
            max_ops_per_push: self.max_ops,
            config: echo,
            window,
            approx,
            oracle_len: None,
            bound_satisfied: None,
            witness_valid: None,
        }
    }
}

impl RunReport {
    pub fn answer(&self) -> Answer {
        Answer::new(self.start, self.length)
    }
}

fn alphabet_table(alphabet: &Option<Vec<u8>>) -> Option<[bool; 256]> {
    alphabet.as_ref().map(|letters| {
        let mut table = [false; 256];
        for &b in letters {
            table[b as usize] = true;
        }
        table
    })
}

/// Reads `reader` once from start to end and hands each byte to `f`,
/// rejecting bytes outside `alphabet`.
pub fn for_each_byte(
    reader: impl Read,
    alphabet: &Option<Vec<u8>>,
    mut f: impl FnMut(u8),
) -> Result<(), CliError> {
    let allowed = alphabet_table(alphabet);
    let mut reader = BufReader::with_capacity(1 << 16, reader);
    let mut offset = 0u64;
    loop {
        let chunk = reader
            .fill_buf()
            .map_err(|e| CliError::io("reading input", e))?;
        if chunk.is_empty() {
            return Ok(());
        }
        for &byte in chunk {
            if let Some(table) = &allowed {
                if !table[byte as usize] {
                    return Err(CliError::Alphabet { byte, offset });
                }
            }
            f(byte);
            offset += 1;
        }
        let used = chunk.len();
        reader.consume(used);
    }
}

/// Streams the input through the configured engines.
pub fn run(config: &RunConfig, reader: impl Read) -> Result<RunReport, CliError> {
    let mut runner = Runner::new(config.clone())?;
    for_each_byte(reader, &config.alphabet, |b| runner.push(Symbol::from(b)))?;
    Ok(runner.report())
}

/// Like [`run`], but keeps the input and compares the result with the
/// offline oracle.
pub fn verify(config: &RunConfig, reader: impl Read) -> Result<RunReport, CliError> {
    let mut runner = Runner::new(config.clone())?;
    let mut stream = Vec::new();
    for_each_byte(reader, &config.alphabet, |b| {
        runner.push(Symbol::from(b));
        stream.push(Symbol::from(b));
    })?;
    let oracle = if config.complement {
        oracle_lps_complement(&stream, &config.complement_map())
    } else {
        oracle_lps(&stream)
    };
    let mut report = runner.report();
    let witness = if config.complement {
        let map = config.complement_map();
        let w = &stream[report.answer().range()];
        w.iter()
            .zip(w.iter().rev())
            .all(|(&a, &b)| a == map.apply(b))
    } else {
        is_palindrome_at(&stream, report.answer())
    };
    let satisfied = bound_satisfied(config.mode, &report, runner.window_result(), oracle.len);
    report.exact = report.length == oracle.len;
    report.oracle_len = Some(oracle.len);
    report.bound_satisfied = Some(satisfied);
    report.witness_valid = Some(witness);
    Ok(report)
}

fn window_contract(r: &ExactResult, window: u64, truth: u64) -> bool {
    if truth < window {
        r.is_exact() && r.len == truth
    } else {
        !r.is_exact() && (r.len == window || r.len == window + 1)
    }
}

fn multiplicative_bound(len: u64, eps: f64, truth: u64) -> bool {
    len <= truth && len as f64 * (1.0 + eps) >= truth as f64
}

/// Whether the reported length meets its mode's guarantee against the true
/// longest palindrome length `truth`.
pub fn bound_satisfied(
    mode: Mode,
    report: &RunReport,
    window: Option<ExactResult>,
    truth: u64,
) -> bool {
    let len = report.length;
    match (mode, window) {
        (Mode::Additive { error }, _) => len <= truth && len + error >= truth,
        (Mode::Multiplicative { eps }, _) => multiplicative_bound(len, eps, truth),
        (Mode::Exact { window }, Some(r)) => window_contract(&r, window, truth),
        (Mode::Combined { eps, window }, Some(r)) => {
            let approx = report.approx.map_or(0, |s| s.length);
            window_contract(&r, window, truth)
                && multiplicative_bound(approx, eps, truth)
                && (if r.is_exact() {
                    len == truth
                } else {
                    len == approx
                })
        }
        _ => false,
    }
}
