use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Write};
use std::ops::AddAssign;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rand::seq::index::sample;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::enumerate::{candidate_rows, enumerate_shard, projected_count, SpaceParams};
use super::{check_graph_at, confirm_failure, encode, CheckOutcome, PredicateConfig, Verdict};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::par::par_map;

/// Largest projected class count that is enumerated exhaustively.
pub const DEFAULT_EXHAUSTIVE_LIMIT: u128 = 10_000_000;

const SAMPLE_CHUNK: u64 = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub examined: u64,
    pub not_met: u64,
    pub passed: u64,
    pub failed: u64,
    pub undecided: u64,
}

impl Totals {
    fn count(&mut self, v: &Verdict) {
        self.examined += 1;
        match v {
            Verdict::HypothesesNotMet => self.not_met += 1,
            Verdict::Pass => self.passed += 1,
            Verdict::Fail => self.failed += 1,
            Verdict::Undecided => self.undecided += 1,
        }
    }

    fn to_fields(self) -> String {
        format!(
            "examined={} not_met={} passed={} failed={} undecided={}",
            self.examined, self.not_met, self.passed, self.failed, self.undecided
        )
    }

    fn from_fields(fields: &[&str]) -> Result<Self> {
        let mut t = Totals::default();
        for f in fields {
            let (k, v) = f.split_once('=').ok_or_else(|| Error::Parse(format!("bad field {f:?}")))?;
            let v: u64 = v.parse().map_err(|_| Error::Parse(format!("bad count {f:?}")))?;
            match k {
                "examined" => t.examined = v,
                "not_met" => t.not_met = v,
                "passed" => t.passed = v,
                "failed" => t.failed = v,
                "undecided" => t.undecided = v,
                _ => return Err(Error::Parse(format!("unknown field {k:?}"))),
            }
        }
        Ok(t)
    }
}

impl AddAssign for Totals {
    fn add_assign(&mut self, o: Totals) {
        self.examined += o.examined;
        self.not_met += o.not_met;
        self.passed += o.passed;
        self.failed += o.failed;
        self.undecided += o.undecided;
    }
}

/// One examined graph, as logged and reported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    /// Canonical `.bg` text.
    pub encoding: String,
    pub n: usize,
    pub m: usize,
    pub delta: Option<usize>,
    pub verdict: Verdict,
    pub nodes: u64,
}

impl Finding {
    fn new(g: &BipartiteGraph, out: &CheckOutcome) -> Self {
        Finding {
            encoding: encode(g).text,
            n: g.n(),
            m: g.m(),
            delta: out.delta,
            verdict: out.verdict.clone(),
            nodes: out.stats.nodes,
        }
    }
}

/// Output locations shared by [`verify_theorem`] and [`hunt`].
#[derive(Clone, Debug, Default)]
pub struct RunFiles {
    /// Plain-text progress: one line per finished shard. Existing shards
    /// are skipped on rerun.
    pub resume: Option<PathBuf>,
    /// Undecided graphs, one JSON record per line.
    pub retry: Option<PathBuf>,
    /// JSON-lines log: every failure, and every graph at verbosity ≥ 2.
    pub log: Option<PathBuf>,
    pub verbosity: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    /// Inclusive range of `n`.
    pub n: (usize, usize),
    /// Inclusive range of `m`.
    pub m: (usize, usize),
    /// Minimum X-degree of the enumerated class; `None` means `δ = n`.
    pub delta: Option<usize>,
    pub config: PredicateConfig,
    pub budget: u64,
    pub jobs: usize,
    pub exhaustive_limit: u128,
    /// Samples per `(n, m)` when a block falls back to sampling.
    pub fallback_samples: u64,
    pub seed: u64,
}

impl VerifyParams {
    pub fn new(n: (usize, usize), m: (usize, usize), delta: Option<usize>, config: PredicateConfig) -> Self {
        VerifyParams {
            n,
            m,
            delta,
            config,
            budget: crate::search::DEFAULT_BUDGET,
            jobs: 0,
            exhaustive_limit: DEFAULT_EXHAUSTIVE_LIMIT,
            fallback_samples: 10_000,
            seed: 0,
        }
    }

    fn header(&self) -> String {
        format!(
            "params predicate={} k={} n={}..{} m={}..{} delta={} limit={} samples={} seed={}",
            self.config.name,
            self.config.connectivity_k,
            self.n.0,
            self.n.1,
            self.m.0,
            self.m.1,
            self.delta.map_or("n".to_string(), |d| d.to_string()),
            self.exhaustive_limit,
            self.fallback_samples,
            self.seed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub mode: Mode,
    /// The degree bound fails at `(n, m, δ)`, so nothing is enumerated.
    pub vacuous: bool,
    pub projected: u128,
    pub totals: Totals,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub predicate: String,
    pub blocks: Vec<BlockReport>,
    pub totals: Totals,
    pub failures: Vec<Finding>,
    pub undecided: Vec<Finding>,
    pub notices: Vec<String>,
    pub units: usize,
    pub resumed_units: usize,
    /// Every shard ran to the end.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Unit {
    Shard { n: usize, m: usize, delta: usize, shard: usize },
    Samples { n: usize, m: usize, delta: usize, start: u64, count: u64 },
}

impl Unit {
    fn key(&self) -> String {
        match *self {
            Unit::Shard { n, m, delta, shard } => format!("{n}/{m}/{delta}/s{shard}"),
            Unit::Samples { n, m, delta, start, .. } => format!("{n}/{m}/{delta}/r{start}"),
        }
    }

    fn block(&self) -> (usize, usize) {
        match *self {
            Unit::Shard { n, m, .. } | Unit::Samples { n, m, .. } => (n, m),
        }
    }
}

#[derive(Clone, Debug, Default)]
struct UnitResult {
    totals: Totals,
    failures: Vec<Finding>,
    undecided: Vec<Finding>,
}

/// Shared sinks; every write is whole-line and serialized by a lock.
struct Sinks {
    log: Option<Mutex<BufWriter<File>>>,
    retry: Option<Mutex<File>>,
    progress: Option<(PathBuf, Mutex<Vec<String>>)>,
    verbosity: u8,
}

fn append_file(path: &Path) -> Result<File> {
    Ok(OpenOptions::new().create(true).append(true).open(path)?)
}

impl Sinks {
    fn open(files: &RunFiles, progress: Option<Vec<String>>) -> Result<Self> {
        Ok(Sinks {
            log: files.log.as_deref().map(append_file).transpose()?.map(|f| Mutex::new(BufWriter::new(f))),
            retry: files.retry.as_deref().map(append_file).transpose()?.map(Mutex::new),
            progress: files.resume.clone().zip(progress).map(|(p, lines)| (p, Mutex::new(lines))),
            verbosity: files.verbosity,
        })
    }

    fn log(&self, f: &Finding) -> Result<()> {
        if let Some(log) = &self.log {
            let line = serde_json::to_string(f)?;
            writeln!(log.lock().unwrap(), "{line}")?;
        }
        Ok(())
    }

    fn record(&self, g: &BipartiteGraph, out: &CheckOutcome, result: &mut UnitResult) -> Result<()> {
        result.totals.count(&out.verdict);
        let interesting = matches!(out.verdict, Verdict::Fail | Verdict::Undecided);
        if !interesting && self.verbosity < 2 {
            return Ok(());
        }
        let f = Finding::new(g, out);
        self.log(&f)?;
        match out.verdict {
            Verdict::Fail => result.failures.push(f),
            Verdict::Undecided => {
                if let Some(r) = &self.retry {
                    writeln!(r.lock().unwrap(), "{}", serde_json::to_string(&f)?)?;
                }
                result.undecided.push(f);
            }
            _ => {}
        }
        Ok(())
    }

    /// Appends a finished unit to the progress file, replacing it atomically.
    fn finish(&self, unit: &Unit, r: &UnitResult) -> Result<()> {
        let Some((path, lines)) = &self.progress else { return Ok(()) };
        let mut lines = lines.lock().unwrap();
        for f in &r.failures {
            lines.push(format!("fail {} {}", unit.key(), serde_json::to_string(f)?));
        }
        for f in &r.undecided {
            lines.push(format!("undecided {} {}", unit.key(), serde_json::to_string(f)?));
        }
        lines.push(format!("done {} {}", unit.key(), r.totals.to_fields()));
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, lines.join("\n") + "\n")?;
        fs::rename(&tmp, path)?;
        Ok(())
    }

    fn flush(&self) -> Result<()> {
        if let Some(log) = &self.log {
            log.lock().unwrap().flush()?;
        }
        Ok(())
    }
}

/// Checks one graph, re-running any failure with an unlimited budget.
fn judge(g: &BipartiteGraph, config: &PredicateConfig, delta: usize, budget: u64) -> Result<CheckOutcome> {
    let out = check_graph_at(g, config, Some(delta), budget)?;
    if out.verdict != Verdict::Fail {
        return Ok(out);
    }
    match confirm_failure(g, config, Some(delta))? {
        Some(confirmed) => Ok(confirmed),
        None => check_graph_at(g, config, Some(delta), u64::MAX),
    }
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// The generator for sample `index` of stream `stream`; independent of
/// how samples are split across workers.
fn sample_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(seed ^ mix(stream ^ mix(index))))
}

/// `n` random X-neighbourhoods with sizes uniform in `[δ, m]`, `m` drawn
/// from `ms`; `None` when no `m` admits a row of size `δ`.
fn draw(rng: &mut ChaCha8Rng, n: usize, ms: &[usize], delta: usize) -> Option<BipartiteGraph> {
    let &m = ms.choose(rng)?;
    let rows = (0..n)
        .map(|_| {
            let size = rng.gen_range(delta..=m);
            let mut r = sample(rng, m, size).into_vec();
            r.sort_unstable();
            r
        })
        .collect();
    Some(BipartiteGraph::from_rows_unchecked(n, m, rows))
}

fn run_unit(unit: Unit, config: &PredicateConfig, budget: u64, seed: u64, sinks: &Sinks) -> Result<UnitResult> {
    let mut result = UnitResult::default();
    match unit {
        Unit::Shard { n, m, delta, shard } => {
            let p = SpaceParams::new(n, m, delta, config.connectivity_k);
            let rows = candidate_rows(&p);
            let mut err = None;
            enumerate_shard(&p, &rows, shard, &mut |g| {
                if err.is_some() {
                    return;
                }
                if let Err(e) = judge(&g, config, delta, budget).and_then(|out| sinks.record(&g, &out, &mut result)) {
                    err = Some(e);
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        Unit::Samples { n, m, delta, start, count } => {
            let stream = ((n as u64) << 32) | m as u64;
            for i in start..start + count {
                let Some(g) = draw(&mut sample_rng(seed, stream, i), n, &[m], delta) else { continue };
                let out = judge(&g, config, delta, budget)?;
                sinks.record(&g, &out, &mut result)?;
            }
        }
    }
    sinks.finish(&unit, &result)?;
    Ok(result)
}

type Resumed = HashMap<String, UnitResult>;

fn load_progress(path: &Path, header: &str) -> Result<(Vec<String>, Resumed)> {
    if !path.exists() {
        return Ok((vec![header.to_string()], HashMap::new()));
    }
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == header => {}
        Some(h) => return Err(Error::InvalidParams(format!("resume file was written for {h:?}"))),
        None => return Ok((vec![header.to_string()], HashMap::new())),
    }
    let mut pending: HashMap<String, UnitResult> = HashMap::new();
    let mut done: Resumed = HashMap::new();
    let mut kept = vec![header.to_string()];
    for line in lines {
        let mut parts = line.splitn(3, ' ');
        let (kind, key, rest) = (parts.next().unwrap_or(""), parts.next().unwrap_or(""), parts.next().unwrap_or(""));
        match kind {
            "fail" => pending.entry(key.into()).or_default().failures.push(serde_json::from_str(rest)?),
            "undecided" => pending.entry(key.into()).or_default().undecided.push(serde_json::from_str(rest)?),
            "done" => {
                let mut r = pending.remove(key).unwrap_or_default();
                r.totals = Totals::from_fields(&rest.split(' ').collect::<Vec<_>>())?;
                done.insert(key.into(), r);
            }
            "" => continue,
            _ => return Err(Error::Parse(format!("bad progress line {line:?}"))),
        }
        kept.push(line.to_string());
    }
    // Lines of a unit that never finished are dropped; it reruns in full.
    kept.retain(|l| {
        let key = l.split(' ').nth(1).unwrap_or("");
        l.starts_with("params") || done.contains_key(key)
    });
    Ok((kept, done))
}

/// Checks `config` on every class of `G(n, m, δ)` over the given ranges,
/// one shard per first row. Blocks whose projected size exceeds
/// `exhaustive_limit` are sampled instead, with a notice. Finished shards
/// recorded in `files.resume` are not rerun.
pub fn verify_theorem(params: &VerifyParams, files: &RunFiles) -> Result<VerifyReport> {
    if params.n.0 > params.n.1 || params.m.0 > params.m.1 {
        return Err(Error::InvalidParams("empty range".into()));
    }
    let header = params.header();
    let (progress, resumed) = match &files.resume {
        Some(p) => {
            let (lines, done) = load_progress(p, &header)?;
            (Some(lines), done)
        }
        None => (None, HashMap::new()),
    };
    let sinks = Sinks::open(files, progress)?;

    let mut blocks = Vec::new();
    let mut notices = Vec::new();
    let mut units = Vec::new();
    for n in params.n.0..=params.n.1 {
        let delta = params.delta.unwrap_or(n);
        for m in params.m.0..=params.m.1 {
            let p = SpaceParams::new(n, m, delta, params.config.connectivity_k);
            let projected = projected_count(&p);
            let vacuous = !params.config.bound_holds(n, m, delta);
            let mode = if vacuous {
                notices.push(format!("n={n} m={m} δ={delta}: degree bound fails, block is vacuous"));
                Mode::Exhaustive
            } else if projected > params.exhaustive_limit {
                notices.push(format!(
                    "n={n} m={m} δ={delta}: projected {projected} classes exceeds {}; sampling {} graphs",
                    params.exhaustive_limit, params.fallback_samples
                ));
                let mut start = 0;
                while start < params.fallback_samples {
                    let count = SAMPLE_CHUNK.min(params.fallback_samples - start);
                    units.push(Unit::Samples { n, m, delta, start, count });
                    start += count;
                }
                Mode::Sampled
            } else {
                let shards = candidate_rows(&p).len();
                units.extend((0..shards).map(|shard| Unit::Shard { n, m, delta, shard }));
                Mode::Exhaustive
            };
            blocks.push(BlockReport { n, m, delta, mode, vacuous, projected, totals: Totals::default() });
        }
    }

    let total_units = units.len();
    let (done, todo): (Vec<Unit>, Vec<Unit>) = units.into_iter().partition(|u| resumed.contains_key(&u.key()));
    let fresh = par_map(params.jobs, todo.clone(), |u| run_unit(u, &params.config, params.budget, params.seed, &sinks));
    sinks.flush()?;

    let mut report = VerifyReport {
        predicate: params.config.name.clone(),
        blocks,
        totals: Totals::default(),
        failures: Vec::new(),
        undecided: Vec::new(),
        notices,
        units: total_units,
        resumed_units: done.len(),
        complete: true,
    };
    let finished = done.iter().map(|u| (*u, Ok(resumed[&u.key()].clone()))).chain(todo.into_iter().zip(fresh));
    for (unit, r) in finished {
        let r = r?;
        let (n, m) = unit.block();
        if let Some(b) = report.blocks.iter_mut().find(|b| b.n == n && b.m == m) {
            b.totals += r.totals;
        }
        report.totals += r.totals;
        report.failures.extend(r.failures);
        report.undecided.extend(r.undecided);
    }
    report.failures.sort_by(|a, b| a.encoding.cmp(&b.encoding));
    report.undecided.sort_by(|a, b| a.encoding.cmp(&b.encoding));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntParams {
    pub n: usize,
    /// Inclusive range of `m`; values below `δ` are never drawn.
    pub m: (usize, usize),
    pub delta: usize,
    pub samples: u64,
    pub seed: u64,
    pub budget: u64,
    pub jobs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntReport {
    pub predicate: String,
    pub params: HuntParams,
    /// Graphs actually drawn; zero when no `m` in range reaches `δ`.
    pub drawn: u64,
    pub totals: Totals,
    /// Failures, each confirmed with an unlimited budget.
    pub findings: Vec<Finding>,
    pub undecided: Vec<Finding>,
}

/// Samples random graphs with X-degrees at least `δ` and checks `config`
/// on each; sample `i` depends only on `(seed, i)`.
pub fn hunt(config: &PredicateConfig, params: &HuntParams, files: &RunFiles) -> Result<HuntReport> {
    let sinks = Sinks::open(&RunFiles { resume: None, ..files.clone() }, None)?;
    let ms: Vec<usize> = (params.m.0..=params.m.1).filter(|&m| m >= params.delta && m > 0).collect();
    let mut report = HuntReport {
        predicate: config.name.clone(),
        params: params.clone(),
        drawn: 0,
        totals: Totals::default(),
        findings: Vec::new(),
        undecided: Vec::new(),
    };
    if ms.is_empty() || params.n == 0 {
        return Ok(report);
    }
    let chunks: Vec<(u64, u64)> =
        (0..params.samples).step_by(SAMPLE_CHUNK as usize).map(|s| (s, SAMPLE_CHUNK.min(params.samples - s))).collect();
    let results = par_map(params.jobs, chunks, |(start, count)| -> Result<UnitResult> {
        let mut r = UnitResult::default();
        for i in start..start + count {
            let g = draw(&mut sample_rng(params.seed, 0, i), params.n, &ms, params.delta).expect("non-empty m range");
            let out = judge(&g, config, params.delta, params.budget)?;
            sinks.record(&g, &out, &mut r)?;
        }
        Ok(r)
    });
    sinks.flush()?;
    for r in results {
        let r = r?;
        report.totals += r.totals;
        report.findings.extend(r.failures);
        report.undecided.extend(r.undecided);
    }
    report.drawn = report.totals.examined;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quarter(n: (usize, usize), m: (usize, usize)) -> VerifyParams {
        VerifyParams::new(n, m, None, PredicateConfig::three_conn_quarter())
    }

    #[test]
    fn vacuous_range_examines_nothing_that_qualifies() {
        // n = δ = 3 forces m ≤ 2 < δ: no graph meets the hypotheses.
        let r = verify_theorem(&quarter((3, 3), (3, 5)), &RunFiles::default()).unwrap();
        assert_eq!(r.totals, Totals::default());
        assert!(r.blocks.iter().all(|b| b.vacuous));
        assert_eq!(r.units, 0);
        assert!(r.complete);
    }

    #[test]
    fn jobs_do_not_change_totals() {
        let mut p = quarter((4, 4), (4, 6));
        p.jobs = 1;
        let seq = verify_theorem(&p, &RunFiles::default()).unwrap();
        p.jobs = 0;
        let par = verify_theorem(&p, &RunFiles::default()).unwrap();
        assert_eq!(seq.totals, par.totals);
        assert_eq!(seq.totals.failed, 0);
        assert!(seq.totals.passed > 0);
    }

    #[test]
    fn resume_reproduces_totals() {
        let dir = tempfile::tempdir().unwrap();
        let files = RunFiles { resume: Some(dir.path().join("cursor.txt")), ..RunFiles::default() };
        let p = quarter((4, 4), (4, 5));
        let first = verify_theorem(&p, &files).unwrap();
        let second = verify_theorem(&p, &files).unwrap();
        assert_eq!(first.totals, second.totals);
        assert_eq!(second.resumed_units, second.units);
        assert_eq!(first.resumed_units, 0);
        let mut other = p.clone();
        other.seed = 1;
        assert!(verify_theorem(&other, &files).is_err());
    }

    #[test]
    fn partial_progress_reruns_missing_shards() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cursor.txt");
        let files = RunFiles { resume: Some(path.clone()), ..RunFiles::default() };
        let p = quarter((4, 4), (5, 5));
        let full = verify_theorem(&p, &files).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        let cut: Vec<&str> = text.lines().take(3).collect();
        fs::write(&path, cut.join("\n") + "\n").unwrap();
        let again = verify_theorem(&p, &files).unwrap();
        assert_eq!(full.totals, again.totals);
        assert!(again.resumed_units < again.units);
    }

    #[test]
    fn over_limit_blocks_are_sampled() {
        let mut p = quarter((4, 4), (6, 6));
        p.exhaustive_limit = 10;
        p.fallback_samples = 300;
        let r = verify_theorem(&p, &RunFiles::default()).unwrap();
        assert_eq!(r.blocks[0].mode, Mode::Sampled);
        assert_eq!(r.totals.examined, 300);
        assert_eq!(r.notices.len(), 1);
    }

    #[test]
    fn undecided_goes_to_retry_file() {
        let dir = tempfile::tempdir().unwrap();
        let files = RunFiles {
            retry: Some(dir.path().join("retry.jsonl")),
            log: Some(dir.path().join("log.jsonl")),
            ..RunFiles::default()
        };
        let mut p = quarter((4, 4), (4, 4));
        p.budget = 1;
        let r = verify_theorem(&p, &files).unwrap();
        assert!(r.totals.undecided > 0);
        assert_eq!(r.totals.passed, 0);
        let retry = fs::read_to_string(dir.path().join("retry.jsonl")).unwrap();
        assert_eq!(retry.lines().count() as u64, r.totals.undecided);
        let rec: Finding = serde_json::from_str(retry.lines().next().unwrap()).unwrap();
        assert_eq!(rec.verdict, Verdict::Undecided);
    }

    #[test]
    fn verbose_log_has_a_record_per_graph() {
        let dir = tempfile::tempdir().unwrap();
        let log = dir.path().join("log.jsonl");
        let files = RunFiles { log: Some(log.clone()), verbosity: 2, ..RunFiles::default() };
        let r = verify_theorem(&quarter((4, 4), (4, 4)), &files).unwrap();
        let text = fs::read_to_string(log).unwrap();
        assert_eq!(text.lines().count() as u64, r.totals.examined);
    }

    #[test]
    fn hunt_is_reproducible_and_job_independent() {
        let params = HuntParams { n: 5, m: (5, 10), delta: 5, samples: 600, seed: 4, budget: 1_000_000, jobs: 1 };
        let cfg = PredicateConfig::three_conn_quarter();
        let a = hunt(&cfg, &params, &RunFiles::default()).unwrap();
        let b = hunt(&cfg, &HuntParams { jobs: 0, ..params.clone() }, &RunFiles::default()).unwrap();
        assert_eq!(a, HuntReport { params: a.params.clone(), ..b });
        assert_eq!(a.drawn, 600);
        assert_eq!(a.totals.failed, 0);
    }

    #[test]
    fn hunt_with_delta_above_m_draws_nothing() {
        let params = HuntParams { n: 4, m: (2, 3), delta: 4, samples: 100, seed: 0, budget: 1000, jobs: 1 };
        let r = hunt(&PredicateConfig::three_conn_quarter(), &params, &RunFiles::default()).unwrap();
        assert_eq!(r.drawn, 0);
    }
}
