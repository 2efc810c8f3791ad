use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use berge_core::constructions::{build_con4, build_gk, check_certificate, Certificate, GkParams};
use berge_core::io::{format_bg, format_hg, parse_bg, parse_hg, write_bg, write_hg};
use berge_core::search::{find_x_spanning_cycle_with_stats, longest_cycle_with_stats};
use berge_core::surgery::{
    best_triple, classify_config_types, improve_search, is_abundant, ImproveConfig, SegmentView,
};
use berge_core::verify::{hunt, sharpness_report, verify_theorem, HuntParams, PredicateConfig, RunFiles, VerifyParams};
use berge_core::{
    berge_from_incidence_cycle, incidence_graph, is_k_connected, max_fan, to_hypergraph, vertex_connectivity, AltCycle,
    BipartiteGraph,
};
use serde::Serialize;
use serde_json::json;

use crate::input::{check_extension, load_graph};
use crate::{Cli, Command, Gen, HuntArgs, Status, VerifyArgs};

struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, value: &impl Serialize, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(value)?);
        } else {
            println!("{}", text());
        }
        Ok(())
    }
}

pub fn run(cli: Cli) -> Result<Status> {
    let out = Out { json: cli.json };
    match cli.command {
        Command::Gen(g) => gen(&out, g),
        Command::Transform { input, o } => transform(&input, &o),
        Command::Conn { input, k } => conn(&out, &input, k),
        Command::Fan { input, x, cycle } => fan(&out, &input, x, &cycle),
        Command::Longest { input, budget } => longest(&out, &input, budget.budget),
        Command::Ham { input, budget } => ham(&out, &input, budget.budget),
        Command::Improve { input, seed, rounds, log } => improve(&out, &input, seed, rounds, log.as_deref()),
        Command::Classify { input, cycle } => classify(&out, &input, &cycle),
        Command::Verify(args) => verify(&out, args, cli.v),
        Command::Hunt(args) => hunt_cmd(&out, args, cli.v),
        Command::Sharpness { k, delta, parts, budget } => sharpness(&out, k, delta, parts, budget.budget),
    }
}

fn cert_path(o: &Path) -> PathBuf {
    let mut s = o.as_os_str().to_owned();
    s.push(".cert.json");
    PathBuf::from(s)
}

fn write_cert(o: &Path, cert: &Certificate) -> Result<()> {
    let path = cert_path(o);
    fs::write(&path, serde_json::to_string_pretty(cert)? + "\n").with_context(|| format!("writing {}", path.display()))
}

fn gen(out: &Out, g: Gen) -> Result<Status> {
    match g {
        Gen::Gk { k, parts, delta, o } => {
            let (graph, cert) = build_gk(&GkParams::new(k, parts, delta)?)?;
            match o {
                Some(o) => {
                    write_bg(&o, &graph)?;
                    write_cert(&o, &cert)?;
                    out.emit(
                        &json!({ "graph": o, "certificate": cert_path(&o), "n": graph.n(), "m": graph.m() }),
                        || format!("wrote {} (n = {}, m = {})", o.display(), graph.n(), graph.m()),
                    )?;
                }
                None => print!("{}", format_bg(&graph)),
            }
        }
        Gen::Con4 { n, o } => {
            let (h, cert) = build_con4(n)?;
            match o {
                Some(o) => {
                    write_hg(&o, &h)?;
                    write_cert(&o, &cert)?;
                    out.emit(
                        &json!({ "hypergraph": o, "certificate": cert_path(&o), "edges": h.edges().len() }),
                        || format!("wrote {} ({} vertices, {} edges)", o.display(), h.vertex_count(), h.edges().len()),
                    )?;
                }
                None => print!("{}", format_hg(&h)),
            }
        }
    }
    Ok(Status::Ok)
}

fn transform(input: &Path, o: &Path) -> Result<Status> {
    let from_hg = check_extension(input)?;
    if check_extension(o)? == from_hg {
        bail!("output {} must use the other format", o.display());
    }
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    if from_hg {
        write_bg(o, &incidence_graph(&parse_hg(&text)?))?;
    } else {
        write_hg(o, &to_hypergraph(&parse_bg(&text)?))?;
    }
    Ok(Status::Ok)
}

fn conn(out: &Out, input: &Path, k: Option<usize>) -> Result<Status> {
    let g = load_graph(input)?;
    let kappa = vertex_connectivity(&g);
    let ok = k.map(|k| is_k_connected(&g, k));
    out.emit(&json!({ "connectivity": kappa, "k": k, "k_connected": ok }), || match (k, ok) {
        (Some(k), Some(true)) => format!("connectivity {kappa}: {k}-connected"),
        (Some(k), _) => format!("connectivity {kappa}: not {k}-connected"),
        _ => format!("connectivity {kappa}"),
    })?;
    Ok(if ok == Some(false) { Status::Found } else { Status::Ok })
}

fn parse_cycle(g: &BipartiteGraph, text: &str) -> Result<AltCycle> {
    let c: AltCycle = text.parse()?;
    c.check_in(g)?;
    Ok(c)
}

fn fan(out: &Out, input: &Path, x: usize, cycle: &str) -> Result<Status> {
    let g = load_graph(input)?;
    let c = parse_cycle(&g, cycle)?;
    let f = max_fan(&g, x, &c)?;
    out.emit(&f, || {
        let mut s = format!("fan of size {} from x{}", f.size(), f.apex);
        for p in &f.paths {
            let path: Vec<String> = p.iter().map(ToString::to_string).collect();
            s.push_str(&format!("\n  {}", path.join(" ")));
        }
        s
    })?;
    Ok(Status::Ok)
}

fn longest(out: &Out, input: &Path, budget: u64) -> Result<Status> {
    let g = load_graph(input)?;
    let (c, stats) = longest_cycle_with_stats(&g, budget)?;
    let len = c.as_ref().map_or(0, AltCycle::len);
    out.emit(&json!({ "length": len, "cycle": c, "stats": stats }), || match &c {
        Some(c) => format!("longest cycle has {len} vertices\n{c}"),
        None => "no cycle".into(),
    })?;
    Ok(Status::Ok)
}

fn ham(out: &Out, input: &Path, budget: u64) -> Result<Status> {
    let g = load_graph(input)?;
    let (c, stats) = find_x_spanning_cycle_with_stats(&g, budget)?;
    let berge = match (&c, input.extension().is_some_and(|e| e == "hg")) {
        (Some(c), true) => Some(berge_from_incidence_cycle(&to_hypergraph(&g), c)?),
        _ => None,
    };
    out.emit(&json!({ "found": c.is_some(), "cycle": c, "berge": berge.as_ref().map(|b| json!({ "vertices": b.base_vertices, "edges": b.edges })), "stats": stats }), || match (&c, &berge) {
        (Some(c), Some(b)) => format!("X-spanning cycle\n{c}\nBerge cycle: vertices {:?}, edges {:?}", b.base_vertices, b.edges),
        (Some(c), None) => format!("X-spanning cycle\n{c}"),
        _ => "no X-spanning cycle".into(),
    })?;
    Ok(if c.is_some() { Status::Ok } else { Status::Found })
}

fn improve(out: &Out, input: &Path, seed: u64, rounds: u64, log: Option<&Path>) -> Result<Status> {
    let g = load_graph(input)?;
    let r = improve_search(&g, &ImproveConfig { rounds, seed })?;
    if let Some(path) = log {
        let mut w = BufWriter::new(File::create(path).with_context(|| format!("creating {}", path.display()))?);
        for t in &r.trace {
            writeln!(w, "{}", serde_json::to_string(t)?)?;
        }
        w.flush()?;
    }
    out.emit(
        &json!({ "length": r.best.len(), "spans_x": r.spans_x, "rounds": r.rounds, "restarts": r.restarts, "cycle": r.best }),
        || {
            format!(
                "best cycle has {} vertices{} after {} rounds, {} restarts\n{}",
                r.best.len(),
                if r.spans_x { " and spans X" } else { "" },
                r.rounds,
                r.restarts,
                r.best
            )
        },
    )?;
    Ok(Status::Ok)
}

fn classify(out: &Out, input: &Path, cycle: &str) -> Result<Status> {
    let g = load_graph(input)?;
    let c = parse_cycle(&g, cycle)?;
    let Some(t) = best_triple(&g, &c)? else {
        out.emit(&json!({ "spans_x": true }), || "cycle spans X; no triple".into())?;
        return Ok(Status::Ok);
    };
    let key = t.key();
    let (types, abundant) = if t.t_tilde.len() == 3 {
        let seg = SegmentView::new(&c, &t.t_tilde)?;
        let report = classify_config_types(&g, &c, &seg);
        let abundant: Vec<bool> = (1..=3).map(|i| is_abundant(&g, &c, &seg, i)).collect();
        (Some(report), Some(abundant))
    } else {
        (None, None)
    };
    let t_tilde: Vec<String> = t.t_tilde.iter().map(ToString::to_string).collect();
    out.emit(
        &json!({ "apex": t.apex, "key": key, "t_tilde": t_tilde, "config": types, "abundant": abundant }),
        || {
            let mut s = format!(
                "best triple: apex x{}, |C| = {}, t = {} (t_y = {}), |V(F)| = {}, |V(D)| = {}\nT~ = {}",
                t.apex,
                key.cycle_len,
                key.t,
                key.t_y,
                key.fan_size,
                key.d_size,
                t_tilde.join(" ")
            );
            match (&types, &abundant) {
                (Some(r), Some(a)) => {
                    for (i, ty) in &r.types {
                        s.push_str(&format!("\ntype {ty:?} at segment {i}"));
                    }
                    s.push_str(&format!("\nabundant segments: {a:?}"));
                }
                _ => s.push_str("\nsegment view needs |T~| = 3"),
            }
            s
        },
    )?;
    Ok(Status::Ok)
}

fn predicate(name: &str, k: Option<usize>) -> Result<PredicateConfig> {
    Ok(PredicateConfig::named(name, k)?)
}

fn write_report(o: Option<&Path>, value: &impl Serialize) -> Result<()> {
    if let Some(o) = o {
        fs::write(o, serde_json::to_string_pretty(value)? + "\n")
            .with_context(|| format!("writing {}", o.display()))?;
    }
    Ok(())
}

fn verdict_status(failures: usize, undecided: usize) -> Status {
    if failures > 0 {
        Status::Found
    } else if undecided > 0 {
        Status::Budget
    } else {
        Status::Ok
    }
}

fn verify(out: &Out, a: VerifyArgs, verbosity: u8) -> Result<Status> {
    let config = predicate(&a.predicate.predicate, a.predicate.k)?;
    let mut p = VerifyParams::new((a.n.lo, a.n.hi), (a.m.lo, a.m.hi), a.delta, config);
    p.budget = a.budget.budget;
    p.jobs = a.jobs;
    p.seed = a.seed;
    p.fallback_samples = a.samples;
    let files = RunFiles { resume: a.resume, retry: a.retry, log: a.log, verbosity };
    let r = verify_theorem(&p, &files)?;
    write_report(a.o.as_deref(), &r)?;
    out.emit(&r, || {
        let mut s = String::new();
        for n in &r.notices {
            s.push_str(&format!("notice: {n}\n"));
        }
        for b in &r.blocks {
            s.push_str(&format!(
                "n={} m={} δ={} {:?}{}: examined {} not-met {} pass {} fail {} undecided {}\n",
                b.n,
                b.m,
                b.delta,
                b.mode,
                if b.vacuous { " (vacuous)" } else { "" },
                b.totals.examined,
                b.totals.not_met,
                b.totals.passed,
                b.totals.failed,
                b.totals.undecided
            ));
        }
        for f in &r.failures {
            s.push_str(&format!("FAIL n={} m={}\n{}", f.n, f.m, f.encoding));
        }
        let t = r.totals;
        s.push_str(&format!(
            "{}: {} graphs, {} failures, {} undecided ({} of {} shards resumed)",
            r.predicate, t.examined, t.failed, t.undecided, r.resumed_units, r.units
        ));
        s
    })?;
    Ok(verdict_status(r.failures.len(), r.undecided.len()))
}

fn hunt_cmd(out: &Out, a: HuntArgs, verbosity: u8) -> Result<Status> {
    let config = predicate(&a.predicate.predicate, a.predicate.k)?;
    let p = HuntParams {
        n: a.n,
        m: (a.m.lo, a.m.hi),
        delta: a.delta,
        samples: a.samples,
        seed: a.seed,
        budget: a.budget.budget,
        jobs: a.jobs,
    };
    let files = RunFiles { log: a.log, verbosity, ..RunFiles::default() };
    let r = hunt(&config, &p, &files)?;
    write_report(a.o.as_deref(), &r)?;
    out.emit(&r, || {
        let mut s = String::new();
        for f in &r.findings {
            s.push_str(&format!("FAIL n={} m={}\n{}", f.n, f.m, f.encoding));
        }
        let t = r.totals;
        s.push_str(&format!(
            "{}: drew {}, hypotheses met {}, pass {}, fail {}, undecided {}",
            r.predicate,
            r.drawn,
            t.examined - t.not_met,
            t.passed,
            t.failed,
            t.undecided
        ));
        s
    })?;
    Ok(verdict_status(r.findings.len(), r.undecided.len()))
}

fn sharpness(out: &Out, k: usize, delta: usize, parts: Option<Vec<usize>>, budget: u64) -> Result<Status> {
    let r = sharpness_report(k, delta, parts, budget)?;
    let (g, cert) = build_gk(&GkParams::new(k, r.parts.clone(), delta)?)?;
    let cert_report = check_certificate(&g, &cert, budget);
    out.emit(&json!({ "report": r, "certificate": cert_report }), || {
        let longest = match r.longest {
            berge_core::verify::LongestResult::Exact(l) => l.to_string(),
            berge_core::verify::LongestResult::Unknown => "unknown (budget)".into(),
        };
        let mut s = format!(
            "G_{}({:?}; {}): n = {}, m = {} (bound {}), connectivity {}, longest cycle {}, X-spanning {}",
            r.k, r.parts, r.delta, r.n, r.m, r.bound_m, r.connectivity, longest, r.x_spanning
        );
        for c in &cert_report.checks {
            s.push_str(&format!(
                "\n  {} {}: expected {}, got {}",
                if c.passed { "ok  " } else { "FAIL" },
                c.claim,
                c.expected,
                c.actual
            ));
        }
        s.push_str(if r.witness { "\nwitness: yes" } else { "\nwitness: no" });
        s
    })?;
    Ok(if r.witness && cert_report.passed() { Status::Ok } else { Status::Found })
}
