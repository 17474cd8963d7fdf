//! Command-line front end. [`run`] returns the exit code and the text to
//! print, so it can be driven from tests without spawning a process.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on bad
//! input.

use std::collections::BTreeSet;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factorization::{
    bounded_crit_locus, crit_locus, crit_sequence, decompose_inv, density_check, detect_bounded_critical,
    detect_critical, factor_radical, factor_recursive, radical_of, sp_height, CritVerdict, RadicalFactorization,
    SequenceStatus,
};
use crate::finite_domain::{
    csd_decompose, int_v_model, layer_sequence, nagata_transform, quotient_check, EIdeal,
};
use crate::ideal_core::{MembershipVerdict, SearchBudget, Term};
use crate::model::{json_arg, Model};
use crate::spectra::{FiniteTreeSpectrum, NodeSet, PrimeId, Space};

#[derive(Parser, Debug)]
#[command(name = "radfact", about = "Radical factorization and ideal-function tools", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit a JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Search budget as `C,D`: coefficient bound and meet/join depth.
    #[arg(long, global = true, value_parser = parse_budget)]
    budget: Option<SearchBudget>,
    /// A point label such as `7`, `inf`, `2.inf` or `01`.
    #[arg(long, global = true)]
    point: Option<String>,
    /// Comma-separated prime labels.
    #[arg(long, global = true)]
    set: Option<String>,
    /// A function or ideal: generator label, inline JSON, or a file.
    #[arg(long, global = true)]
    ideal: Option<String>,
    /// A term certificate to check against `--ideal`.
    #[arg(long, global = true)]
    term: Option<String>,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Check a model, or a certificate with `--ideal` and `--term`.
    Validate { model: std::path::PathBuf },
    /// Radical factorization of `--ideal`.
    Factor { model: std::path::PathBuf },
    /// Radical of `--ideal`.
    Radical { model: std::path::PathBuf },
    /// Criticality of `--point`, or the whole critical set.
    Crit { model: std::path::PathBuf },
    /// Bounded criticality of `--point`, or the whole bounded-critical set.
    Bcrit { model: std::path::PathBuf },
    /// The critical sequence.
    CritSeq { model: std::path::PathBuf },
    /// SP-rank, or the SP-height of `--point`.
    SpRank { model: std::path::PathBuf },
    /// Layer decomposition of `--ideal`.
    Decompose { model: std::path::PathBuf },
    /// Coheight layers of a finite tree.
    Layers { model: std::path::PathBuf },
    /// Layer ranks of the CSD decomposition.
    Csd { model: std::path::PathBuf },
    /// Nagata transform deleting `--set`.
    Nagata { model: std::path::PathBuf },
    /// Quotient by `Inv_X` for `--set`, or for every up-closed set.
    QuotientCheck { model: std::path::PathBuf },
    /// `I = J L^{-1}` for `--ideal`.
    Jl { model: std::path::PathBuf },
    /// Layer shape and unitary rank of `Int(V)` at the model's precision.
    IntV { model: std::path::PathBuf },
    /// Every sample clopen set meets the non-critical set.
    Density { model: std::path::PathBuf },
}

impl Command {
    fn model(&self) -> &std::path::Path {
        match self {
            Command::Validate { model }
            | Command::Factor { model }
            | Command::Radical { model }
            | Command::Crit { model }
            | Command::Bcrit { model }
            | Command::CritSeq { model }
            | Command::SpRank { model }
            | Command::Decompose { model }
            | Command::Layers { model }
            | Command::Csd { model }
            | Command::Nagata { model }
            | Command::QuotientCheck { model }
            | Command::Jl { model }
            | Command::IntV { model }
            | Command::Density { model } => model,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Factor { .. } => "factor",
            Command::Radical { .. } => "radical",
            Command::Crit { .. } => "crit",
            Command::Bcrit { .. } => "bcrit",
            Command::CritSeq { .. } => "crit-seq",
            Command::SpRank { .. } => "sp-rank",
            Command::Decompose { .. } => "decompose",
            Command::Layers { .. } => "layers",
            Command::Csd { .. } => "csd",
            Command::Nagata { .. } => "nagata",
            Command::QuotientCheck { .. } => "quotient-check",
            Command::Jl { .. } => "jl",
            Command::IntV { .. } => "int-v",
            Command::Density { .. } => "density",
        }
    }
}

fn parse_budget(s: &str) -> std::result::Result<SearchBudget, String> {
    let (c, d) = s.split_once(',').ok_or("expected C,D")?;
    let c = c.trim().parse().map_err(|_| format!("bad coefficient bound `{c}`"))?;
    let d = d.trim().parse().map_err(|_| format!("bad depth `{d}`"))?;
    SearchBudget::new(c, d).map_err(|e| e.to_string())
}

/// A report: human-readable lines, a JSON object and whether it passed.
struct Report {
    lines: Vec<String>,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(ok: bool, json: Value) -> Self {
        Report { lines: vec![], json, ok }
    }

    fn line(mut self, s: impl Into<String>) -> Self {
        self.lines.push(s.into());
        self
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnknownPrime(_)
        | Error::UnknownPoint(_)
        | Error::InvalidTree(_)
        | Error::MalformedDescriptor(_)
        | Error::BackendMismatch
        | Error::SpectrumMismatch
        | Error::NotPrime(_)
        | Error::RankZero
        | Error::TermSyntax(_)
        | Error::Model(_) => 2,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(['(', ' ']).next().unwrap_or("Error").to_string()
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let command = &cli.command;
    let outcome = Model::load(command.model()).and_then(|m| dispatch(&cli, &m));
    match outcome {
        Ok(r) => {
            let code = if r.ok { 0 } else { 1 };
            let out = if cli.json {
                let mut j = json!({ "command": command.name(), "ok": r.ok });
                if let (Value::Object(dst), Value::Object(src)) = (&mut j, r.json) {
                    dst.extend(src);
                }
                serde_json::to_string_pretty(&j).unwrap()
            } else {
                r.lines.join("\n")
            };
            (code, out)
        }
        Err(e) => {
            let code = exit_code(&e);
            let out = if cli.json {
                serde_json::to_string_pretty(&json!({
                    "command": command.name(),
                    "ok": false,
                    "error": error_kind(&e),
                    "message": e.to_string(),
                }))
                .unwrap()
            } else {
                format!("error: {e}")
            };
            (code, out)
        }
    }
}

fn need<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::Model(format!("this command needs {flag}")))
}

fn dispatch(cli: &Cli, m: &Model) -> Result<Report> {
    let budget = cli.budget.unwrap_or_default();
    match &cli.command {
        Command::Validate { .. } => validate(cli, m, budget),
        Command::Factor { .. } => factor(cli, m),
        Command::Radical { .. } => {
            let f = m.function(need(&cli.ideal, "--ideal")?)?;
            let r = radical_of(&f)?;
            Ok(Report::new(true, json!({ "radical": r.to_json(), "support": r.support().to_string() }))
                .line(format!("radical: {}", r.support())))
        }
        Command::Crit { .. } | Command::Bcrit { .. } => crit(cli, m, budget),
        Command::CritSeq { .. } => crit_seq(m, budget),
        Command::SpRank { .. } => sp_rank(cli, m, budget),
        Command::Decompose { .. } => decompose(cli, m, budget),
        Command::Layers { .. } => {
            let t = m.tree()?;
            let seq = layer_sequence(t);
            let sets: Vec<Vec<String>> = seq.layers.iter().map(|s| names(t, s)).collect();
            let valid = seq.validate(t);
            let mut r = Report::new(valid, json!({ "sizes": seq.sizes(), "layers": sets, "valid": valid }));
            for (i, s) in sets.iter().enumerate() {
                r = r.line(format!("Y_{i} ({}): {{{}}}", s.len(), s.join(", ")));
            }
            Ok(r.line(format!("sizes: {:?}", seq.sizes())))
        }
        Command::Csd { .. } => {
            let t = m.tree()?;
            let d = csd_decompose(t);
            let n = t.nonzero().len();
            let ok = d.total_rank == n;
            let layers: Vec<Value> =
                d.layers.iter().map(|l| json!({ "x": names(t, &l.x), "rank": l.rank })).collect();
            let mut r = Report::new(ok, json!({ "ranks": d.ranks(), "total_rank": d.total_rank, "nonzero_primes": n, "layers": layers }));
            for (i, l) in d.layers.iter().enumerate() {
                r = r.line(format!("X_{i} = {{{}}}: rank {}", names(t, &l.x).join(", "), l.rank));
            }
            Ok(r.line(format!("ranks {:?}, total {} of {n} nonzero primes", d.ranks(), d.total_rank)))
        }
        Command::Nagata { .. } => {
            let t = m.tree()?;
            let x = node_set(t, need(&cli.set, "--set")?)?;
            let n = nagata_transform(t, &x)?;
            let s = &n.spectrum;
            let nodes: Vec<String> = s.labels().iter().map(ToString::to_string).collect();
            let max = names(s, &s.maximal());
            Ok(Report::new(true, json!({ "nodes": nodes, "maximal": max }))
                .line(format!("spectrum: {{{}}}", nodes.join(", ")))
                .line(format!("maximal: {{{}}}", max.join(", "))))
        }
        Command::QuotientCheck { .. } => {
            let t = m.tree()?;
            let sets = match &cli.set {
                Some(s) => vec![node_set(t, s)?],
                None => t.up_closed_sets(),
            };
            let mut rows = Vec::new();
            let mut r = Report::new(true, Value::Null);
            for x in sets {
                let q = quotient_check(t, &x)?;
                r.ok &= q.passed;
                r = r.line(format!(
                    "X = {{{}}}: {} + {} = {} {}",
                    names(t, &x).join(", "),
                    q.rank_inv_x,
                    q.rank_quotient,
                    q.nonzero_primes,
                    if q.passed { "pass" } else { "FAIL" }
                ));
                rows.push(json!({ "x": names(t, &x), "report": q }));
            }
            r.json = json!({ "checks": rows });
            Ok(r)
        }
        Command::Jl { .. } => {
            let t = m.tree()?;
            let i = EIdeal::from_json(t, &json_arg(need(&cli.ideal, "--ideal")?)?)?;
            let (j, l) = i.jl_decompose();
            let ok = j.product(&l.inverse())? == i && j.is_integral() && l.is_integral();
            Ok(Report::new(ok, json!({ "j": j.to_json(), "l": l.to_json() }))
                .line(format!("J = {j}"))
                .line(format!("L = {l}")))
        }
        Command::IntV { .. } => {
            let Space::Ball(b) = m.space()? else {
                return Err(Error::Model("int-v needs a ball model".into()));
            };
            let model = int_v_model(b.p(), b.depth())?;
            let mut r = Report::new(true, serde_json::to_value(&model).unwrap());
            for l in &model.layers {
                r = r.line(format!("{}: {}", l.name, l.description));
            }
            Ok(r.line(format!("unitary rank: {} = {}^{}", model.unitary_rank, model.p, model.depth))
                .line(format!("non-unitary part: {}", model.polynomial_part)))
        }
        Command::Density { .. } => {
            let g = m.group()?;
            let d = density_check(g, budget, g.samples())?;
            let rows: Vec<Value> = d.rows.iter().map(|(s, ok)| json!({ "sample": s, "meets": ok })).collect();
            let mut r = Report::new(d.passed, json!({ "samples": rows }));
            for (s, ok) in &d.rows {
                r = r.line(format!("{s}: {}", if *ok { "meets" } else { "MISSES" }));
            }
            Ok(r.line(if d.passed { "pass" } else { "fail" }))
        }
    }
}

fn names(t: &FiniteTreeSpectrum, s: &NodeSet) -> Vec<String> {
    s.iter().map(|&i| t.label(i).to_string()).collect()
}

fn node_set(t: &Arc<FiniteTreeSpectrum>, s: &str) -> Result<NodeSet> {
    let ids: BTreeSet<PrimeId> = s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(PrimeId::new).collect();
    t.indices(&ids)
}

fn verdict_json(v: &CritVerdict) -> Value {
    match v {
        CritVerdict::NonCritical(t) => json!({ "verdict": v.name(), "certificate": t.to_string() }),
        CritVerdict::CriticalWithinBudget(b) => {
            json!({ "verdict": v.name(), "budget": [b.max_coefficient, b.max_term_depth] })
        }
        CritVerdict::Unknown => json!({ "verdict": v.name() }),
    }
}

fn validate(cli: &Cli, m: &Model, budget: SearchBudget) -> Result<Report> {
    match m {
        Model::Tree { spectrum, .. } => {
            let s = spectrum;
            Ok(Report::new(true, json!({ "nodes": s.len(), "dim": s.dim(), "maximal": names(s, &s.maximal()) }))
                .line(format!("finite tree: {} nodes, dimension {}", s.len(), s.dim())))
        }
        Model::Space { space, group, .. } => {
            let Some(g) = group else {
                return Ok(Report::new(true, json!({ "space": space.to_string() })).line(format!("space {space}")));
            };
            if let Some(spec) = &cli.ideal {
                let f = m.function(spec)?;
                let (ok, how) = match &cli.term {
                    Some(t) => (g.verify_certificate(&f, &Term::parse(t)?)?, "certificate"),
                    None => (matches!(g.membership(&f, budget)?, MembershipVerdict::Member(_)), "membership"),
                };
                return Ok(Report::new(ok, json!({ "check": how, "valid": ok }))
                    .line(format!("{how}: {}", if ok { "valid" } else { "INVALID" })));
            }
            let rep = g.validate();
            let mut r = Report::new(
                rep.passed,
                json!({ "space": space.to_string(), "base": g.base().to_string(), "generators": g.generators().len(),
                        "sampled": rep.sampled, "violations": rep.violations }),
            )
            .line(format!("space {space}, base {}, {} generator(s)", g.base(), g.generators().len()));
            for v in &rep.violations {
                r = r.line(format!("NonRealizable: {v}"));
            }
            Ok(r.line(if rep.passed { "pass" } else { "fail" }))
        }
    }
}

fn factorization_json(f: &RadicalFactorization, space: &Space) -> Value {
    json!(f.factors.iter().map(|c| c.label(space)).collect::<Vec<_>>())
}

fn factor(cli: &Cli, m: &Model) -> Result<Report> {
    let f = m.function(need(&cli.ideal, "--ideal")?)?;
    let space = m.space()?;
    let a = factor_radical(&f)?;
    let b = factor_recursive(&f)?;
    let sums = a.sum(crate::ideal_core::IdealFunction::zero(space)) == f;
    let ok = sums && a == b && a.is_descending();
    let mut r = Report::new(
        ok,
        json!({ "factors": factorization_json(&a, &space), "sum_matches": sums, "recursive_agrees": a == b }),
    );
    for (t, c) in a.factors.iter().enumerate() {
        r = r.line(format!("X_{} = {}", t + 1, c.label(&space)));
    }
    Ok(r.line(format!("sum matches: {sums}; recursive agrees: {}", a == b)))
}

fn crit(cli: &Cli, m: &Model, budget: SearchBudget) -> Result<Report> {
    let g = m.group()?;
    let bounded = matches!(cli.command, Command::Bcrit { .. });
    if let Some(p) = &cli.point {
        let x = g.space().parse_point(p)?;
        let v = if bounded { detect_bounded_critical(g, &x, budget)? } else { detect_critical(g, &x, budget)? };
        let mut j = verdict_json(&v);
        j["point"] = json!(p);
        return Ok(Report::new(true, j).line(format!("{p}: {v}")));
    }
    let loc = if bounded { bounded_crit_locus(g, budget)? } else { crit_locus(g, budget)? };
    let space = g.space();
    let points: Vec<Value> = loc
        .verdicts
        .iter()
        .map(|(x, v)| {
            let mut j = verdict_json(v);
            j["point"] = json!(space.label(x));
            j
        })
        .collect();
    let closed = loc.critical.is_closed();
    Ok(Report::new(closed, json!({ "critical": loc.critical.to_string(), "complete": loc.complete, "closed": closed, "points": points }))
        .line(format!("critical set: {}", loc.critical))
        .line(format!("search complete: {}", loc.complete)))
}

fn crit_seq(m: &Model, budget: SearchBudget) -> Result<Report> {
    let g = m.group()?;
    let seq = crit_sequence(g, budget)?;
    let labels = seq.chain_labels();
    let ok = seq.status == SequenceStatus::Terminated;
    let status = format!("{:?}", seq.status);
    let sections: Value = g.sections().iter().map(|(k, ts)| (k.to_string(), json!(ts.iter().map(ToString::to_string).collect::<Vec<_>>()))).collect::<serde_json::Map<_, _>>().into();
    Ok(Report::new(ok, json!({ "chain": labels, "status": status, "sp_rank": seq.sp_rank, "sections": sections }))
        .line(format!("chain: {}", labels.join(" ⊋ ")))
        .line(format!("status: {status}"))
        .line(format!("sp_rank: {}", seq.sp_rank.map_or("Unknown".into(), |r| r.to_string()))))
}

fn sp_rank(cli: &Cli, m: &Model, budget: SearchBudget) -> Result<Report> {
    let g = m.group()?;
    if let Some(p) = &cli.point {
        let x = g.space().parse_point(p)?;
        let h = sp_height(g, &x, budget)?;
        return Ok(Report::new(h.is_some(), json!({ "point": p, "sp_height": h }))
            .line(format!("sp_height({p}) = {}", h.map_or("Unknown".into(), |h| h.to_string()))));
    }
    let seq = crit_sequence(g, budget)?;
    Ok(Report::new(seq.sp_rank.is_some(), json!({ "sp_rank": seq.sp_rank }))
        .line(format!("sp_rank = {}", seq.sp_rank.map_or("Unknown".into(), |r| r.to_string()))))
}

fn decompose(cli: &Cli, m: &Model, budget: SearchBudget) -> Result<Report> {
    let g = m.group()?;
    let f = m.function(need(&cli.ideal, "--ideal")?)?;
    let seq = crit_sequence(g, budget)?;
    let d = decompose_inv(g, &f, budget, &seq)?;
    let space = g.space();
    let mut sum = crate::ideal_core::IdealFunction::zero(space);
    let mut vanish = true;
    for (beta, c) in d.components.iter().enumerate() {
        sum = sum.add(c)?;
        if let Some(next) = seq.levels.get(beta + 1) {
            vanish &= next.restrict(c)?.is_zero();
        }
    }
    let ok = sum == f && vanish;
    let comps: Vec<Value> = d
        .components
        .iter()
        .zip(&d.coefficients)
        .enumerate()
        .map(|(b, (c, k))| {
            json!({ "layer": b, "component": c.to_json(),
                    "sections": k.iter().map(|(t, v)| json!([t.to_string(), v])).collect::<Vec<_>>() })
        })
        .collect();
    let mut r = Report::new(ok, json!({ "membership": d.membership.to_string(), "components": comps, "sum_matches": sum == f, "vanish_above": vanish }))
        .line(format!("member: {}", d.membership));
    for (b, c) in d.components.iter().enumerate() {
        r = r.line(format!("c_{b} = {c}"));
    }
    Ok(r.line(format!("sum matches: {}; each c_β vanishes on X_β+1: {vanish}", sum == f)))
}
