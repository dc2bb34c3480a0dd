//! `hopfatlas` front end.
//!
//! Exit codes: 0 every check passed, 1 a check failed, 2 usage error,
//! 3 unknown family or bad parameter, 4 file I/O or malformed file.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::atlas::subhopf::shipped_surjections;
use crate::atlas::{build_named, AtlasError};
use crate::format::{algebra_from_str, algebra_to_string, witness_from_str, witness_to_string};
use crate::hopf::{coinvariants, hopf_dual, restricts_to_counit, verify_antipode, verify_bialgebra, FinHopf, Side};
use crate::invariants::summarize;
use crate::iso::{default_grid, distinguish, search_iso, verify_iso, SearchOptions, SearchOutcome};
use crate::kb::{Kb, TableFormat};
use crate::linalg::LinearMap;
use crate::prover::trace::{replay, to_json};
use crate::prover::{prove, Assumptions, Axiom, Flag, Pack};
use crate::scalars::{Field, FieldElem};
use crate::suite::{run_all, run_criterion, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARAM: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "hopfatlas", version, about = "Exact small Hopf algebras, invariants and the coradical counting prover")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PackArg {
    Base,
    Extended,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Assume {
    PointedOk,
    CopointedOk,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Check the bialgebra and antipode axioms.
    Verify { family: String },
    /// Coradical, grouplikes, type, antipode order, filtration, skew-primitives.
    Invariants {
        family: String,
        /// Also write the report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build the dual and check dual∘dual = id.
    Dual {
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for (or verify) an isomorphism.
    Iso {
        source: String,
        target: String,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Comma-separated scalars: integers, fractions, z^k, -z^k, or `default`.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 2_000_000)]
        budget: u64,
        /// Write the witness found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coinvariants of the shipped surjections, or of the identity on a family.
    Coinv {
        family: Option<String>,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
    },
    /// Run the counting prover on a dimension.
    Prove {
        dim: Option<u32>,
        #[arg(long, value_enum, default_value_t = PackArg::Base)]
        pack: PackArg,
        /// full-orbit=<d> or free-translation.
        #[arg(long = "flag")]
        flags: Vec<String>,
        #[arg(long = "axiom")]
        axioms: Vec<String>,
        #[arg(long = "assume", value_enum)]
        assume: Vec<Assume>,
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Replay a trace file instead of proving.
        #[arg(long)]
        replay: Option<PathBuf>,
        /// List every profile with its verdict.
        #[arg(long)]
        profiles: bool,
    },
    /// Classification status of a dimension.
    Status {
        dim: u32,
        /// Also confirm the recorded grouplike orders against the prover.
        #[arg(long)]
        crosscheck: bool,
    },
    /// Render the status table.
    Table {
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Write a family in the canonical algebra format.
    Export {
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The acceptance battery.
    Suite {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
        #[arg(long)]
        verbose: bool,
    },
}

struct Fail(i32, String);

impl From<AtlasError> for Fail {
    fn from(e: AtlasError) -> Fail {
        Fail(EXIT_PARAM, e.to_string())
    }
}

fn io<E: std::fmt::Display>(path: &Path) -> impl FnOnce(E) -> Fail + '_ {
    move |e| Fail(EXIT_IO, format!("{}: {e}", path.display()))
}

/// A family name, or a path to an algebra file.
fn load(arg: &str) -> Result<FinHopf, Fail> {
    let p = Path::new(arg);
    if arg.ends_with(".json") || p.is_file() {
        let s = std::fs::read_to_string(p).map_err(io(p))?;
        return algebra_from_str(&s).map_err(io(p));
    }
    Ok(build_named(arg)?)
}

fn write_out(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(io(path))
}

fn parse_flag(s: &str) -> Result<Flag, Fail> {
    if s == "free-translation" {
        return Ok(Flag::FreeTranslation);
    }
    if let Some(d) = s.strip_prefix("full-orbit=") {
        return d.parse().map(Flag::FullOrbit).map_err(|_| Fail(EXIT_PARAM, format!("bad block size in {s:?}")));
    }
    Err(Fail(EXIT_PARAM, format!("unknown flag {s:?} (full-orbit=<d> | free-translation)")))
}

fn parse_grid(spec: &str, field: &Field) -> Result<Vec<FieldElem>, Fail> {
    let mut out: Vec<FieldElem> = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if tok == "default" {
            out.extend(default_grid(field));
            continue;
        }
        let (neg, body) = match tok.strip_prefix('-') {
            Some(b) if b.starts_with('z') => (true, b),
            _ => (false, tok),
        };
        let x = if let Some(k) = body.strip_prefix("z^") {
            let k: i64 = k.parse().map_err(|_| Fail(EXIT_PARAM, format!("bad grid entry {tok:?}")))?;
            field.zeta_pow(k)
        } else if body == "z" {
            field.zeta()
        } else {
            let r = crate::scalars::parse_rational(body).map_err(|e| Fail(EXIT_PARAM, format!("bad grid entry {tok:?}: {e}")))?;
            field.from_rational(r)
        };
        let x = if neg { &field.zero() - &x } else { x };
        if !out.contains(&x) {
            out.push(x);
        }
    }
    if out.is_empty() {
        return Err(Fail(EXIT_PARAM, "empty grid".into()));
    }
    Ok(out)
}

fn verify(family: &str) -> Result<(String, bool), Fail> {
    let h = load(family)?;
    let b = verify_bialgebra(&h).map_err(|e| Fail(EXIT_PARAM, e.to_string()))?;
    let s = verify_antipode(&h).map_err(|e| Fail(EXIT_PARAM, e.to_string()))?;
    if b.ok() && s.ok() {
        return Ok(("ok: bialgebra, antipode\n".into(), true));
    }
    let mut out = String::from("failed:");
    for f in b.failed_axioms().into_iter().chain(s.failed_axioms()) {
        let _ = write!(out, " {f}");
    }
    out.push('\n');
    let _ = writeln!(out, "{b}\n{s}");
    Ok((out, false))
}

fn invariants(family: &str, report: Option<&Path>) -> Result<(String, bool), Fail> {
    let h = load(family)?;
    let s = summarize(&h).map_err(|e| Fail(EXIT_CHECK, e.to_string()))?;
    let text = s.render();
    if let Some(p) = report {
        let mut m = serde_json::Map::new();
        for line in text.lines() {
            if let Some((k, v)) = line.split_once('=') {
                m.insert(k.to_string(), serde_json::Value::String(v.to_string()));
            }
        }
        m.insert("name".into(), serde_json::Value::String(h.name.clone()));
        write_out(p, &(crate::format::emit(&serde_json::Value::Object(m)) + "\n"))?;
    }
    Ok((text, true))
}

fn dual(family: &str, out: Option<&Path>) -> Result<(String, bool), Fail> {
    let h = load(family)?;
    let d = hopf_dual(&h);
    let back = hopf_dual(&d).same_tensors(&h);
    let text = algebra_to_string(&d);
    let mut msg = String::new();
    match out {
        Some(p) => {
            write_out(p, &text)?;
            let _ = writeln!(msg, "wrote {} (dim {})", p.display(), d.dim);
        }
        None => msg.push_str(&text),
    }
    let _ = writeln!(msg, "dual∘dual = id: {back}");
    Ok((msg, back))
}

#[allow(clippy::too_many_arguments)]
fn iso(
    source: &str,
    target: &str,
    witness: Option<&Path>,
    grid: Option<&str>,
    budget: u64,
    out: Option<&Path>,
) -> Result<(String, bool), Fail> {
    let h = load(source)?;
    let k = load(target)?;
    if let Some(p) = witness {
        let s = std::fs::read_to_string(p).map_err(io(p))?;
        let w = witness_from_str(&s).map_err(io(p))?;
        let rep = verify_iso(&h, &k, &w);
        return Ok((format!("{rep}\n"), rep.ok));
    }
    let field = Field::new(crate::scalars::lcm_order(h.field.order(), k.field.order()));
    let grid = grid.map(|g| parse_grid(g, &field)).transpose()?;
    let opts = SearchOptions { grid, budget, ..SearchOptions::default() };
    match search_iso(&h, &k, &opts) {
        SearchOutcome::Found { mut witness, examined } => {
            witness.source = source.to_string();
            witness.target = target.to_string();
            let rep = verify_iso(&h, &k, &witness);
            let mut msg = format!("found after {examined} candidates; {rep}\n");
            match out {
                Some(p) => write_out(p, &witness_to_string(&witness))?,
                None => msg.push_str(&witness_to_string(&witness)),
            }
            Ok((msg, rep.ok))
        }
        SearchOutcome::NoneFound { examined, exhausted_grid } => {
            let mut msg = format!(
                "no isomorphism found ({examined} candidates, {}); not a proof of non-isomorphism\n",
                if exhausted_grid { "grid exhausted" } else { "budget exhausted" }
            );
            let d = distinguish(&h, &k);
            if d.is_empty() {
                msg.push_str("invariants agree\n");
            } else {
                for x in d {
                    let _ = writeln!(msg, "distinguished: {x}");
                }
            }
            Ok((msg, false))
        }
        SearchOutcome::Unsupported(why) => Ok((format!("unsupported: {why}\n"), false)),
    }
}

fn coinv(family: Option<&str>, side: SideArg) -> Result<(String, bool), Fail> {
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let cases: Vec<(String, FinHopf, FinHopf, LinearMap)> = match family {
        Some(f) => {
            let h = load(f)?;
            let id = LinearMap::identity(&h.field, h.dim);
            vec![(format!("id: {f} → {f}"), h.clone(), h, id)]
        }
        None => shipped_surjections().into_iter().map(|s| (s.name, s.source, s.target, s.map)).collect(),
    };
    let mut msg = String::new();
    let mut all = true;
    for (name, h, k, pi) in cases {
        match coinvariants(&h, &k, &pi, side) {
            Ok(r) => {
                let law = h.dim == r.dim() * k.dim;
                let eps = restricts_to_counit(&h, &k, &pi, &r);
                all &= law && eps;
                let _ = writeln!(
                    msg,
                    "{name}: dim H = {}, dim H^coπ = {}, dim B = {}, law {}, π|R = ε {}",
                    h.dim,
                    r.dim(),
                    k.dim,
                    if law { "holds" } else { "FAILS" },
                    if eps { "holds" } else { "FAILS" }
                );
            }
            Err(e) => {
                all = false;
                let _ = writeln!(msg, "{name}: {e}");
            }
        }
    }
    Ok((msg, all))
}

#[allow(clippy::too_many_arguments)]
fn prove_cmd(
    dim: Option<u32>,
    pack: PackArg,
    flags: &[String],
    axioms: &[String],
    assume: &[Assume],
    trace: Option<&Path>,
    replay_path: Option<&Path>,
    profiles: bool,
) -> Result<(String, bool), Fail> {
    if let Some(p) = replay_path {
        let s = std::fs::read_to_string(p).map_err(io(p))?;
        return Ok(match replay(&s) {
            Ok(r) => (format!("replay ok: n={}\n{}\n", r.n, r.summary()), true),
            Err(e) => (format!("replay FAILED: {e}\n"), false),
        });
    }
    let n = dim.ok_or_else(|| Fail(EXIT_USAGE, "prove needs a dimension or --replay <file>".into()))?;
    let flags: Vec<Flag> = flags.iter().map(|f| parse_flag(f)).collect::<Result<_, _>>()?;
    let mut a = Assumptions::default().with_flags(&flags);
    for ax in axioms {
        a = a.with_axiom(Axiom::parse(ax).map_err(|e| Fail(EXIT_PARAM, e.to_string()))?);
    }
    let pack = match pack {
        PackArg::Base => Pack::Base,
        PackArg::Extended => Pack::Extended,
    };
    for x in assume {
        match x {
            Assume::PointedOk => a.nonpointed = false,
            Assume::CopointedOk => a.noncopointed = false,
        }
    }
    let r = prove(n, &a, pack).map_err(|e| Fail(EXIT_PARAM, e.to_string()))?;
    let mut msg = String::new();
    let flag_labels: Vec<String> = a.flags.iter().map(|f| f.label()).collect();
    let _ = writeln!(
        msg,
        "n={n} pack={} flags=[{}] axioms=[{}]",
        if pack == Pack::Base { "base" } else { "extended" },
        flag_labels.join(","),
        a.axioms.iter().map(|x| x.id()).collect::<Vec<_>>().join(",")
    );
    let _ = writeln!(msg, "{}", r.summary());
    if profiles {
        for g in &r.results {
            for s in &g.steps {
                let _ = writeln!(msg, "  g={}: {}", g.g, s.rule);
            }
            for p in &g.profiles {
                let v = match &p.verdict {
                    crate::prover::Verdict::Eliminated { steps } => {
                        format!("eliminated by {}", steps.iter().map(|s| s.rule.as_str()).collect::<Vec<_>>().join(", "))
                    }
                    crate::prover::Verdict::Feasible { witness: Some(w) } => {
                        format!("feasible: y_GG={} y_GD={:?} y_DD={:?}", w.y_gg, w.y_gd, w.y_dd)
                    }
                    crate::prover::Verdict::Feasible { witness: None } => "feasible".to_string(),
                };
                let _ = writeln!(msg, "  {}: {v}", p.profile);
            }
        }
    }
    if let Some(p) = trace {
        write_out(p, &to_json(&r))?;
    }
    Ok((msg, true))
}

fn status(dim: u32, crosscheck: bool) -> Result<(String, bool), Fail> {
    let kb = Kb::load().map_err(|e| Fail(EXIT_IO, e.to_string()))?;
    let rep = kb.status(dim).map_err(|e| Fail(EXIT_PARAM, e.to_string()))?;
    let mut msg = rep.render();
    let mut ok = true;
    if crosscheck {
        let c = kb.crosscheck_with_prover(dim).map_err(|e| Fail(EXIT_PARAM, e.to_string()))?;
        ok = c.passed();
        let _ = writeln!(msg, "crosscheck: {}", c.render());
    }
    Ok((msg, ok))
}

fn suite(seed: u64, only: Option<u8>, verbose: bool) -> Result<(String, bool), Fail> {
    let results = match only {
        Some(id) if (1..=12).contains(&id) => vec![run_criterion(id, seed)],
        Some(id) => return Err(Fail(EXIT_PARAM, format!("no criterion {id} (1..=12)"))),
        None => run_all(seed),
    };
    let mut msg = String::new();
    for r in &results {
        let _ = writeln!(msg, "{}", r.line());
        if verbose || !r.passed {
            for d in &r.details {
                let _ = writeln!(msg, "    {d}");
            }
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(msg, "{passed}/{} criteria passed", results.len());
    Ok((msg, passed == results.len()))
}

fn dispatch(verb: Verb) -> Result<(String, bool), Fail> {
    match verb {
        Verb::Verify { family } => verify(&family),
        Verb::Invariants { family, report } => invariants(&family, report.as_deref()),
        Verb::Dual { family, out } => dual(&family, out.as_deref()),
        Verb::Iso { source, target, witness, grid, budget, out } => {
            iso(&source, &target, witness.as_deref(), grid.as_deref(), budget, out.as_deref())
        }
        Verb::Coinv { family, side } => coinv(family.as_deref(), side),
        Verb::Prove { dim, pack, flags, axioms, assume, trace, replay, profiles } => {
            prove_cmd(dim, pack, &flags, &axioms, &assume, trace.as_deref(), replay.as_deref(), profiles)
        }
        Verb::Status { dim, crosscheck } => status(dim, crosscheck),
        Verb::Table { format } => {
            let f: TableFormat = format.parse().map_err(|e: String| Fail(EXIT_PARAM, e))?;
            let kb = Kb::load().map_err(|e| Fail(EXIT_IO, e.to_string()))?;
            Ok((kb.render_table(f), true))
        }
        Verb::Export { family, out } => {
            let h = load(&family)?;
            let text = algebra_to_string(&h);
            match out {
                Some(p) => {
                    write_out(&p, &text)?;
                    Ok((format!("wrote {} ({}, dim {})\n", p.display(), h.name, h.dim), true))
                }
                None => Ok((text, true)),
            }
        }
        Verb::Suite { seed, only, verbose } => suite(seed, only, verbose),
    }
}

/// Runs one invocation; returns (exit code, stdout, stderr).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { (code, text, String::new()) } else { (code, String::new(), text) };
        }
    };
    match dispatch(cli.verb) {
        Ok((out, true)) => (EXIT_OK, out, String::new()),
        Ok((out, false)) => (EXIT_CHECK, out, String::new()),
        Err(Fail(code, msg)) => (code, String::new(), format!("error: {msg}\n")),
    }
}

/// Sizes the global thread pool from HOPFATLAS_THREADS.
pub fn init_threads() {
    if let Some(n) = std::env::var("HOPFATLAS_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}
