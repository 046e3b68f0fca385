//! Subcommands. Each returns the text for stdout and the exit code.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use domsr_core::finder::{search_partition, semilattice_orders, SearchHit, SearchQuery, SearchResult, SearchStats};
use domsr_core::laws::{
    coincidence_check, derived_suite, parse_laws, quantale_suite, Checker, TestDomain, DERIVED, GROUPS, QUANTALE,
};
use domsr_core::models::{builtin, dom_via_inf, dom_via_top, path_algebra, rel_algebra, BUILTINS};
use domsr_core::{CheckOptions, FiniteAlgebra, LawId};
use rayon::prelude::*;
use thiserror::Error;

use crate::format::{parse_algebras, render_algebra, ParseError};
use crate::graph::parse_graph_file;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] domsr_core::Error),
    #[error("unknown law `{0}`; known laws: {1}")]
    UnknownLaw(String, String),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "domsr", version, about = "Finite domain semirings: law checking and model search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check laws or run a suite on one or more algebras.
    Check(CheckArgs),
    /// Search for dioids with domain satisfying some laws and violating others.
    Search(SearchArgs),
    /// Compare the algebra's dom with a closed-form candidate.
    Formula(FormulaArgs),
    /// Print an algebra in the file format.
    Render(Source),
    /// List built-in algebras and law names.
    List,
}

#[derive(Debug, Args, Clone, Default)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Built-in algebra name.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Full relation algebra on an m-element set.
    #[arg(long, value_name = "M")]
    pub rel: Option<usize>,
    /// Path algebra of a graph file.
    #[arg(long, value_name = "FILE")]
    pub graph: Option<PathBuf>,
    /// Algebra file; `-` reads stdin.
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coincidence,
    Quantale,
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Formula {
    Top,
    Inf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Tests {
    Designated,
    Complemented,
    S1,
    Sd,
}

#[derive(Debug, Args, Clone, Default)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: Source,
    /// Comma-separated law and group names.
    #[arg(long, conflicts_with = "suite")]
    pub laws: Option<String>,
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Replace dom by a closed-form candidate before checking.
    #[arg(long, value_enum)]
    pub dom_formula: Option<Formula>,
    /// Range of p in test-quantified laws.
    #[arg(long, value_enum)]
    pub tests: Option<Tests>,
    /// No sampling of ternary laws; subset laws over all subsets where feasible.
    #[arg(long)]
    pub exhaustive: bool,
}

#[derive(Debug, Args, Clone)]
pub struct SearchArgs {
    #[arg(long, default_value = "")]
    pub satisfy: String,
    #[arg(long)]
    pub violate: String,
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,
    /// Stop after this many models; 0 means no limit.
    #[arg(long, default_value_t = 1)]
    pub limit: usize,
    /// Skip dioids isomorphic to an earlier one.
    #[arg(long)]
    pub iso_reject: bool,
}

#[derive(Debug, Args, Clone)]
pub struct FormulaArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, value_enum, default_value = "top")]
    pub formula: Formula,
}

/// Settings taken from the environment.
#[derive(Clone, Copy, Debug, Default)]
pub struct Env {
    pub seed: u64,
    pub threads: Option<usize>,
}

impl Env {
    pub fn from_process() -> Result<Env, CliError> {
        let num = |var: &str| -> Result<Option<u64>, CliError> {
            match std::env::var(var) {
                Ok(v) => v.trim().parse().map(Some).map_err(|_| CliError::Usage(format!("{var}: not a number: {v}"))),
                Err(_) => Ok(None),
            }
        };
        Ok(Env { seed: num("DOMSR_SEED")?.unwrap_or(0), threads: num("DOMSR_THREADS")?.map(|t| t.max(1) as usize) })
    }
}

pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn run(cli: &Cli, env: Env) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check(a) => run_check(a, env),
        Command::Search(a) => run_search(a, env),
        Command::Formula(a) => run_formula(a),
        Command::Render(s) => {
            let stdout = load(s)?.iter().map(render_algebra).collect();
            Ok(Outcome { stdout, code: EXIT_OK })
        }
        Command::List => Ok(Outcome { stdout: list(), code: EXIT_OK }),
    }
}

fn list() -> String {
    let mut out = String::from("builtins:\n");
    for b in BUILTINS {
        writeln!(out, "  {b}").unwrap();
    }
    out.push_str("groups:\n");
    for (g, laws) in GROUPS {
        let names: Vec<&str> = laws.iter().map(|l| l.name()).collect();
        writeln!(out, "  {g} = {}", names.join(",")).unwrap();
    }
    out.push_str("laws:\n");
    for l in LawId::ALL {
        writeln!(out, "  {:<20} {}", l.name(), l.statement()).unwrap();
    }
    out
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(io)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// The algebras named by `src`; a file may hold several.
pub fn load(src: &Source) -> Result<Vec<FiniteAlgebra>, CliError> {
    if let Some(name) = &src.builtin {
        return Ok(vec![builtin(name)?]);
    }
    if let Some(m) = src.rel {
        return Ok(vec![rel_algebra(m)?]);
    }
    if let Some(path) = &src.graph {
        let text = read(path)?;
        let g = parse_graph_file(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
        return Ok(vec![path_algebra(&g)?]);
    }
    let path = src.file.as_ref().ok_or_else(|| CliError::Usage("no algebra given".into()))?;
    let text = read(path)?;
    let all = parse_algebras(&text).map_err(|source| CliError::Parse { path: path.display().to_string(), source })?;
    if all.is_empty() {
        return Err(CliError::Usage(format!("{}: no algebra found", path.display())));
    }
    Ok(all)
}

fn laws(list: &str) -> Result<Vec<LawId>, CliError> {
    parse_laws(list).map_err(|e| {
        let mut known: Vec<&str> = GROUPS.iter().map(|(g, _)| *g).collect();
        known.extend(LawId::ALL.iter().map(|l| l.name()));
        CliError::UnknownLaw(e.0, known.join(", "))
    })
}

/// Catalogue laws outside the suites whose tables are present.
fn default_laws(s: &FiniteAlgebra) -> Vec<LawId> {
    LawId::ALL
        .into_iter()
        .filter(|l| !QUANTALE.contains(l) && !DERIVED.contains(l))
        .filter(|l| !l.needs_dom() || s.dom().is_some())
        .filter(|l| !l.needs_adom() || s.adom().is_some())
        .collect()
}

fn apply_formula(s: FiniteAlgebra, f: Formula) -> Result<FiniteAlgebra, CliError> {
    let dom = match f {
        Formula::Top => dom_via_top(&s)?,
        Formula::Inf => dom_via_inf(&s)?,
    };
    Ok(s.with_dom(dom).map_err(domsr_core::Error::from)?)
}

pub fn run_check(a: &CheckArgs, env: Env) -> Result<Outcome, CliError> {
    let opts = CheckOptions {
        test_domain: a.tests.map(|t| match t {
            Tests::Designated => TestDomain::Designated,
            Tests::Complemented => TestDomain::Complemented,
            Tests::S1 => TestDomain::Subidentities,
            Tests::Sd => TestDomain::DomainAlgebra,
        }),
        exhaustive: a.exhaustive,
        seed: env.seed,
        ..CheckOptions::default()
    };
    let selected = a.laws.as_deref().map(laws).transpose()?;
    let mut stdout = String::new();
    let mut ok = true;
    for (i, s) in load(&a.source)?.into_iter().enumerate() {
        let s = match a.dom_formula {
            Some(f) => apply_formula(s, f)?,
            None => s,
        };
        if i > 0 {
            stdout.push('\n');
        }
        match a.suite {
            Some(Suite::Coincidence) => {
                let r = coincidence_check(&s, &opts)?;
                ok &= r.ok();
                stdout.push_str(&report::coincidence_report(&s, &r));
            }
            Some(Suite::Quantale) => {
                let q = quantale_suite(&s, &opts);
                ok &= q.ok();
                stdout.push_str(&report::quantale_report(&s, &q));
            }
            Some(Suite::Derived) => {
                let r = derived_suite(&s, &opts);
                ok &= r.all_pass();
                stdout.push_str(&report::law_report(&s, &r));
            }
            None => {
                let list = selected.clone().unwrap_or_else(|| default_laws(&s));
                let r = Checker::new(&s, &opts).report(&list);
                ok &= r.all_pass();
                stdout.push_str(&report::law_report(&s, &r));
            }
        }
    }
    Ok(Outcome { stdout, code: if ok { EXIT_OK } else { EXIT_FAIL } })
}

fn pool(env: Env) -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = env.threads {
        b = b.num_threads(t);
    }
    b.build().map_err(|e| CliError::Usage(e.to_string()))
}

/// [`domsr_core::finder::search`] with the addition tables of each size
/// spread over worker threads. Hits are merged in enumeration order, so the
/// result equals the sequential one.
pub fn parallel_search(q: &SearchQuery, env: Env) -> Result<SearchResult, CliError> {
    q.validate()?;
    let pool = pool(env)?;
    let mut hits: Vec<SearchHit> = Vec::new();
    let mut stats = SearchStats::default();
    for n in 1..=q.max_size {
        let orders = semilattice_orders(n)?;
        let remaining = q.limit.map(|l| l - hits.len());
        let parts: Vec<_> = pool.install(|| {
            orders.par_iter().enumerate().map(|(oi, add)| search_partition(q, n, oi, add, remaining)).collect()
        });
        for part in parts {
            stats.merge(&part.stats);
            hits.extend(part.hits);
            if q.limit.is_some_and(|l| hits.len() >= l) {
                hits.truncate(q.limit.unwrap());
                return Ok(SearchResult { hits, complete: false, stats });
            }
        }
    }
    Ok(SearchResult { hits, complete: true, stats })
}

pub fn run_search(a: &SearchArgs, env: Env) -> Result<Outcome, CliError> {
    let q = SearchQuery {
        satisfy: laws(&a.satisfy)?,
        violate: laws(&a.violate)?,
        max_size: a.max_size,
        iso_reject: a.iso_reject,
        limit: (a.limit > 0).then_some(a.limit),
    };
    if q.violate.is_empty() {
        return Err(CliError::Usage("--violate needs at least one law".into()));
    }
    let r = parallel_search(&q, env)?;
    let mut out = String::new();
    for (i, h) in r.hits.iter().enumerate() {
        writeln!(out, "# model {}: violates {} at {}", i + 1, h.violated, report::witness(&h.algebra, &h.witness)).unwrap();
        out.push_str(&render_algebra(&h.algebra));
    }
    if r.hits.is_empty() {
        out.push_str("EXHAUSTED: none\n");
    }
    let st = &r.stats;
    writeln!(
        out,
        "# sizes 1..={}: {} orders, {} dioids, {} isomorphic skipped, {} candidates, {} satisfying{}",
        q.max_size,
        st.enumeration.orders,
        st.enumeration.dioids,
        st.enumeration.iso_rejected,
        st.candidates,
        st.checked,
        if r.complete { "" } else { " (stopped at limit)" }
    )
    .unwrap();
    let code = if r.hits.is_empty() { EXIT_EXHAUSTED } else { EXIT_OK };
    Ok(Outcome { stdout: out, code })
}

pub fn run_formula(a: &FormulaArgs) -> Result<Outcome, CliError> {
    let mut out = String::new();
    let mut agree = true;
    for s in load(&a.source)? {
        let candidate = match a.formula {
            Formula::Top => dom_via_top(&s)?,
            Formula::Inf => dom_via_inf(&s)?,
        };
        let label = match a.formula {
            Formula::Top => "1∧x⊤",
            Formula::Inf => "inf{p | x ≤ p⊤}",
        };
        writeln!(out, "algebra {}: candidate d(x) = {label}", s.name()).unwrap();
        let Some(dom) = s.dom() else {
            for x in s.elements() {
                writeln!(out, "  x={} formula={}", s.elem_name(x), s.elem_name(candidate[x as usize])).unwrap();
            }
            continue;
        };
        let mut differ = 0;
        for x in s.elements() {
            let (f, d) = (candidate[x as usize], dom[x as usize]);
            if f != d {
                differ += 1;
                writeln!(out, "  differs at x={}: formula={} dom={}", s.elem_name(x), s.elem_name(f), s.elem_name(d)).unwrap();
            }
        }
        if differ == 0 {
            writeln!(out, "  agrees with dom on all {} elements", s.size()).unwrap();
        } else {
            writeln!(out, "  {differ} of {} elements differ", s.size()).unwrap();
            agree = false;
        }
    }
    Ok(Outcome { stdout: out, code: if agree { EXIT_OK } else { EXIT_FAIL } })
}
