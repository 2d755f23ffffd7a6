//! The `sml` command line. Every subcommand is a thin wrapper over a library
//! call; exit status is 0 on success, 1 on a domain error, 2 on bad usage.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sml_core::cdv::{check_problem1, check_problem2, classify_mu, MuClass};
use sml_core::construct::{construct_cdv_extremal, construct_kr_extremal, construct_kst_extremal};
use sml_core::generators::{complete, complete_bipartite, cycle, path, petersen};
use sml_core::minors::{delta_y_closure, has_minor, is_linkless};
use sml_core::search::{enumerate_graphs, verify_membership, FamilySpec, SearchReport};
use sml_core::spectral::{kr_lambda_lower_bound, kst_lambda_bound, quotient_bound, spectral_radius, QuotientMatrix};
use sml_core::Graph;

use crate::ingest::{open_graph6, IngestError};
use crate::report::{fmt_real, write_csv, write_json, write_text};
use crate::scan::{parallel_search, resolve_threads};

#[derive(Debug, Parser)]
#[command(name = "sml", version, about = "Spectral extremal graph theory over minor-closed families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Kr,
    Kst,
    Cdv,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// Upper bound on lambda for graphs with no K_{s,t} minor.
    Kst,
    /// lambda of K_{r-2, n-r+2}, a lower bound for the K_r-minor-free maximum.
    Kr,
    /// Larger eigenvalue of [[d, n2], [n1, k]].
    Quotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the extremal construction as graph6.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
    },
    /// Spectral radius of a graph.
    Lambda {
        /// graph6 code, a named graph, or - for stdin.
        graph: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Also print the Perron vector, residual, and iteration count.
        #[arg(long)]
        vector: bool,
    },
    /// Test whether H is a minor of G.
    Minor {
        /// Kn, Ks,t, Cn, Pn, Petersen, or a graph6 code.
        #[arg(long)]
        h: String,
        graph: String,
    },
    /// Colin de Verdière class.
    Mu { graph: String },
    /// Evaluate a closed-form bound.
    Bound {
        #[arg(long, value_enum)]
        family: BoundKind,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        n1: Option<u64>,
        #[arg(long)]
        n2: Option<u64>,
    },
    /// Maximise lambda and edge count over a family.
    Search {
        #[command(flatten)]
        family: FamilyArgs,
        /// Vertex counts, comma separated; taken from the input when omitted.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// graph6 stream to scan instead of the internal enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Worker threads; defaults to SML_THREADS, then the core count.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check a graph against a family and its equality case.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// ΔY/YΔ closure of a graph, one graph6 code per line.
    Dy { graph: String },
    /// Tabulate the edge-count inequalities over all small graphs.
    ReportProblems {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// graph6 stream to use instead of the internal enumeration.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<IngestError> for CliError {
    fn from(e: IngestError) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required here")))
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<FamilySpec, CliError> {
        let spec = match self.family {
            FamilyKind::Kr => FamilySpec::KrMinorFree { r: need(self.r, "r")? },
            FamilyKind::Kst => FamilySpec::KstMinorFree { s: need(self.s, "s")?, t: need(self.t, "t")? },
            FamilyKind::Cdv => FamilySpec::CdvAtMost { m: need(self.m, "m")? },
        };
        spec.validate().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(spec)
    }
}

/// Parses `Kn`, `Ks,t`, `Cn`, `Pn`, or `Petersen`. Digits never occur in
/// graph6, so these names cannot shadow a code.
pub fn named_graph(spec: &str) -> Option<Result<Graph, CliError>> {
    if spec.eq_ignore_ascii_case("petersen") {
        return Some(Ok(petersen()));
    }
    let (head, rest) = spec.split_at_checked(1)?;
    let nums: Vec<usize> = rest.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?;
    let too_big = || CliError::Domain(format!("{spec} has more than 64 vertices"));
    let total: usize = nums.iter().sum();
    if total > sml_core::MAX_VERTICES {
        return Some(Err(too_big()));
    }
    Some(match (head, nums.as_slice()) {
        ("K", &[n]) => Ok(complete(n)),
        ("K", &[s, t]) => Ok(complete_bipartite(s, t)),
        ("C", &[n]) if n >= 3 => Ok(cycle(n)),
        ("C", &[_]) => Err(CliError::Domain("cycles need at least 3 vertices".into())),
        ("P", &[n]) => Ok(path(n)),
        _ => return None,
    })
}

/// Reads a graph argument: a named graph, a graph6 code, or `-` for the
/// first non-blank line of `stdin`.
pub fn read_graph(arg: &str, stdin: &mut dyn BufRead) -> Result<Graph, CliError> {
    if arg == "-" {
        let mut line = String::new();
        loop {
            line.clear();
            if stdin.read_line(&mut line)? == 0 {
                return Err(CliError::Domain("no graph on standard input".into()));
            }
            if !line.trim().is_empty() {
                return Graph::from_graph6(line.trim()).map_err(domain);
            }
        }
    }
    if let Some(named) = named_graph(arg) {
        return named;
    }
    Graph::from_graph6(arg).map_err(|e| CliError::Domain(format!("{arg}: {e}")))
}

/// Runs the command line on `args` (including the program name) and
/// returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "sml: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Construct { family, n } => {
            let g = match family.spec()? {
                FamilySpec::KrMinorFree { r } => construct_kr_extremal(n, r),
                FamilySpec::KstMinorFree { s, t } => construct_kst_extremal(n, s, t),
                FamilySpec::CdvAtMost { m: 1 } if n >= 1 => Ok(path(n)),
                FamilySpec::CdvAtMost { m } => construct_cdv_extremal(n, m),
            }
            .map_err(domain)?;
            writeln!(out, "{}", g.to_graph6())?;
        }
        Command::Lambda { graph, tol, vector } => {
            let g = read_graph(&graph, stdin)?;
            let r = spectral_radius(&g, tol).map_err(domain)?;
            writeln!(out, "{}", fmt_real(r.lambda))?;
            if vector {
                writeln!(out, "residual {:e}", r.residual)?;
                writeln!(out, "iterations {}", r.iterations)?;
                let entries: Vec<String> = r.vector.iter().map(|&x| fmt_real(x)).collect();
                writeln!(out, "vector {}", entries.join(" "))?;
            }
        }
        Command::Minor { h, graph } => {
            let h = read_graph(&h, &mut std::io::empty())?;
            let g = read_graph(&graph, stdin)?;
            match has_minor(&h, &g) {
                Some(w) => {
                    writeln!(out, "yes")?;
                    for (i, set) in w.branch_sets.iter().enumerate() {
                        let members: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                        writeln!(out, "{i}: {}", members.join(" "))?;
                    }
                }
                None => writeln!(out, "no")?,
            }
        }
        Command::Mu { graph } => {
            let class = classify_mu(&read_graph(&graph, stdin)?);
            writeln!(out, "{class} ({})", class.description())?;
        }
        Command::Bound { family, n, r, s, t, d, k, n1, n2 } => {
            let value = match family {
                BoundKind::Kst => kst_lambda_bound(need(n, "n")?, need(s, "s")?, need(t, "t")?).map_err(domain)?,
                BoundKind::Kr => kr_lambda_lower_bound(need(n, "n")?, need(r, "r")?).map_err(domain)?,
                BoundKind::Quotient => {
                    let q = QuotientMatrix { d: need(d, "d")?, k: need(k, "k")?, n1: need(n1, "n1")?, n2: need(n2, "n2")? };
                    if !q.is_realisable() {
                        return Err(CliError::Domain("need n1, n2 >= 1, d < n1, k < n2".into()));
                    }
                    quotient_bound(q)
                }
            };
            writeln!(out, "{}", fmt_real(value))?;
        }
        Command::Search { family, n, input, format, output, threads } => {
            let spec = family.spec()?;
            let threads = resolve_threads(threads, std::env::var("SML_THREADS").ok().as_deref());
            let reports = search_reports(spec, &n, input, threads)?;
            match output {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
                    let mut w = BufWriter::new(file);
                    emit(&mut w, format, &reports)?;
                    w.flush()?;
                }
                None => emit(out, format, &reports)?,
            }
        }
        Command::Verify { family, graph, format } => {
            let spec = family.spec()?;
            let g = read_graph(&graph, stdin)?;
            let rep = verify_membership(&g, spec).map_err(domain)?;
            match format {
                Format::Json => {
                    let eq = rep.equality.as_ref().map(|e| {
                        serde_json::json!({
                            "universal": e.universal,
                            "residual": e.residual.map(|r| format!("{r:?}")),
                            "congruent": e.congruent,
                            "holds": e.holds,
                        })
                    });
                    let v = serde_json::json!({
                        "graph6": g.to_graph6(),
                        "family": spec.tag(),
                        "params": spec.params(),
                        "member": rep.member,
                        "lambda": rep.lambda.map(fmt_real),
                        "upper_bound": rep.upper_bound.map(fmt_real),
                        "extremal_lower_bound": rep.extremal_lower_bound.map(fmt_real),
                        "equality": eq,
                        "matches_construction": rep.matches_construction,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&v).map_err(domain)?)?;
                }
                _ => {
                    let yn = |b: bool| if b { "yes" } else { "no" };
                    writeln!(out, "member                {}", yn(rep.member))?;
                    if let Some(l) = rep.lambda {
                        writeln!(out, "lambda                {}", fmt_real(l))?;
                    }
                    if let Some(b) = rep.upper_bound {
                        writeln!(out, "upper bound           {}", fmt_real(b))?;
                    }
                    if let Some(b) = rep.extremal_lower_bound {
                        writeln!(out, "extremal lower bound  {}", fmt_real(b))?;
                    }
                    if let Some(e) = &rep.equality {
                        let residual = e.residual.map_or("none".to_string(), |r| format!("{r:?}"));
                        writeln!(out, "universal vertices    {}", e.universal)?;
                        writeln!(out, "residual              {residual}")?;
                        writeln!(out, "n = s-1 mod t         {}", yn(e.congruent))?;
                        writeln!(out, "equality structure    {}", yn(e.holds))?;
                    }
                    writeln!(out, "matches construction  {}", yn(rep.matches_construction))?;
                }
            }
        }
        Command::Dy { graph } => {
            for g in delta_y_closure(&read_graph(&graph, stdin)?) {
                writeln!(out, "{}", g.to_graph6())?;
            }
        }
        Command::ReportProblems { n_max, input } => {
            let graphs: Vec<Graph> = match input {
                Some(path) => open_graph6(&path)?.collect::<Result<_, _>>()?,
                None => {
                    let mut all = Vec::new();
                    for n in 1..=n_max {
                        all.extend(enumerate_graphs(n, false).map_err(domain)?);
                    }
                    all
                }
            };
            report_problems(&graphs, out)?;
        }
    }
    Ok(())
}

fn emit(out: &mut dyn Write, format: Format, reports: &[SearchReport]) -> Result<(), CliError> {
    match format {
        Format::Text => write_text(out, reports)?,
        Format::Csv => write_csv(out, reports).map_err(domain)?,
        Format::Json => write_json(out, reports)?,
    }
    Ok(())
}

fn search_reports(
    spec: FamilySpec,
    ns: &[usize],
    input: Option<PathBuf>,
    threads: usize,
) -> Result<Vec<SearchReport>, CliError> {
    match input {
        None => {
            if ns.is_empty() {
                return Err(CliError::Usage("--n is required without --input".into()));
            }
            ns.iter()
                .map(|&n| {
                    let graphs = enumerate_graphs(n, false).map_err(domain)?;
                    parallel_search(spec, n, &graphs, threads).map_err(domain)
                })
                .collect()
        }
        Some(path) => {
            let graphs: Vec<Graph> = open_graph6(&path)?.collect::<Result<_, _>>()?;
            let n = match (ns, graphs.first()) {
                ([], Some(g)) => g.n(),
                ([n], _) => *n,
                ([], None) => return Err(CliError::Domain("input holds no graphs".into())),
                _ => return Err(CliError::Usage("give at most one --n with --input".into())),
            };
            Ok(vec![parallel_search(spec, n, &graphs, threads).map_err(domain)?])
        }
    }
}

/// Per-`(n, m)` counts of graphs with class at most `m` and of those whose
/// edge count exceeds `mn - C(m+1, 2)`, then the same for the bipartite
/// linkless inequality. Findings never change the exit status.
pub fn report_problems(graphs: &[Graph], out: &mut dyn Write) -> Result<(), CliError> {
    let mut ns: Vec<usize> = graphs.iter().map(Graph::n).collect();
    ns.sort_unstable();
    ns.dedup();
    let classes: Vec<MuClass> = graphs.iter().map(classify_mu).collect();

    writeln!(out, "problem 1: e <= mn - m(m+1)/2 when mu <= m")?;
    writeln!(out, "{:>3} {:>2} {:>8} {:>10}", "n", "m", "graphs", "violations")?;
    for &n in &ns {
        for m in 1..=4u32 {
            let (mut count, mut bad) = (0, 0);
            for (g, c) in graphs.iter().zip(&classes) {
                if g.n() == n && c.at_most(m) {
                    count += 1;
                    bad += usize::from(!check_problem1(g, m).map_err(domain)?);
                }
            }
            writeln!(out, "{n:>3} {m:>2} {count:>8} {bad:>10}")?;
        }
    }

    writeln!(out, "problem 2: e <= 3n - 9 for bipartite linklessly embeddable graphs")?;
    writeln!(out, "{:>3} {:>8} {:>10}", "n", "graphs", "violations")?;
    for &n in &ns {
        let (mut count, mut bad) = (0, 0);
        for g in graphs.iter().filter(|g| g.n() == n && g.is_bipartite() && is_linkless(g)) {
            count += 1;
            bad += usize::from(!check_problem2(g).map_err(domain)?);
        }
        writeln!(out, "{n:>3} {count:>8} {bad:>10}")?;
    }
    Ok(())
}
