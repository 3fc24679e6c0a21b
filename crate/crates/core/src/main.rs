use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cmpowers::census::{self, analyze, verify, AnalysisReport, TheoremId, VerifyConfig};
use cmpowers::cohomology::LocalCohomology;
use cmpowers::graph::{ordinary_power, symbolic_power, Graph};
use cmpowers::simplicial::{delta_a, DegreeVector};

#[derive(Parser)]
#[command(
    name = "cmpowers",
    version,
    about = "Powers of Stanley-Reisner ideals of graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Algebraic and combinatorial verdicts for one graph
    Analyze {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Analyse every graph on n vertices
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        /// CSV destination; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check one characterization over a range of graph sizes
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Powers to check, comma separated
        #[arg(long, value_delimiter = ',')]
        m: Vec<u32>,
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Facets of Δ_a(I_G^(m))
    Delta {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Nonzero graded local cohomology dimensions of S/I_G^(m) or S/I_G^m
    Cohomology {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        m: u32,
        #[arg(long, conflicts_with = "ordinary")]
        symbolic: bool,
        #[arg(long)]
        ordinary: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(cmpowers::Error),
    Io(String, io::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(what, e) => write!(f, "{what}: {e}"),
            CliError::Json(e) => write!(f, "json: {e}"),
        }
    }
}

impl From<cmpowers::Error> for CliError {
    fn from(e: cmpowers::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

fn stdout_err(e: io::Error) -> CliError {
    CliError::Io("stdout".into(), e)
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    Ok(text.parse()?)
}

fn print_report(out: &mut impl Write, r: &AnalysisReport) -> io::Result<()> {
    writeln!(out, "graph: n={} edges={:?}", r.n, r.graph.edges)?;
    writeln!(out, "class: {}  diameter: {}", r.class, r.diameter)?;
    let c = &r.criteria;
    writeln!(
        out,
        "criteria: cm_sym2={} cm_sym_high={} eq2={} eq_high={} cm_ord2={} cm_ord_high={}",
        c.cm_sym2, c.cm_sym_high, c.eq2, c.eq_high, c.cm_ord2, c.cm_ord_high
    )?;
    writeln!(
        out,
        "{:>3} {:>5} {:>9} {:>9} {:>6}  witnesses",
        "m", "dim", "cm_sym", "cm_ord", "equal"
    )?;
    for p in &r.powers {
        let mut notes = Vec::new();
        if let Some(w) = &p.symbolic_witness {
            notes.push(format!("H^{}(S/I^(m))_{} = {}", w.i, w.a, w.dim));
        }
        if let Some(w) = &p.ordinary_witness {
            notes.push(format!("H^{}(S/I^m)_{} = {}", w.i, w.a, w.dim));
        }
        if let Some(e) = &p.inequality_witness {
            notes.push(format!(
                "{} in I^(m) \\ I^m",
                cmpowers::Monomial::new(e.clone())
            ));
        }
        writeln!(
            out,
            "{:>3} {:>5} {:>9} {:>9} {:>6}  {}",
            p.m,
            p.krull_dim,
            p.cm_symbolic,
            p.cm_ordinary,
            p.powers_equal,
            notes.join("; ")
        )?;
    }
    if r.mismatches.is_empty() {
        writeln!(out, "mismatches: none")
    } else {
        for m in &r.mismatches {
            writeln!(out, "MISMATCH {m}")?;
        }
        Ok(())
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.cmd {
        Command::Analyze { graph, m_max, json } => {
            let g = read_graph(&graph)?;
            let r = analyze(&g, m_max)?;
            if json {
                serde_json::to_writer_pretty(&mut out, &r)?;
                writeln!(out).map_err(stdout_err)?;
            } else {
                print_report(&mut out, &r).map_err(stdout_err)?;
            }
            Ok(exit_for(r.mismatches.is_empty()))
        }
        Command::Census {
            n,
            m_max,
            out: dest,
            sample,
            seed,
        } => {
            let reports = census::census(n, m_max, sample, seed)?;
            let bad = reports.iter().filter(|r| !r.mismatches.is_empty()).count();
            match &dest {
                Some(p) => {
                    let f = fs::File::create(p)
                        .map_err(|e| CliError::Io(p.display().to_string(), e))?;
                    census::write_census_csv(&reports, f)
                        .map_err(|e| CliError::Io(p.display().to_string(), e))?;
                }
                None => census::write_census_csv(&reports, &mut out).map_err(stdout_err)?,
            }
            eprintln!(
                "census n={n}: {} graphs, {bad} with mismatches",
                reports.len()
            );
            Ok(exit_for(bad == 0))
        }
        Command::Verify {
            theorem,
            n_min,
            n_max,
            m,
            sample,
            seed,
            json,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let mut cfg = VerifyConfig::new(theorem, n_min, n_max).powers(&m);
            cfg.sample = sample;
            cfg.seed = seed;
            let res = verify(&cfg)?;
            if json {
                serde_json::to_writer_pretty(&mut out, &res)?;
                writeln!(out).map_err(stdout_err)?;
            } else {
                writeln!(
                    out,
                    "{} n={}..={} m={:?}: {} graphs, {} mismatches",
                    res.theorem,
                    res.n_min,
                    res.n_max,
                    res.powers,
                    res.graphs_examined,
                    res.mismatches.len()
                )
                .map_err(stdout_err)?;
                for mm in &res.mismatches {
                    writeln!(
                        out,
                        "MISMATCH n={} edges={:?} m={}: {}",
                        mm.graph.n, mm.graph.edges, mm.m, mm.details
                    )
                    .map_err(stdout_err)?;
                }
            }
            eprintln!("elapsed: {:.2?}", res.elapsed);
            Ok(exit_for(res.passed()))
        }
        Command::Delta { graph, m, a } => {
            let g = read_graph(&graph)?;
            let a: DegreeVector = a.parse()?;
            if a.n() != g.n() {
                return Err(cmpowers::Error::AmbientMismatch {
                    expected: g.n(),
                    found: a.n(),
                }
                .into());
            }
            let d = delta_a(&symbolic_power(&g, m), &a);
            if d.is_void() {
                writeln!(out, "void").map_err(stdout_err)?;
            }
            for f in d.facet_lists() {
                let s: Vec<String> = f.iter().map(usize::to_string).collect();
                writeln!(out, "{{{}}}", s.join(",")).map_err(stdout_err)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cohomology {
            graph,
            m,
            symbolic: _,
            ordinary,
        } => {
            let g = read_graph(&graph)?;
            let ideal = if ordinary {
                ordinary_power(&g, m)
            } else {
                symbolic_power(&g, m)
            };
            let lc = LocalCohomology::new(&ideal)?;
            let table = lc.table();
            writeln!(out, "i\ta\tdim").map_err(stdout_err)?;
            for (i, a, d) in table.iter() {
                writeln!(out, "{i}\t{a}\t{d}").map_err(stdout_err)?;
            }
            let r = lc.depth_report();
            writeln!(out, "# depth {} krull_dim {}", r.depth, r.krull_dim).map_err(stdout_err)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        // output piped into something like `head`
        Err(CliError::Io(_, e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
