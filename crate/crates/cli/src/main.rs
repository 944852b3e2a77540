//! `critideal`: critical ideals, co-ranks and forbidden-graph searches from
//! the command line.
//!
//! Graph arguments are graph6 strings or `@path` (first graph in a graph6
//! file). Exit status: 0 on success, 1 on invalid input or other errors,
//! 2 when the Gröbner basis budget runs out.

use clap::{Args, Parser, Subcommand};
use critical_ideals::critical::{
    blowup, blowup_ideal_trivial_with, critical_ideal_generators, evaluated_laplacian, gamma_with, GammaOptions,
    WeightVector,
};
use critical_ideals::families::{f1_templates, f2_templates, f3_free, family_member};
use critical_ideals::graphs::{enumerate_connected, parse_graph6, parse_graph6_lines, Graph};
use critical_ideals::groebner::{strong_groebner_with, GbConfig};
use critical_ideals::search::{
    connected_up_to, find_minimal_forbidden, read_graph6_file, verify_gamma_equals_f3_free,
    verify_omega_classification, SearchOptions,
};
use critical_ideals::zlinalg::{critical_group, laplacian, smith_normal_form, smith_normal_form_i64};
use critical_ideals::Error;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "critideal", version, about = "Critical ideals of graphs over Z[X]")]
struct Cli {
    /// Maximum number of critical pairs per Gröbner basis.
    #[arg(long, global = true, default_value_t = GbConfig::default().max_pairs)]
    budget: usize,
    /// Maximum total degree of a Gröbner basis element.
    #[arg(long, global = true, default_value_t = GbConfig::default().max_degree)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Algebraic co-rank with the decision path of every tested index.
    Gamma {
        graph: String,
        /// Decide every index instead of stopping at the first nontrivial one.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Reduced strong Gröbner basis of the i-th critical ideal, one
    /// generator per line.
    Ideal { graph: String, index: usize },
    /// Invariant factors of the Laplacian, or of L(G, a) with --point.
    Snf {
        graph: String,
        /// Comma-separated diagonal values a_1,...,a_n.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Critical group of a connected graph and its number of unit factors.
    CriticalGroup { graph: String },
    /// Blow-up G^d as graph6; with --index also the triviality of I_j(G^d).
    Blowup {
        graph: String,
        /// Comma-separated nonzero weights (negative = clique part).
        #[arg(allow_hyphen_values = true)]
        weights: String,
        #[arg(long)]
        index: Option<usize>,
    },
    /// F3-freeness and F1/F2 membership with witnesses.
    FamilyCheck { graph: String },
    /// Minimal forbidden graphs for gamma <= k. Prints TSV lines
    /// `graph6  gamma  critical|-`.
    ForbSearch {
        #[arg(long)]
        k: usize,
        /// graph6 file; defaults to all connected graphs up to --max-n.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        jobs: Jobs,
        /// Append-only progress file for resuming.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        no_prune: bool,
    },
    /// Classification checks over all connected graphs up to --max-n.
    Verify {
        /// Compare F3-freeness with F2 (2) or F1 (3) membership.
        #[arg(long, conflicts_with = "gamma_f3", required_unless_present = "gamma_f3")]
        omega: Option<usize>,
        /// Compare gamma <= 3 with F3-freeness.
        #[arg(long)]
        gamma_f3: bool,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Connected graphs on n vertices, one per isomorphism class.
    Enumerate { n: usize },
}

#[derive(Args, Debug)]
struct Jobs {
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

fn read_graph(arg: &str) -> Result<Graph, Error> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            parse_graph6_lines(&text)?
                .into_iter()
                .next()
                .ok_or_else(|| Error::InvalidArgument(format!("{path} contains no graph")))
        }
        None => parse_graph6(arg),
    }
}

fn parse_ints(text: &str) -> Result<Vec<i64>, Error> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("'{t}' is not an integer")))
        })
        .collect()
}

fn with_jobs<T>(jobs: &Jobs, f: impl FnOnce() -> T + Send) -> Result<T, Error>
where
    T: Send,
{
    match jobs.jobs {
        None => Ok(f()),
        Some(0) => Err(Error::InvalidArgument("--jobs must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::InvalidArgument(e.to_string())),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<String, Error> {
    let gb = GbConfig {
        max_pairs: cli.budget,
        max_degree: cli.max_degree,
    };
    let mut out = String::new();
    match cli.command {
        Command::Gamma { graph, exhaustive } => {
            let g = read_graph(&graph)?;
            let r = gamma_with(&g, &GammaOptions { gb, exhaustive })?;
            writeln!(out, "gamma = {}", r.gamma).unwrap();
            if !r.connected {
                writeln!(out, "connected = no").unwrap();
            }
            for v in &r.per_index {
                let verdict = if v.trivial { "trivial" } else { "nontrivial" };
                writeln!(out, "I_{}\t{verdict}\t{}", v.index, v.path).unwrap();
            }
        }
        Command::Ideal { graph, index } => {
            let g = read_graph(&graph)?;
            let gens = critical_ideal_generators(&g, index)?;
            let basis = strong_groebner_with(&gens, &gb)?;
            if basis.basis().is_empty() {
                writeln!(out, "0").unwrap();
            }
            for p in basis.basis() {
                writeln!(out, "{p}").unwrap();
            }
        }
        Command::Snf { graph, point } => {
            let g = read_graph(&graph)?;
            let snf = match point {
                Some(p) => {
                    let m = evaluated_laplacian(&g, &parse_ints(&p)?)?;
                    smith_normal_form_i64(&m, g.order(), g.order())
                }
                None => smith_normal_form(&laplacian(&g)),
            };
            let mut factors: Vec<String> = snf.factors.iter().map(ToString::to_string).collect();
            factors.extend(std::iter::repeat_n("0".to_string(), g.order() - snf.rank));
            writeln!(out, "{}", factors.join(" ")).unwrap();
        }
        Command::CriticalGroup { graph } => {
            let g = read_graph(&graph)?;
            let k = critical_group(&g)?;
            writeln!(out, "{k}").unwrap();
            writeln!(out, "f1 = {}", k.f1).unwrap();
        }
        Command::Blowup { graph, weights, index } => {
            let g = read_graph(&graph)?;
            let d = WeightVector::new(parse_ints(&weights)?)?;
            writeln!(out, "{}", blowup(&g, &d)?).unwrap();
            if let Some(j) = index {
                let t = blowup_ideal_trivial_with(&g, &d, j, &gb)?;
                writeln!(out, "I_{j} trivial = {}", yes_no(t)).unwrap();
            }
        }
        Command::FamilyCheck { graph } => {
            let g = read_graph(&graph)?;
            match f3_free(&g) {
                None => writeln!(out, "F3-free = yes").unwrap(),
                Some(w) => writeln!(out, "F3-free = no\t{}\t{:?}", w.name, w.injection).unwrap(),
            }
            for (label, templates) in [("F1", f1_templates()), ("F2", f2_templates())] {
                match family_member(&g, &templates)? {
                    Some((t, inj)) => writeln!(out, "{label} = yes\t{}\t{inj:?}", t.name).unwrap(),
                    None => writeln!(out, "{label} = no").unwrap(),
                }
            }
        }
        Command::ForbSearch {
            k,
            input,
            max_n,
            jobs,
            checkpoint,
            no_prune,
        } => {
            let stream = match input {
                Some(p) => read_graph6_file(&p)?,
                None => connected_up_to(max_n)?,
            };
            let opts = SearchOptions {
                prune: !no_prune,
                checkpoint,
                gb,
                ..Default::default()
            };
            let r = with_jobs(&jobs, || find_minimal_forbidden(stream, k, &opts))??;
            for h in &r.hits {
                writeln!(out, "{}", h.tsv()).unwrap();
            }
            eprintln!(
                "processed {}, hits {}, pruned {}, resumed {}",
                r.processed,
                r.hits.len(),
                r.skipped_by_pruning,
                r.resumed
            );
        }
        Command::Verify {
            omega,
            gamma_f3,
            max_n,
            jobs,
        } => {
            if gamma_f3 {
                let r = with_jobs(&jobs, || verify_gamma_equals_f3_free(max_n, &gb))??;
                writeln!(out, "checked = {}", r.checked).unwrap();
                writeln!(out, "gamma<=3 = {}", r.in_class).unwrap();
                writeln!(out, "discrepancies = {}", r.discrepancies.len()).unwrap();
                for d in &r.discrepancies {
                    let w = d.witness.as_deref().unwrap_or("-");
                    writeln!(out, "{}\t{}\t{w}", d.graph6, d.gamma).unwrap();
                }
            } else {
                let omega = omega.expect("required unless --gamma-f3");
                let r = with_jobs(&jobs, || verify_omega_classification(max_n, omega))??;
                writeln!(out, "checked = {}", r.checked).unwrap();
                writeln!(out, "F3-free = {}", r.f3_free).unwrap();
                writeln!(out, "counterexamples = {}", r.counterexamples.len()).unwrap();
                for c in &r.counterexamples {
                    writeln!(out, "{c}").unwrap();
                }
            }
        }
        Command::Enumerate { n } => {
            for g in enumerate_connected(n)? {
                writeln!(out, "{g}").unwrap();
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 2 } else { 1 })
        }
    }
}
