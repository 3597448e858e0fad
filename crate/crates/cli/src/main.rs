use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hybrid_groth::crystal::{counts_to_expansion, schur_expansion_via_crystal, schur_expansion_via_lattice_words, CrystalGraph};
use hybrid_groth::fomin_greene::{a_product, b_product, check_relations, commutator_relation, fomin_greene_relations, ud_relations, OperatorContext};
use hybrid_groth::newton::has_snp;
use hybrid_groth::omega::{j_polynomial, omega_image_via_expansion};
use hybrid_groth::polyring::{schur_expand, Specialization, Subst};
use hybrid_groth::svrpp::hybrid_polynomial;
use hybrid_groth::verify::{run_suite, staircase_check, Bounds, SuiteReport, SUITES};
use hybrid_groth::{Partition, Poly, SkewShape};

#[derive(Parser)]
#[command(name = "hgrot", version, about = "Hybrid Grothendieck polynomials of skew shapes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the parallel suites (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion, cross-checked across the crystal, lattice-word and
    /// elimination routes.
    Expand {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        vars: u32,
    },
    /// The polynomial itself, optionally with t and w specialized.
    Poly {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        vars: u32,
        /// "formal", "alpha", or an integer for every t_i.
        #[arg(long, default_value = "formal", allow_hyphen_values = true)]
        t: String,
        /// "formal", "beta", or an integer for every w_i.
        #[arg(long, default_value = "formal", allow_hyphen_values = true)]
        w: String,
    },
    /// Crystal graph on the fillings with entries at most `vars`.
    Crystal {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        vars: u32,
        /// Group components into clusters in DOT output.
        #[arg(long)]
        cluster: bool,
    },
    /// Newton polytope and SNP check of the polynomial at t = w = 1.
    Newton {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        vars: u32,
    },
    /// Omega image through marked multiset-valued tableaux, cross-checked
    /// against the conjugated Schur expansion.
    Omega {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        vars: u32,
        /// "formal" or an integer.
        #[arg(long, default_value = "formal", allow_hyphen_values = true)]
        alpha: String,
        /// "formal" or an integer.
        #[arg(long, default_value = "formal", allow_hyphen_values = true)]
        beta: String,
    },
    /// Column adding operators.
    Fg {
        #[command(subcommand)]
        action: FgAction,
    },
    /// Runs a property suite, or all of them.
    Verify {
        /// Suite name or "all".
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_cells: usize,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        disconnected_max_n: u32,
        #[arg(long, default_value_t = 50)]
        orders: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compares G for δ_n/ρ and δ_n/ρ' over all ρ ⊆ δ_n.
    Staircase {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        vars: u32,
    },
}

#[derive(Subcommand)]
enum FgAction {
    /// Checks the u/d identities and the relations for ũ inside a box.
    Verify {
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long = "box", default_value = "4,4,4,4")]
        bound: Partition,
    },
    /// Coefficient of λ in ⋯Ã(x_2)Ã(x_1)·μ.
    Aproduct {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        vars: usize,
    },
    /// Coefficient of λ in ⋯B̃(x_2)B̃(x_1)·μ up to x-degree `degree`.
    Bproduct {
        #[arg(long)]
        shape: SkewShape,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        degree: u32,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Violation(String),
    #[error(transparent)]
    Lib(#[from] hybrid_groth::Error),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Violation(_) | CliError::Lib(_) => 1,
        }
    }
}

fn subst(text: &str, symbol: Subst) -> Result<Subst, CliError> {
    match text {
        "formal" => Ok(Subst::Keep),
        "alpha" | "beta" => Ok(symbol),
        v => v.parse().map(Subst::Value).map_err(|_| CliError::Usage(format!("expected formal or an integer, got {v:?}"))),
    }
}

fn scalar(text: &str, symbol: Subst) -> Result<Subst, CliError> {
    match text {
        "formal" => Ok(symbol),
        v => v.parse().map(Subst::Value).map_err(|_| CliError::Usage(format!("expected formal or an integer, got {v:?}"))),
    }
}

fn only(format: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage("output format not available for this command".into()))
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn print_poly(format: Format, p: &Poly) {
    match format {
        Format::Json => print_json(&json!({ "vars": p.ambient(), "terms": p })),
        _ => println!("{p}"),
    }
}

fn suite_outcome(format: Format, reports: &[SuiteReport]) -> Result<(), CliError> {
    match format {
        Format::Json => print_json(&json!(reports)),
        _ => {
            for r in reports {
                println!("{}: {} checks, {} failures", r.suite, r.checks, r.failure_count);
                for f in &r.failures {
                    println!("  {f}");
                }
            }
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.ok()).map(|r| r.suite.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("failing suites: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Expand { shape, vars } => {
            only(format, &[Format::Text, Format::Json])?;
            let crystal = schur_expansion_via_crystal(&shape, vars).map_err(hybrid_groth::Error::from)?;
            let words = schur_expansion_via_lattice_words(&shape, vars).map_err(hybrid_groth::Error::from)?;
            let direct = schur_expand(&hybrid_polynomial(&shape, vars)).map_err(hybrid_groth::Error::from)?;
            let expansion = counts_to_expansion(&crystal);
            match format {
                Format::Json => {
                    let table: Vec<_> = crystal
                        .iter()
                        .map(|((nu, ceq, ex), c)| json!({ "nu": nu, "ceq": ceq, "ex": ex, "count": c }))
                        .collect();
                    print_json(&json!({ "shape": shape.to_string(), "vars": vars, "table": table, "expansion": expansion }));
                }
                _ => {
                    for ((nu, ceq, ex), c) in &crystal {
                        println!("{nu}\tceq={ceq:?}\tex={ex:?}\t{c}");
                    }
                    println!("{expansion}");
                }
            }
            if crystal != words || direct != expansion {
                return Err(CliError::Violation("the three expansion routes disagree".into()));
            }
        }
        Command::Poly { shape, vars, t, w } => {
            only(format, &[Format::Text, Format::Json])?;
            let spec = Specialization { t: subst(&t, Subst::Alpha)?, w: subst(&w, Subst::Beta)?, ..Specialization::identity() };
            print_poly(format, &hybrid_polynomial(&shape, vars).specialize(&spec));
        }
        Command::Crystal { shape, vars, cluster } => {
            let g = CrystalGraph::build(&shape, vars).map_err(hybrid_groth::Error::from)?;
            let comps = g.components();
            let sources = g.sources();
            match format {
                Format::Dot => print!("{}", g.to_dot(cluster)),
                Format::Json => {
                    let nodes: Vec<String> = g.nodes.iter().map(|t| t.to_string()).collect();
                    let edges: Vec<_> = g.edges.iter().map(|(a, i, b)| json!({ "from": a, "label": i, "to": b })).collect();
                    print_json(&json!({ "nodes": nodes, "edges": edges, "components": comps, "sources": sources }));
                }
                Format::Text => {
                    println!("{} nodes, {} edges, {} components", g.nodes.len(), g.edges.len(), comps.len());
                    for comp in &comps {
                        let top = comp.iter().find(|k| sources.binary_search(k).is_ok()).copied().unwrap_or(comp[0]);
                        let t = &g.nodes[top];
                        println!("size {}\ttop {}\twt={:?} ceq={:?} ex={:?}", comp.len(), t, t.ircont(), t.ceq(), t.excess());
                    }
                }
            }
        }
        Command::Newton { shape, vars } => {
            only(format, &[Format::Text, Format::Json])?;
            let p = hybrid_polynomial(&shape, vars).specialize(&Specialization::values(1, 1));
            let r = has_snp(&p).map_err(hybrid_groth::Error::from)?;
            let straight = shape.inner.is_empty();
            match format {
                Format::Json => print_json(&json!({ "shape": shape.to_string(), "vars": vars, "straight": straight, "report": r })),
                _ => {
                    println!("support size: {}", r.support_size);
                    println!("dimension: {}", r.polytope.dim);
                    println!("vertices: {:?}", r.polytope.vertices);
                    for f in &r.polytope.facets {
                        let normal: Vec<String> = f.normal.iter().map(|c| c.to_string()).collect();
                        println!("facet: ({}) · x <= {}", normal.join(", "), f.offset);
                    }
                    println!("lattice points: {}", r.lattice_points.len());
                    for q in &r.lattice_points {
                        println!("  {q:?}");
                    }
                    println!("SNP: {}", r.holds);
                    if !straight {
                        println!("note: skew shape; saturation is only established for straight shapes");
                    }
                }
            }
        }
        Command::Omega { shape, degree, vars, alpha, beta } => {
            only(format, &[Format::Text, Format::Json])?;
            let spec = Specialization { alpha: scalar(&alpha, Subst::Alpha)?, beta: scalar(&beta, Subst::Beta)?, ..Specialization::identity() };
            let j = j_polynomial(&shape, vars, degree);
            let check = omega_image_via_expansion(&shape, vars, degree).map_err(hybrid_groth::Error::from)?;
            print_poly(format, &j.specialize(&spec));
            if check != j {
                return Err(CliError::Violation("tableau sum and conjugated expansion disagree".into()));
            }
        }
        Command::Fg { action } => {
            only(format, &[Format::Text, Format::Json])?;
            match action {
                FgAction::Verify { mu, bound } => {
                    let ctx = OperatorContext::new(mu, bound);
                    let cols = ctx.columns();
                    let reports = [
                        ("u/d identities", check_relations(&ctx, &ud_relations(cols))),
                        ("relations for ũ", check_relations(&ctx, &fomin_greene_relations(cols))),
                        ("e_1 e_2 = e_2 e_1", check_relations(&ctx, &[commutator_relation(1, 2, cols)])),
                    ];
                    match format {
                        Format::Json => {
                            let v: Vec<_> = reports.iter().map(|(name, r)| json!({ "family": name, "report": r })).collect();
                            print_json(&json!(v));
                        }
                        _ => {
                            for (name, r) in &reports {
                                println!("{name}: {} evaluations, {} failures", r.checked, r.failures.len());
                                for f in &r.failures {
                                    println!("  {} {:?} at {}: {} vs {}", f.relation, f.indices, f.lambda, f.lhs, f.rhs);
                                }
                            }
                        }
                    }
                    if reports.iter().any(|(_, r)| !r.ok()) {
                        return Err(CliError::Violation("operator relations fail".into()));
                    }
                }
                FgAction::Aproduct { shape, vars } => print_poly(format, &a_product(&shape, vars)),
                FgAction::Bproduct { shape, vars, degree } => print_poly(format, &b_product(&shape, vars, degree)),
            }
        }
        Command::Verify { suite, max_cells, max_n, disconnected_max_n, orders, seed } => {
            only(format, &[Format::Text, Format::Json])?;
            let b = Bounds { max_cells, max_n, disconnected_max_n, orders, seed };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut reports = Vec::new();
            for name in names {
                let r = run_suite(name, &b)
                    .ok_or_else(|| CliError::Usage(format!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "))))?;
                reports.push(r);
            }
            suite_outcome(format, &reports)?;
        }
        Command::Staircase { n, vars } => {
            only(format, &[Format::Text, Format::Json])?;
            let r = staircase_check(n, vars);
            match format {
                Format::Json => print_json(&json!(r)),
                _ => {
                    for (rho, conj, eq) in &r.cases {
                        println!("{rho}\t{conj}\t{}", if *eq { "equal" } else { "DIFFERENT" });
                    }
                }
            }
            if !r.ok() {
                return Err(CliError::Violation("some staircase pair differs".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // Let `hgrot ... | head` end quietly instead of panicking on a closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
