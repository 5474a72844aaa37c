use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quiverkit::arcs::{enumerate_m_arcs, TaggedArc};
use quiverkit::components::connected_components;
use quiverkit::export::{export_arcs_svg, export_dot, read_json, write_json};
use quiverkit::families::{build_gamma_d, build_gamma_d_m, build_za_quotient};
use quiverkit::iso::find_isomorphism;
use quiverkit::paths::power;
use quiverkit::topology::{classify_surface, mesh_complex};
use quiverkit::verify::{self, Suite};
use quiverkit::{Error, TranslationQuiver};

/// Translation quivers of type D, their restricted powers and the
/// punctured-polygon arc model.
#[derive(Parser)]
#[command(name = "quiverkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Gamma(D_n, 1)
    D,
    /// Gamma(D_n, m)
    Dm,
    /// ZA_rows / tau^period
    Za,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    DComponent,
    Decomposition,
    ArcModel,
    #[value(name = "remark-1-2")]
    PowerRestriction,
    #[value(name = "lemma-3-6")]
    SectionalEndpoints,
    Torus,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::DComponent => Suite::DComponent,
            SuiteArg::Decomposition => Suite::Decomposition,
            SuiteArg::ArcModel => Suite::ArcModel,
            SuiteArg::PowerRestriction => Suite::PowerRestriction,
            SuiteArg::SectionalEndpoints => Suite::SectionalEndpoints,
            SuiteArg::Torus => Suite::Torus,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a quiver and write it as JSON.
    Build {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        period: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// m-th power (sectional paths of length m) of a stored quiver.
    Power {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        restricted: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// List connected components in deterministic order.
    Components {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search for an isomorphism of translation quivers. Exit 1 if none.
    Iso {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// List the tagged m-arcs of the punctured (nm-m+1)-gon.
    Arcs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Draw only these arcs, e.g. `6,2` or `6-`.
        #[arg(long, num_args = 1..)]
        highlight: Vec<String>,
    },
    /// Classify the mesh complex of a quiver or one of its components.
    Topology {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        component: Option<usize>,
    },
    /// Graphviz rendering of a stored quiver.
    Dot {
        #[arg(long = "in")]
        input: PathBuf,
        /// Draw the translation as dashed edges.
        #[arg(long)]
        tau: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rerun a verification suite over one cell or a grid.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, requires = "m", conflicts_with = "grid")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        m: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["N_MAX", "M_MAX"])]
        grid: Option<Vec<usize>>,
    },
}

enum Outcome {
    Done,
    Refuted,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Error> {
    v.ok_or_else(|| Error::Parameter(format!("--{flag} is required for this family")))
}

fn component(q: &TranslationQuiver, k: Option<usize>) -> Result<TranslationQuiver, Error> {
    match k {
        None => Ok(q.clone()),
        Some(k) => {
            let comps = connected_components(q);
            let total = comps.len();
            comps
                .into_iter()
                .nth(k)
                .ok_or_else(|| Error::Parameter(format!("component {k} out of range (0..{total})")))
        }
    }
}

#[derive(Serialize)]
struct ComponentSummary {
    arrows: usize,
    index: usize,
    size: usize,
    vertices: Vec<String>,
}

fn run(cmd: Cmd) -> Result<Outcome, Error> {
    match cmd {
        Cmd::Build {
            family,
            n,
            m,
            rows,
            period,
            out,
        } => {
            let q = match family {
                Family::D => build_gamma_d(need(n, "n")?)?,
                Family::Dm => build_gamma_d_m(need(n, "n")?, m.unwrap_or(1))?,
                Family::Za => build_za_quotient(need(rows, "rows")?, need(period, "period")?)?,
            };
            write_json(&q, &out)?;
            println!(
                "{} vertices, {} arrows -> {}",
                q.len(),
                q.arrow_count(),
                out.display()
            );
        }
        Cmd::Power {
            input,
            m,
            restricted,
            out,
        } => {
            let q = power(&read_json(&input)?, m, restricted)?;
            write_json(&q, &out)?;
            println!(
                "{} vertices, {} arrows -> {}",
                q.len(),
                q.arrow_count(),
                out.display()
            );
        }
        Cmd::Components { input, json } => {
            let comps = connected_components(&read_json(&input)?);
            if json {
                let rows: Vec<ComponentSummary> = comps
                    .iter()
                    .enumerate()
                    .map(|(index, c)| ComponentSummary {
                        arrows: c.arrow_count(),
                        index,
                        size: c.len(),
                        vertices: c.vertices().map(|v| v.to_string()).collect(),
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                for (k, c) in comps.iter().enumerate() {
                    println!(
                        "component {k}: {} vertices, {} arrows, translation defined on {}",
                        c.len(),
                        c.arrow_count(),
                        c.tau_map().len()
                    );
                }
            }
        }
        Cmd::Iso { a, b } => {
            let (qa, qb) = (read_json(&a)?, read_json(&b)?);
            if qa.len() != qb.len() {
                println!("not isomorphic ({} vs {} vertices)", qa.len(), qb.len());
                return Ok(Outcome::Refuted);
            }
            match find_isomorphism(&qa, &qb) {
                Some(map) => println!("isomorphic: {map}"),
                None => {
                    println!("not isomorphic");
                    return Ok(Outcome::Refuted);
                }
            }
        }
        Cmd::Arcs {
            n,
            m,
            svg,
            highlight,
        } => {
            let hl = highlight
                .iter()
                .map(|s| s.parse::<TaggedArc>())
                .collect::<Result<Vec<_>, _>>()?;
            let hl = (!hl.is_empty()).then_some(hl);
            if let Some(path) = &svg {
                std::fs::write(path, export_arcs_svg(n, m, hl.as_deref())?)?;
            }
            let arcs = enumerate_m_arcs(n, m)?;
            let names: Vec<String> = arcs.iter().map(|a| a.to_string()).collect();
            println!("{} tagged {m}-arcs: {}", arcs.len(), names.join(" "));
        }
        Cmd::Topology {
            input,
            component: k,
        } => {
            let q = component(&read_json(&input)?, k)?;
            let c = mesh_complex(&q)?;
            let r = classify_surface(&c);
            let (v, e, f) = c.counts();
            let orient = match r.orientable {
                Some(true) => "orientable",
                Some(false) => "non-orientable",
                None => "n/a",
            };
            println!(
                "(V,E,F) = ({v},{e},{f}), chi={}, {orient}, {} boundary component(s): {}",
                r.euler_characteristic, r.boundary_components, r.classification
            );
            if let Some(why) = r.offence {
                println!("not a surface at {why}");
            }
        }
        Cmd::Dot { input, tau, out } => {
            let text = export_dot(&read_json(&input)?, tau);
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
        }
        Cmd::Verify { suite, n, m, grid } => {
            let suite = Suite::from(suite);
            let cells = match (n, m, grid) {
                _ if suite == Suite::Torus => vec![(4, 2)],
                (Some(n), Some(m), _) => vec![(n, m)],
                (_, _, Some(g)) => verify::grid(g[0], g[1]),
                _ => verify::grid(6, 4),
            };
            let verdicts = verify::run_grid(suite, &cells, verify::jobs_from_env());
            for v in &verdicts {
                println!("{v}");
            }
            let ok = verdicts.iter().filter(|v| v.ok).count();
            println!("{ok}/{} cells verified", verdicts.len());
            if ok != verdicts.len() {
                return Ok(Outcome::Refuted);
            }
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Refuted) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
