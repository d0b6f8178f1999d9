use std::fmt::Write as _;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use fanopoly::classification::{
    enumerate_fano_max_index, enumerate_minimal_empty, enumerate_minimal_with_repeated, partition_into_classes,
    verify_table, ClassBudget, TableId,
};
use fanopoly::io::{analysis_value, parse_polygon, parse_polygon_list, polygon_value, vertices_value};
use fanopoly::mutations::{minimize, mutate_raw, mutation_spec, mutation_spec_for_normal, orbit};
use fanopoly::quivers::{mutate_quiver, quiver_of};
use fanopoly::{canonical_form, CyclicQuotientSingularity, Error, FanoPolygon, IntVec2, OrbitBudget, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "fanopoly", version, about = "Mutations, invariants and classification of Fano polygons")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Worker threads for orbit and classification searches.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    /// Largest number of polygons an orbit search may hold.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_nodes: u64,
    /// Skip polygons with more boundary points than this during orbit search
    /// (default: the input's count plus 10).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    max_boundary: Option<u64>,
    /// Highest degree of the Hilbert series window.
    #[arg(long, global = true, default_value_t = 12)]
    hilbert_degree: usize,
    /// Print polygons in the input coordinates instead of canonical form.
    #[arg(long, global = true)]
    raw: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a polygon.
    Analyze {
        /// Inline polygon (JSON or "x,y;x,y;..."), a file path, or "-" for stdin.
        polygon: String,
    },
    /// Mutate a polygon at one edge.
    Mutate {
        polygon: String,
        /// Inner normal of the edge to mutate, as "x,y".
        #[arg(long, conflicts_with = "edge", allow_hyphen_values = true)]
        normal: Option<String>,
        /// Index of the edge to mutate, in the printed vertex order.
        #[arg(long)]
        edge: Option<usize>,
    },
    /// Breadth-first mutation graph of a polygon.
    Orbit {
        polygon: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        depth: Option<u64>,
    },
    /// A minimal polygon in the mutation class.
    Minimize { polygon: String },
    /// Quiver of a polygon, optionally mutated at a vertex.
    Quiver {
        polygon: String,
        #[arg(long)]
        mutate: Option<usize>,
    },
    /// Partition a list of polygons into mutation-equivalence classes.
    Classify {
        /// File of polygons (JSON list or one compact polygon per line), or "-".
        input: String,
    },
    /// Enumerate polygons.
    Enumerate {
        #[arg(value_enum)]
        target: Target,
        /// Local index bound for `max-index`.
        r: Option<i64>,
    },
    /// Check a bundled reference table.
    VerifyTable { table: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Reflexive,
    MinimalEmpty,
    MinimalThird,
    MaxIndex,
}

fn read_source(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::BadInput(format!("stdin: {e}")))?;
        return Ok(s);
    }
    if Path::new(arg).is_file() {
        return std::fs::read_to_string(arg).map_err(|e| Error::BadInput(format!("{arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn read_polygon(arg: &str) -> Result<FanoPolygon> {
    parse_polygon(&read_source(arg)?)
}

fn parse_vector(s: &str) -> Result<IntVec2> {
    let parts: Vec<&str> = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']).split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected \"x,y\", got {s:?}")));
    }
    let coord = |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coordinate {t:?} in {s:?}")));
    Ok(IntVec2::from_big(coord(parts[0])?, coord(parts[1])?))
}

fn unsupported(cmd: &str, format: Format) -> Error {
    Error::Unsupported(format!("{cmd} has no {format:?} output").to_lowercase())
}

fn polygon_list_csv(polys: &[FanoPolygon]) -> String {
    let mut s = String::from("vertices\n");
    for p in polys {
        let verts: Vec<String> = p.vertices().iter().map(|v| format!("({},{})", v.x, v.y)).collect();
        let _ = writeln!(s, "\"{}\"", verts.join(" "));
    }
    s
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

fn orbit_budget(cli: &Cli) -> OrbitBudget {
    OrbitBudget {
        max_nodes: cli.max_nodes as usize,
        max_boundary: cli.max_boundary.map(BigInt::from),
        max_depth: None,
        jobs: cli.jobs as usize,
    }
}

fn run(cli: &Cli) -> Result<String> {
    let fmt = cli.format;
    match &cli.command {
        Command::Analyze { polygon } => {
            let p = read_polygon(polygon)?;
            let report = analysis_value(&p, cli.raw, cli.hilbert_degree)?;
            match fmt {
                Format::Json => Ok(pretty(&report)),
                Format::Text => {
                    let shown = if cli.raw { p.clone() } else { canonical_form(&p).0 };
                    let mut s = String::new();
                    let _ = writeln!(s, "polygon:  {shown}");
                    let c = &report["content"];
                    let basket: Vec<String> =
                        c["basket"].as_array().into_iter().flatten().map(|b| b.as_str().unwrap_or("").to_string()).collect();
                    let _ = writeln!(s, "content:  ({}, {{{}}})", c["n"], basket.join(", "));
                    let _ = writeln!(s, "degree:   {}", report["degree"].to_string().trim_matches('"'));
                    let _ = writeln!(s, "divisors: ({},{})", report["divisors"][0], report["divisors"][1]);
                    let _ = writeln!(s, "minimal:  {}", report["minimal"]);
                    let h: Vec<String> = report["hilbert"]
                        .as_array()
                        .into_iter()
                        .flatten()
                        .map(|x| x.to_string().trim_matches('"').to_string())
                        .collect();
                    let _ = writeln!(s, "hilbert:  {}", h.join(" "));
                    Ok(s)
                }
                other => Err(unsupported("analyze", other)),
            }
        }
        Command::Mutate { polygon, normal, edge } => {
            let p = read_polygon(polygon)?;
            let base = if cli.raw { p } else { canonical_form(&p).0 };
            let spec = match (normal, edge) {
                (Some(w), _) => mutation_spec_for_normal(&base, &parse_vector(w)?)?,
                (None, Some(i)) => {
                    if *i >= base.len() {
                        return Err(Error::BadInput(format!("edge {i} out of range for {} edges", base.len())));
                    }
                    mutation_spec(&base, *i)?
                }
                (None, None) => return Err(Error::BadInput("give --normal or --edge".into())),
            };
            let q = mutate_raw(&base, &spec)?;
            match fmt {
                Format::Json => Ok(pretty(&polygon_value(&q, cli.raw))),
                Format::Text => Ok(format!("{}\n", if cli.raw { q } else { canonical_form(&q).0 })),
                other => Err(unsupported("mutate", other)),
            }
        }
        Command::Orbit { polygon, depth } => {
            let p = read_polygon(polygon)?;
            let budget = OrbitBudget { max_depth: depth.map(|d| d as usize), ..orbit_budget(cli) };
            let g = orbit(&p, &budget)?;
            match fmt {
                Format::Json => Ok(pretty(&g.to_json())),
                Format::Dot => Ok(g.to_dot()),
                Format::Csv => Ok(polygon_list_csv(&g.nodes)),
                Format::Text => {
                    let mut s = String::new();
                    for (i, n) in g.nodes.iter().enumerate() {
                        let _ = writeln!(s, "{i}\t{n}");
                    }
                    let _ = writeln!(s, "nodes: {}  edges: {}  truncated: {}", g.nodes.len(), g.edges.len(), g.truncated);
                    Ok(s)
                }
            }
        }
        Command::Minimize { polygon } => {
            let q = minimize(&read_polygon(polygon)?);
            match fmt {
                Format::Json => Ok(pretty(&polygon_value(&q, true))),
                Format::Text => Ok(format!("{q}\n")),
                other => Err(unsupported("minimize", other)),
            }
        }
        Command::Quiver { polygon, mutate } => {
            let p = read_polygon(polygon)?;
            let base = if cli.raw { p } else { canonical_form(&p).0 };
            let mut q = quiver_of(&base)?;
            if let Some(v) = mutate {
                q = mutate_quiver(&q, *v)?;
            }
            match fmt {
                Format::Json => Ok(pretty(&q.to_json())),
                Format::Dot => Ok(q.to_dot()),
                Format::Text | Format::Csv => {
                    let sep = if fmt == Format::Csv { "," } else { " " };
                    let mut s = String::new();
                    for row in &q.b {
                        let r: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        let _ = writeln!(s, "{}", r.join(sep));
                    }
                    Ok(s)
                }
            }
        }
        Command::Classify { input } => {
            let polys = parse_polygon_list(&read_source(input)?)?;
            if polys.is_empty() {
                return Err(Error::BadInput("no polygons to classify".into()));
            }
            let budget = ClassBudget {
                orbit: OrbitBudget { max_nodes: (cli.max_nodes as usize).min(5_000), ..orbit_budget(cli) },
                ..ClassBudget::default()
            };
            let report = partition_into_classes(&polys, &budget);
            match fmt {
                Format::Json => Ok(pretty(&report.to_json())),
                Format::Csv => Ok(report.to_csv()),
                Format::Text => {
                    let mut s = String::new();
                    for (c, members) in report.classes.iter().enumerate() {
                        let _ = writeln!(s, "class {c}: {} polygon(s), e.g. {}", members.len(), report.polygons[members[0]]);
                    }
                    let _ = writeln!(s, "classes: {}  unresolved pairs: {}", report.class_count(), report.unresolved.len());
                    Ok(s)
                }
                other => Err(unsupported("classify", other)),
            }
        }
        Command::Enumerate { target, r } => {
            let polys = match target {
                Target::Reflexive => enumerate_fano_max_index(1)?,
                Target::MinimalEmpty => enumerate_minimal_empty(),
                Target::MinimalThird => {
                    enumerate_minimal_with_repeated(&CyclicQuotientSingularity::from_i64(3, 1, 2)?)?
                }
                Target::MaxIndex => {
                    let r = r.ok_or_else(|| Error::BadInput("max-index needs a bound r".into()))?;
                    enumerate_fano_max_index(r)?
                }
            };
            match fmt {
                Format::Json => Ok(pretty(&json!({
                    "count": polys.len(),
                    "polygons": polys.iter().map(|p| json!({"vertices": vertices_value(p)})).collect::<Vec<_>>(),
                }))),
                Format::Csv => Ok(polygon_list_csv(&polys)),
                Format::Text => Ok(polys.iter().map(|p| format!("{p}\n")).collect()),
                other => Err(unsupported("enumerate", other)),
            }
        }
        Command::VerifyTable { table } => {
            let id: TableId = table.parse()?;
            let report = verify_table(id)?;
            match fmt {
                Format::Json => Ok(pretty(&serde_json::to_value(&report).expect("report serializes"))),
                Format::Text => Ok(format!("{id}: {} rows ok\n", report.rows.len())),
                other => Err(unsupported("verify-table", other)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_cross_check() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}
