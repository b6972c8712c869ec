//! Command line for the invariant-subspace workbench.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad input, unknown names,
//! out-of-range data), 2 when a certification or search budget was exceeded.
//! `NILOP_BUDGET` overrides the default certification budget.

use clap::{Parser, Subcommand};
use nilop::artrans;
use nilop::comb;
use nilop::filtrations;
use nilop::graded;
use nilop::homs;
use nilop::pair::SubspacePair;
use nilop::roots;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "nilop",
    version,
    about = "Exact computations with invariant subspaces of nilpotent operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every numeric invariant of a pair.
    Invariants {
        #[arg(long)]
        file: PathBuf,
    },
    /// Apply the translation functor, optionally several times.
    Tau {
        #[arg(long)]
        file: PathBuf,
        /// Number of applications.
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Emit the resulting pair as JSON with a partition summary.
        #[arg(long)]
        json: bool,
    },
    /// Apply the duality.
    Dual {
        #[arg(long)]
        file: PathBuf,
    },
    /// Split a pair into certified indecomposable summands.
    Decompose {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide isomorphism of two pairs.
    Isom {
        /// Paths of the two pairs.
        files: Vec<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// List all isomorphism classes of indecomposable pairs up to a size.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        vmax: u32,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Closed-form counts of the combinatorial families.
    Count {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: u64,
        /// Subspace length, for the kinds that take one.
        #[arg(long)]
        u: Option<u64>,
        /// Width, for the kinds that take one.
        #[arg(long)]
        b: Option<u64>,
        /// Cross-check against exhaustive code enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Build a member of a named one-parameter family.
    Family {
        #[arg(long)]
        name: String,
        /// Homogeneous parameter coordinates, comma separated.
        #[arg(long)]
        c: String,
        #[arg(long)]
        p: u32,
        /// Number of extension steps, for the self-extension family.
        #[arg(long)]
        ell: Option<u32>,
    },
    /// Telescope or height-ordered filtration of a pair.
    Filtration {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "telescope")]
        kind: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the recomputed root table, or just the diff against the print.
    Roots {
        #[arg(long)]
        diff: bool,
    },
    /// Render the triangle with overlays to SVG.
    TriangleSvg {
        #[arg(long)]
        n: u32,
        /// JSON overlay file with points, lines, triangles, hexagons.
        #[arg(long)]
        overlay: Option<PathBuf>,
    },
    /// Run the acceptance suite and print the pass/fail matrix.
    Accept,
}

fn budget_from(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("NILOP_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(homs::DEFAULT_BUDGET)
}

enum CliError {
    Domain(String),
    Budget(String),
}

impl From<nilop::pair::PairError> for CliError {
    fn from(e: nilop::pair::PairError) -> CliError {
        CliError::Domain(e.to_string())
    }
}

impl From<homs::Undecided> for CliError {
    fn from(e: homs::Undecided) -> CliError {
        CliError::Budget(e.to_string())
    }
}

fn load_pair(path: &PathBuf) -> Result<SubspacePair, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("{}: {}", path.display(), e)))?;
    Ok(SubspacePair::from_json(&text)?)
}

fn pair_json(x: &SubspacePair) -> serde_json::Value {
    let tri = x.partition_triple();
    json!({
        "pair": serde_json::from_str::<serde_json::Value>(&x.to_json()).unwrap(),
        "par": {
            "u": tri.u_part.parts(),
            "v": tri.v_part.parts(),
            "w": tri.w_part.parts(),
        },
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Invariants { file } => {
            let x = load_pair(&file)?;
            let inv = x.invariants()?;
            let tri = x.partition_triple();
            let doc = json!({
                "uwb": [inv.uwb.0, inv.uwb.1, inv.uwb.2],
                "pr": [inv.pr.0.to_string(), inv.pr.1.to_string()],
                "q": inv.q.to_string(),
                "d": inv.d.to_string(),
                "m": inv.m,
                "omega": inv.omega,
                "b": inv.b,
                "c_n": inv.c_n,
                "par": {
                    "u": tri.u_part.parts(),
                    "v": tri.v_part.parts(),
                    "w": tri.w_part.parts(),
                },
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            Ok(())
        }
        Command::Tau {
            file,
            power,
            json: as_json,
        } => {
            let x = load_pair(&file)?;
            let start = x.clone();
            let mut y = x;
            for _ in 0..power {
                y = artrans::tau(&y);
            }
            if as_json {
                let mut doc = pair_json(&y);
                if power == 6 {
                    let fixed = homs::is_isomorphic(&y, &start)?;
                    doc["tau6_fixed"] = json!(fixed);
                }
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                let tri = y.partition_triple();
                println!("{:?}", tri);
            }
            Ok(())
        }
        Command::Dual { file } => {
            let x = load_pair(&file)?;
            let d = artrans::dual(&x);
            println!("{}", serde_json::to_string_pretty(&pair_json(&d)).unwrap());
            Ok(())
        }
        Command::Decompose { file, budget } => {
            let x = load_pair(&file)?;
            let leaves = homs::decompose_tracked(&x, budget_from(budget))?;
            let docs: Vec<serde_json::Value> =
                leaves.iter().map(|(leaf, _)| pair_json(leaf)).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "summands": docs })).unwrap()
            );
            Ok(())
        }
        Command::Isom { files, budget } => {
            if files.len() != 2 {
                return Err(CliError::Domain("isom takes exactly two files".into()));
            }
            let a = load_pair(&files[0])?;
            let b = load_pair(&files[1])?;
            let iso = homs::is_isomorphic_with(&a, &b, budget_from(budget))?;
            println!("{}", json!({ "isomorphic": iso }));
            Ok(())
        }
        Command::Enumerate { n, vmax, p, budget } => {
            let list = homs::enumerate_indecomposables(n, vmax, p, budget_from(budget))?;
            for x in &list {
                println!("{}", x.to_json());
            }
            eprintln!("{} classes", list.len());
            Ok(())
        }
        Command::Count {
            kind,
            n,
            u,
            b,
            verify,
        } => {
            let k = comb::parse_count_kind(&kind)
                .ok_or_else(|| CliError::Domain(format!("unknown kind: {}", kind)))?;
            let mut params = vec![n];
            if let Some(u) = u {
                params.push(u);
            }
            if let Some(b) = b {
                params.push(b);
            }
            let value =
                comb::count(k, &params).ok_or_else(|| CliError::Domain("bad parameters".into()))?;
            if verify {
                let oracle = count_oracle(k, &params).ok_or_else(|| {
                    CliError::Domain("no enumeration oracle for this kind".into())
                })?;
                if oracle != value {
                    return Err(CliError::Domain(format!(
                        "closed form {} disagrees with enumeration {}",
                        value, oracle
                    )));
                }
                println!("{:>12}  {}  (verified by enumeration)", value, kind);
            } else {
                println!("{:>12}  {}", value, kind);
            }
            Ok(())
        }
        Command::Family { name, c, p, ell } => {
            let coords: Result<Vec<u32>, _> = c.split(',').map(|s| s.trim().parse()).collect();
            let coords = coords.map_err(|_| CliError::Domain(format!("bad parameter: {}", c)))?;
            let x = match (name.as_str(), ell) {
                ("standard_s6", Some(ell)) => graded::jordan_extension_standard(&coords, ell, p),
                ("gradable_homogeneous", ell) => {
                    graded::gradable_homogeneous_family(ell.unwrap_or(1), &coords, p)
                }
                (other, _) => graded::family(other, &coords, p),
            }
            .map_err(|e| CliError::Domain(e.to_string()))?;
            println!("{}", serde_json::to_string_pretty(&pair_json(&x)).unwrap());
            Ok(())
        }
        Command::Filtration { file, kind, budget } => {
            let x = load_pair(&file)?;
            match kind.as_str() {
                "telescope" => {
                    let steps = filtrations::telescope(&x);
                    let docs: Vec<serde_json::Value> = steps
                        .iter()
                        .map(|s| {
                            json!({
                                "index": s.index,
                                "factor": {
                                    "u": s.factor.u_part.parts(),
                                    "v": s.factor.v_part.parts(),
                                    "w": s.factor.w_part.parts(),
                                },
                                "g_split": s.g_split,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({ "steps": docs })).unwrap()
                    );
                    Ok(())
                }
                "nice" => {
                    let nd =
                        filtrations::nice_decomposition(&x, budget_from(budget)).map_err(|e| {
                            match e {
                                filtrations::FiltrationError::Budget(u) => {
                                    CliError::Budget(u.to_string())
                                }
                                other => CliError::Budget(other.to_string()),
                            }
                        })?;
                    let factors: Vec<serde_json::Value> = nd
                        .factors
                        .iter()
                        .map(|f| {
                            json!({
                                "u": f.u_part.parts(),
                                "v": f.v_part.parts(),
                                "w": f.w_part.parts(),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "factors": factors,
                        "height_one_part": pair_json(&nd.x_second),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    Ok(())
                }
                other => Err(CliError::Domain(format!(
                    "unknown filtration kind: {}",
                    other
                ))),
            }
        }
        Command::Roots { diff } => {
            let (records, diffs) = roots::table_with_diffs();
            if diff {
                if diffs.is_empty() {
                    println!("empty diff: all 120 recomputed rows match the print");
                } else {
                    for d in &diffs {
                        println!(
                            "row {:>3} {}: printed {} computed {}",
                            d.index, d.column, d.printed, d.computed
                        );
                    }
                    return Err(CliError::Domain(format!("{} diffs", diffs.len())));
                }
            } else {
                for r in &records {
                    println!(
                        "{:>3}  {:?}  {:?}  uwb ({},{},{})  slope {}  {}  ({},{})",
                        r.index,
                        r.e8,
                        r.xi,
                        r.uwb.0,
                        r.uwb.1,
                        r.uwb.2,
                        r.phi,
                        r.line_type,
                        r.r_delta,
                        r.r_nabla
                    );
                }
            }
            Ok(())
        }
        Command::TriangleSvg { n, overlay } => {
            let ov = match overlay {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Domain(format!("{}: {}", path.display(), e)))?;
                    serde_json::from_str(&text).map_err(|e| CliError::Domain(e.to_string()))?
                }
                None => nilop::svg::Overlay::default(),
            };
            let svg = nilop::svg::render(n, &ov).map_err(|e| CliError::Domain(e.to_string()))?;
            print!("{}", svg);
            Ok(())
        }
        Command::Accept => {
            let (report, ok) = nilop::acceptance::run_all();
            print!("{}", report);
            if ok {
                Ok(())
            } else {
                Err(CliError::Domain("acceptance criteria failed".into()))
            }
        }
    }
}

/// Exhaustive oracle for the verifiable count kinds.
fn count_oracle(kind: comb::CountKind, params: &[u64]) -> Option<u64> {
    use comb::CountKind as K;
    let n = params[0];
    Some(match kind {
        K::Pickets => comb::PicketCode::all(n as u32).len() as u64,
        K::PicketsHeightN => comb::PicketCode::all(n as u32)
            .iter()
            .filter(|c| c.a0 == 0)
            .count() as u64,
        K::Bipickets => comb::BipicketCode::all(n as u32).len() as u64,
        K::BipicketsHeightN => comb::BipicketCode::all(n as u32)
            .iter()
            .filter(|c| c.sum() == n as u32)
            .count() as u64,
        K::CyclicTotal => comb::SubsetCode::all(n as u32).len() as u64,
        K::CyclicByHeight => comb::SubsetCode::all(n as u32)
            .iter()
            .filter(|e| *e.elems().last().unwrap() == n as u32)
            .count() as u64,
        K::CyclicHw => comb::SubsetCode::all(n as u32)
            .iter()
            .filter(|e| {
                *e.elems().last().unwrap() == n as u32 && e.cardinality() as u64 == 2 * params[1]
            })
            .count() as u64,
        K::CyclicUHeight => comb::SubsetCode::all(n as u32)
            .iter()
            .filter(|e| {
                *e.elems().last().unwrap() == n as u32
                    && e.e_seq()[e.width() as usize - 1] as u64 == params[1]
            })
            .count() as u64,
        K::CyclicUb => comb::SubsetCode::all(n as u32)
            .iter()
            .filter(|e| {
                *e.elems().last().unwrap() == n as u32
                    && e.e_seq()[e.width() as usize - 1] as u64 == params[1]
                    && e.width() as u64 == params[2]
            })
            .count() as u64,
        K::FibonacciP1 => comb::strongly_decreasing_partitions(n as u32).len() as u64,
        K::GridPaths | K::GridPathsVia => return None,
    })
}

fn main() -> ExitCode {
    // Usage problems are domain errors (exit 1); help and version exit 0.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::from(0),
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(1)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("budget exceeded: {}", msg);
            ExitCode::from(2)
        }
    }
}
