//! Command line driver: fixture reports, plots, counter-model search, and
//! axiom-system analysis.
//!
//! Exit codes: 0 success, 1 fixture or assertion failure, 2 usage or
//! configuration error.

use clap::{Parser, Subcommand};
use mdgeo::harness::{expected_status, run_fixture, AxiomReport, CATALOG};
use mdgeo::logic::{
    analyze_construction, default_universe, is_consistent, is_independent, AxiomSystem,
};
use mdgeo::oracle::{OracleGrid, Window};
use mdgeo::svg::{render, Overlay};
use mdgeo::{circle, geodesics_between, parse_point_expr, MdConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mdgeo", version, about = "Discontinuous two-sheet geometry kernel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the fixture catalog and write a report bundle.
    Report {
        /// Model configuration JSON; the built-in default when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Only fixtures whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also run the metric-vs-oracle agreement check at this grid step.
        #[arg(long)]
        grid_step: Option<f64>,
        /// Include per-fixture wall times (makes output nondeterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Render the model or an overlay as SVG.
    Plot {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// model | geodesic A B | circle C R | triangle A B C
        #[arg(trailing_var_arg = true, required = true)]
        what: Vec<String>,
    },
    /// Exhaustive counter-model search at desk scale.
    CounterSearch {
        #[arg(long)]
        max_points: usize,
        #[arg(long)]
        max_lines: usize,
        /// Comma-separated subset of 1,2,3 that must hold (the others must
        /// fail).
        #[arg(long)]
        required: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze an inconsistent axiom-system construction.
    AxiomSys {
        /// JSON system {"vars": n, "axioms": [...]}; the last two axioms are
        /// the contradictory pair b, b'.
        #[arg(long)]
        system: PathBuf,
        /// Maximum consistent-subset size for the consequence closure.
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<MdConfig, String> {
    match path {
        None => Ok(MdConfig::default_config()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            MdConfig::from_json_str(&text).map_err(|e| format!("config {e}"))
        }
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, content).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Report {
            config,
            filter,
            out,
            grid_step,
            timings,
        } => {
            let cfg = load_config(&config)?;
            let mut reports: Vec<AxiomReport> = Vec::new();
            let mut times: Vec<(String, u64)> = Vec::new();
            let mut first_failure: Option<String> = None;
            for (id, _) in CATALOG {
                if let Some(prefix) = &filter {
                    if !id.starts_with(prefix.as_str()) {
                        continue;
                    }
                }
                let start = std::time::Instant::now();
                match run_fixture(id, &cfg) {
                    Ok(report) => {
                        if Some(report.status) != expected_status(id) {
                            first_failure.get_or_insert_with(|| id.to_string());
                        }
                        reports.push(report);
                    }
                    Err(e) => {
                        eprintln!("fixture {id} failed: {e}");
                        first_failure.get_or_insert_with(|| id.to_string());
                    }
                }
                times.push((id.to_string(), start.elapsed().as_millis() as u64));
            }
            let metric_check = match grid_step {
                None => serde_json::Value::Null,
                Some(step) => {
                    let (pairs, worst) = oracle_agreement(&cfg, step, 200);
                    let pass = worst <= 2.0 * step;
                    if !pass {
                        first_failure.get_or_insert_with(|| "metric-oracle".to_string());
                    }
                    json!({
                        "grid_step": step,
                        "pairs": pairs,
                        "worst_abs_difference": worst,
                        "tolerance": 2.0 * step,
                        "pass": pass,
                    })
                }
            };
            let bundle = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "config_echo": cfg,
                "fixtures": reports,
                "timings_ms": if timings { json!(times) } else { serde_json::Value::Null },
                "metric_check": metric_check,
            });
            let text = serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())? + "\n";
            emit(&out, &text)?;
            match first_failure {
                None => Ok(ExitCode::SUCCESS),
                Some(id) => {
                    eprintln!("first failing fixture: {id}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Plot { config, out, what } => {
            let cfg = load_config(&config)?;
            let svg = match what.first().map(String::as_str) {
                Some("model") => render(&cfg, Overlay::None),
                Some("geodesic") => {
                    let [a, b] = two_points(&what[1..], &cfg)?;
                    if a.approx_eq(&b) {
                        eprintln!("the two points coincide");
                        return Ok(ExitCode::from(1));
                    }
                    match geodesics_between(&a, &b, &cfg) {
                        Ok(paths) => render(&cfg, Overlay::Paths(&paths)),
                        Err(e) => {
                            eprintln!("{e}");
                            return Ok(ExitCode::from(1));
                        }
                    }
                }
                Some("circle") => {
                    if what.len() != 3 {
                        return Err("usage: plot circle CENTER RADIUS".into());
                    }
                    let center = parse_point_expr(&what[1], &cfg).map_err(|e| e.to_string())?;
                    let r: f64 = what[2].parse().map_err(|_| "bad radius".to_string())?;
                    let desc = circle(&center, r, &cfg);
                    render(&cfg, Overlay::Circle(&desc))
                }
                Some("triangle") => {
                    let [a, b, c] = three_points(&what[1..], &cfg)?;
                    let mut paths = Vec::new();
                    for (u, v) in [(&a, &b), (&a, &c), (&b, &c)] {
                        match geodesics_between(u, v, &cfg) {
                            Ok(mut g) => paths.push(g.remove(0)),
                            Err(e) => {
                                eprintln!("{e}");
                                return Ok(ExitCode::from(1));
                            }
                        }
                    }
                    render(&cfg, Overlay::Paths(&paths))
                }
                _ => return Err("what must be one of: model, geodesic, circle, triangle".into()),
            };
            emit(&out, &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CounterSearch {
            max_points,
            max_lines,
            required,
            out,
        } => {
            let mut req = [false; 3];
            for part in required.split(',').filter(|s| !s.is_empty()) {
                match part.trim() {
                    "1" => req[0] = true,
                    "2" => req[1] = true,
                    "3" => req[2] = true,
                    other => return Err(format!("bad axiom id {other:?} (use 1, 2, 3)")),
                }
            }
            let found = mdgeo::counter::search_counter_models(max_points, max_lines, req)
                .map_err(|e| e.to_string())?;
            let bundle = json!({
                "version": env!("CARGO_PKG_VERSION"),
                "max_points": max_points,
                "max_lines": max_lines,
                "required": [req[0], req[1], req[2]],
                "count": found.len(),
                "structures": found,
            });
            let text = serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())? + "\n";
            emit(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::AxiomSys { system, k, out } => {
            let text = std::fs::read_to_string(&system)
                .map_err(|e| format!("{}: {e}", system.display()))?;
            let sys = AxiomSystem::from_json_str(&text).map_err(|e| e.to_string())?;
            if sys.axioms.len() < 2 {
                return Err("the system needs at least the two contradictory axioms".into());
            }
            let n = sys.axioms.len();
            let a_list = &sys.axioms[..n - 2];
            let b = &sys.axioms[n - 2];
            let b_prime = &sys.axioms[n - 1];
            let universe = default_universe(sys.vars);
            let consistent_c = {
                let mut v = a_list.to_vec();
                v.push(b.clone());
                is_consistent(&v, sys.vars).map_err(|e| e.to_string())?
            };
            let independent_c = {
                let mut v = a_list.to_vec();
                v.push(b.clone());
                is_independent(&v, sys.vars).map_err(|e| e.to_string())?
            };
            match analyze_construction(a_list, b, b_prime, &universe, k, sys.vars) {
                Ok(report) => {
                    let bundle = json!({
                        "version": env!("CARGO_PKG_VERSION"),
                        "vars": sys.vars,
                        "k": k,
                        "system_consistent_with_b": consistent_c,
                        "system_independent_with_b": independent_c,
                        "report": report,
                    });
                    let text =
                        serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())? + "\n";
                    emit(&out, &text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn two_points(args: &[String], cfg: &MdConfig) -> Result<[mdgeo::PointRef; 2], String> {
    if args.len() != 2 {
        return Err("expected two point arguments".into());
    }
    Ok([
        parse_point_expr(&args[0], cfg).map_err(|e| e.to_string())?,
        parse_point_expr(&args[1], cfg).map_err(|e| e.to_string())?,
    ])
}

fn three_points(args: &[String], cfg: &MdConfig) -> Result<[mdgeo::PointRef; 3], String> {
    if args.len() != 3 {
        return Err("expected three point arguments".into());
    }
    Ok([
        parse_point_expr(&args[0], cfg).map_err(|e| e.to_string())?,
        parse_point_expr(&args[1], cfg).map_err(|e| e.to_string())?,
        parse_point_expr(&args[2], cfg).map_err(|e| e.to_string())?,
    ])
}

/// Compares exact distances against the Dijkstra oracle on seeded random
/// pairs; returns the pair count and the worst absolute difference.
fn oracle_agreement(cfg: &MdConfig, step: f64, pairs: usize) -> (usize, f64) {
    let window = Window {
        x_min: -10.0,
        x_max: cfg.gap_width + 10.0,
        y_min: -10.0,
        y_max: 10.0,
    };
    let oracle = OracleGrid::build(cfg, window, step);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst = 0.0f64;
    let mut counted = 0usize;
    while counted < pairs {
        let a = random_point(&mut rng, cfg);
        let b = random_point(&mut rng, cfg);
        let exact = match mdgeo::distance(&a, &b, cfg) {
            mdgeo::Distance::Finite(d) => d,
            mdgeo::Distance::Unreachable => continue,
        };
        let Some(approx) = oracle.graph_distance(&a, &b) else { continue };
        worst = worst.max((exact - approx).abs());
        counted += 1;
    }
    (counted, worst)
}

fn random_point(rng: &mut ChaCha8Rng, cfg: &MdConfig) -> mdgeo::PointRef {
    let g = cfg.gap_width;
    match rng.gen_range(0..4) {
        0 => mdgeo::PointRef::Planar1 {
            x: -rng.gen_range(0.0..10.0),
            y: rng.gen_range(-10.0..10.0),
        },
        1 => mdgeo::PointRef::Planar2 {
            x: g + rng.gen_range(0.01..10.0),
            y: rng.gen_range(-10.0..10.0),
        },
        2 => {
            let id = rng.gen_range(1..=3u8);
            mdgeo::PointRef::OnString {
                id,
                t: rng.gen_range(0.01..cfg.string_len(id) - 0.01),
            }
        }
        _ => {
            if rng.gen_bool(0.5) {
                mdgeo::PointRef::GateP
            } else {
                mdgeo::PointRef::GateQ
            }
        }
    }
}
