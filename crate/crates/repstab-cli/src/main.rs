use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use repstab_cli::cache::Cache;
use repstab_cli::corpus::{builtin_module, builtin_names, coefficient_module, pbr_homology};
use repstab_cli::report::{write_dim_table, write_reports, SuiteOutcome};
use repstab_cli::suites::{run_suites, SuiteContext};
use repstab_core::bounds::{evaluate, BoundInputs, BoundKind, ExtInt, Theta};
use repstab_core::braid::br_generation_degree;
use repstab_core::exactlin::Field;
use repstab_core::figmod::{polynomial_degree, FIModule, FIModuleRepr};
use repstab_core::homalg::{central_homology, degrees, splitting_homology, tor_dims, SstCache, TorMethod};

#[derive(Parser)]
#[command(
    name = "repstab",
    about = "Exact computations for representation stability: FI-modules, Tor, central homology, braid coefficients, and quantitative bounds."
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Truncation rank (subject to the hard cap of 8).
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Scalar field: `q` for the rationals or `p:<prime>`.
    #[arg(long, global = true, default_value = "q")]
    field: String,
    /// Output directory for reports and tables (default: stdout for single
    /// results, ./reports for suites).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cache directory (also settable via REPSTAB_CACHE).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads for suite runs.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an FI-module definition file (or a built-in).
    Validate(ModuleArg),
    /// Certify the polynomial degree of a module via the shift recursion.
    PolyDegree {
        #[command(flatten)]
        module: ModuleArg,
        /// Certify in ranks > d.
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        d: i64,
    },
    /// Central stability homology table of a module.
    CentralHomology(ModuleArg),
    /// Tor table of a module (bar route, Koszul route, or both).
    Tor {
        #[command(flatten)]
        module: ModuleArg,
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Homology of the splitting complexes and split Steinberg dimensions.
    Splitting,
    /// Generation/presentation degrees of a module.
    Degrees(ModuleArg),
    /// Twisted homology of the pure braid groups as an FI-module.
    PbrHomology {
        /// Coefficients: trivial | burau-neg1 | burau-reduced-neg1.
        #[arg(long, default_value = "trivial")]
        coeff: String,
        /// Homological degree: 0 or 1.
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Evaluate a quantitative bound.
    Bounds {
        /// central | tor | repstab | pbr | congruence.
        #[arg(long)]
        kind: String,
        #[arg(long, allow_negative_numbers = true)]
        d: Option<i64>,
        /// Polynomial degree; "-inf" allowed.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        i: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        t: Option<i64>,
        /// Coherence function: sym | u1.
        #[arg(long)]
        theta: Option<String>,
    },
    /// Run one or more verification suites (or `all`).
    Verify {
        suites: Vec<String>,
    },
}

#[derive(Args)]
struct ModuleArg {
    /// Path to an FI-module definition file (JSON).
    #[arg(long)]
    module: Option<PathBuf>,
    /// Name of a built-in corpus module.
    #[arg(long)]
    builtin: Option<String>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s == "q" {
        return Ok(Field::Q);
    }
    if let Some(p) = s.strip_prefix("p:") {
        let p: u64 = p.parse().map_err(|_| format!("bad prime {p:?}"))?;
        return Ok(Field::Fp(p));
    }
    Err(format!("unknown field {s:?}; use q or p:<prime>"))
}

fn load_module(
    arg: &ModuleArg,
    n_max: usize,
    field: Field,
    cache: &Cache,
) -> Result<FIModule, String> {
    match (&arg.module, &arg.builtin) {
        (Some(path), None) => {
            let bytes = std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
            serde_json::from_slice::<FIModule>(&bytes).map_err(|e| e.to_string())
        }
        (None, Some(name)) => builtin_module(name, n_max, field, cache),
        _ => Err(format!(
            "pass exactly one of --module <file> or --builtin <name>; built-ins: {}",
            builtin_names().join(", ")
        )),
    }
}

fn emit(out: &Option<PathBuf>, file: &str, text: &str) -> Result<(), String> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
            std::fs::write(dir.join(file), text).map_err(|e| e.to_string())
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    let field = parse_field(&cli.global.field)?;
    let n_max = cli.global.n_max.unwrap_or(6).min(8);
    let cache = Cache::resolve(cli.global.cache.clone());
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    match cli.command {
        Command::Validate(marg) => {
            // Parse with shape checks only, so semantic problems end up in
            // the violation report instead of a parse error.
            let module = match (&marg.module, &marg.builtin) {
                (Some(path), None) => {
                    let bytes =
                        std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    serde_json::from_slice::<FIModuleRepr>(&bytes)
                        .map_err(|e| e.to_string())?
                        .into_module_unvalidated()
                        .map_err(|e| e.to_string())?
                }
                _ => load_module(&marg, n_max, field, &cache)?,
            };
            let report = module.validate();
            emit(
                &cli.global.out,
                "validate.json",
                &serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?,
            )?;
            Ok(report.valid)
        }
        Command::PolyDegree { module, d } => {
            let module = load_module(&module, n_max, field, &cache)?;
            let rep = polynomial_degree(&module, d);
            emit(
                &cli.global.out,
                "poly-degree.json",
                &serde_json::to_string_pretty(&rep).map_err(|e| e.to_string())?,
            )?;
            Ok(true)
        }
        Command::CentralHomology(marg) => {
            let module = load_module(&marg, n_max, field, &cache)?;
            let mut rows = Vec::new();
            for n in 0..=module.n_max {
                for (i, dim) in central_homology(&module, n).map_err(|e| e.to_string())? {
                    rows.push(vec![n.to_string(), i.to_string(), dim.to_string()]);
                }
            }
            match &cli.global.out {
                Some(dir) => write_dim_table(&dir.join("central-homology.csv"), &["n", "i", "dim"], &rows)
                    .map_err(|e| e.to_string())?,
                None => {
                    println!("n,i,dim");
                    for row in rows {
                        println!("{}", row.join(","));
                    }
                }
            }
            Ok(true)
        }
        Command::Tor { module, method } => {
            let module = load_module(&module, n_max, field, &cache)?;
            let sst = SstCache::new(field);
            let methods: Vec<(&str, TorMethod)> = match method.as_str() {
                "bar" => vec![("bar", TorMethod::Bar)],
                "koszul" => vec![("koszul", TorMethod::Koszul)],
                "both" => vec![("bar", TorMethod::Bar), ("koszul", TorMethod::Koszul)],
                other => return Err(format!("unknown method {other:?}")),
            };
            let mut rows = Vec::new();
            for n in 0..=module.n_max {
                for &(label, m) in &methods {
                    let dims = tor_dims(&module, n, m, &sst).map_err(|e| e.to_string())?;
                    for (i, &d) in dims.iter().enumerate() {
                        rows.push(vec![
                            label.to_string(),
                            n.to_string(),
                            i.to_string(),
                            d.to_string(),
                        ]);
                    }
                }
            }
            match &cli.global.out {
                Some(dir) => write_dim_table(&dir.join("tor.csv"), &["method", "n", "i", "dim"], &rows)
                    .map_err(|e| e.to_string())?,
                None => {
                    println!("method,n,i,dim");
                    for row in rows {
                        println!("{}", row.join(","));
                    }
                }
            }
            Ok(true)
        }
        Command::Splitting => {
            let sst = SstCache::new(field);
            let mut rows = Vec::new();
            for n in 1..=n_max {
                let (dims, rep) = splitting_homology(n, &sst).map_err(|e| e.to_string())?;
                for (i, &d) in dims.iter().enumerate() {
                    rows.push(vec![n.to_string(), i.to_string(), d.to_string(), rep.dim.to_string()]);
                }
            }
            match &cli.global.out {
                Some(dir) => write_dim_table(&dir.join("splitting.csv"), &["n", "i", "dim", "sst_dim"], &rows)
                    .map_err(|e| e.to_string())?,
                None => {
                    println!("n,i,dim,sst_dim");
                    for row in rows {
                        println!("{}", row.join(","));
                    }
                }
            }
            Ok(true)
        }
        Command::Degrees(marg) => {
            let module = load_module(&marg, n_max, field, &cache)?;
            let rep = degrees(&module);
            emit(
                &cli.global.out,
                "degrees.json",
                &serde_json::to_string_pretty(&rep).map_err(|e| e.to_string())?,
            )?;
            Ok(true)
        }
        Command::PbrHomology { coeff, degree } => {
            let h = pbr_homology(&coeff, degree, n_max, field, &cache)?;
            // For braid coefficients also report the orbit generation degree.
            let gen = coefficient_module(&coeff, n_max, field)
                .and_then(|m| br_generation_degree(&m).map_err(|e| e.to_string()))?;
            let payload = serde_json::json!({
                "dims": h.dims(),
                "coefficient_generation": gen.generation,
                "module": &h,
            });
            emit(
                &cli.global.out,
                &format!("pbr-h{degree}-{coeff}.json"),
                &serde_json::to_string_pretty(&payload).map_err(|e| e.to_string())?,
            )?;
            Ok(true)
        }
        Command::Bounds {
            kind,
            d,
            r,
            i,
            k,
            a,
            s,
            t,
            theta,
        } => {
            let kind = match kind.as_str() {
                "central" => BoundKind::Central,
                "tor" => BoundKind::Tor,
                "repstab" => BoundKind::Repstab,
                "pbr" => BoundKind::Pbr,
                "congruence" => BoundKind::Congruence,
                other => return Err(format!("unknown bound kind {other:?}")),
            };
            let r = match r.as_deref() {
                None => None,
                Some("-inf") => Some(ExtInt::NegInf),
                Some(v) => Some(ExtInt::Fin(v.parse::<i64>().map_err(|e| e.to_string())?)),
            };
            let theta = match theta.as_deref() {
                None => None,
                Some("sym") => Some(Theta::Sym),
                Some("u1") => Some(Theta::U1),
                Some(other) => return Err(format!("unknown theta {other:?}")),
            };
            let inputs = BoundInputs { r, d, i, k, a, s, t, theta };
            let value = evaluate(kind, &inputs).map_err(|e| e.to_string())?;
            emit(
                &cli.global.out,
                "bounds.json",
                &serde_json::to_string_pretty(&serde_json::json!({
                    "kind": kind,
                    "inputs": inputs,
                    "value": value,
                }))
                .map_err(|e| e.to_string())?,
            )?;
            Ok(true)
        }
        Command::Verify { suites } => {
            let names = if suites.is_empty() {
                vec!["all".to_string()]
            } else {
                suites
            };
            let ctx = SuiteContext {
                field,
                n_max: cli.global.n_max,
                cache,
            };
            let outcome: SuiteOutcome = run_suites(&names, &ctx)?;
            let out_dir = cli
                .global
                .out
                .clone()
                .unwrap_or_else(|| PathBuf::from("reports"));
            write_reports(&out_dir, &outcome).map_err(|e| e.to_string())?;
            for r in &outcome.reports {
                println!("{}: {}", r.id, if r.pass { "pass" } else { "FAIL" });
            }
            println!(
                "reports written to {} (suites: {})",
                out_dir.display(),
                outcome.reports.len()
            );
            Ok(outcome.pass())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
