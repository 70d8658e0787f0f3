//! `gsidon`: build, encode and check generalised Sidon sets from the command line.
//!
//! Exit codes: 0 when every requested check passed or a decision was
//! reached, 1 on input errors, 2 when a search guard refused the instance and
//! 3 when a verifier produced a failing certificate.

mod manifest;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gsidon::encoder::{encode_with_modulus, verify_claim_exhaustive, Encoding};
use gsidon::extract::{extract_bk, partition_edges_random};
use gsidon::forest::{find_extension, is_forest_of_copies, parse_family_file};
use gsidon::ordgraph::{check_local_structure, make_theta, parse_graph_file, write_graph_file, Interleaving, ThetaSpec};
use gsidon::pipeline::{self, GraphSource, PipelineInput, StageError};
use gsidon::ramsey::{arrow_check, edge_arrow_check};
use gsidon::repset::{classify, parse_set_file, rho_count_capped, rho_profile_capped, verify_theorem_properties_capped, write_set_file, Clause};
use gsidon::{nat, oracle, Certificate, Config, Error, FiniteSet, OrderedGraph};
use manifest::RunManifest;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "gsidon", version, about = "Generalised Sidon sets from ordered theta graphs")]
struct Cli {
    /// Config file of `key = value` lines; GSIDON_<KEY> variables override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for colouring searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write a run manifest (inputs, digests, config, timing) to this file.
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Layout {
    LevelMajor,
    PathMajor,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the ordered theta graph with `ell` ascending paths of length `k`.
    Theta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum)]
        interleaving: Option<Layout>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode a graph as the set of differences `m^(v+1) - m^(u+1)` over its edges.
    Encode {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Odd modulus overriding 2k + 1.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the element -> edge mapping here.
        #[arg(long)]
        mapping: Option<PathBuf>,
    },
    /// Count k-representations of one target, or profile all targets.
    Rho {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: Option<String>,
    },
    /// Report rho_k of a set.
    Classify {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Check structural clauses of a set, or the local structure of a graph.
    Verify(VerifyArgs),
    /// Extract a B_k-subset from a subset of an encoded set.
    Extract {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Set file with the subset Y; defaults to the whole encoded set.
        #[arg(long)]
        subset: Option<PathBuf>,
        /// Also report a seeded uniformly random partition for comparison.
        #[arg(long)]
        random_seed: Option<u64>,
    },
    /// Decide arrow relations.
    #[command(subcommand)]
    Ramsey(RamseyCommand),
    /// Decide whether a copy family is a forest of copies, or extend it to one.
    Forest {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        pool: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        budget: usize,
    },
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run every stage on a generated or given graph.
    Pipeline {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        /// Graph file; defaults to the generated theta graph.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Directory for bundle.json and manifest.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
    set: Option<PathBuf>,
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    ell: usize,
    /// Comma-separated clauses for sets.
    #[arg(long, default_value = "iii,iv,v,vi")]
    clauses: String,
    /// Cycle length bound for graphs (default 2k).
    #[arg(long)]
    s: Option<usize>,
    /// For graphs: also classify every equal-sum pair of tuples of the encoding.
    #[arg(long)]
    claim: bool,
}

#[derive(Subcommand)]
enum RamseyCommand {
    CheckSet {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        r: usize,
    },
    CheckGraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    Sums {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: usize,
    },
    Cycles {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        s: usize,
    },
    Colorings {
        #[arg(long)]
        set: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        r: usize,
    },
}

struct Ctx {
    cfg: Config,
    format: Format,
    manifest: RunManifest,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.manifest.record_input(path, &bytes);
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))
    }

    fn set(&mut self, path: &Path) -> Result<FiniteSet> {
        let text = self.read(path)?;
        let (set, _) = parse_set_file(&text).with_context(|| format!("parsing set file {}", path.display()))?;
        Ok(set)
    }

    fn graph(&mut self, path: &Path) -> Result<OrderedGraph> {
        let text = self.read(path)?;
        parse_graph_file(&text).with_context(|| format!("parsing graph file {}", path.display()))
    }

    fn encoding(&mut self, path: &Path, k: usize, m: Option<u64>) -> Result<Encoding> {
        let g = self.graph(path)?;
        let m = m.or(self.cfg.modulus).unwrap_or(2 * k as u64 + 1);
        Ok(encode_with_modulus(&g, k, m)?)
    }
}

/// Outcome of a command: either a decision/pass (0) or a failing certificate (3).
enum Status {
    Ok,
    Fail,
}

fn status_of(passed: bool) -> Status {
    if passed {
        Status::Ok
    } else {
        Status::Fail
    }
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("json values serialize")),
        Format::Text => print!("{}", text()),
    }
}

fn certificate_text(cert: &Certificate) -> String {
    let verdict = match (cert.property.starts_with("arrow"), cert.passed) {
        (true, true) => "HOLDS",
        (true, false) => "DOES NOT HOLD",
        (false, true) => "PASS",
        (false, false) => "FAIL",
    };
    let mut out = format!("{}: {verdict}\n", cert.property);
    for c in &cert.checks {
        out.push_str(&format!("  [{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name));
        if let Some(note) = &c.note {
            out.push_str(&format!(" ({note})"));
        }
        if !c.passed {
            if let Some(w) = &c.witness {
                out.push_str(&format!("\n    witness: {w}"));
            }
        }
        out.push('\n');
    }
    if !cert.stats.is_empty() {
        let stats: Vec<String> = cert.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
        out.push_str(&format!("  stats: {}\n", stats.join(" ")));
    }
    out
}

fn emit_cert(format: Format, cert: &Certificate) {
    emit(format, &serde_json::to_value(cert).expect("certificates serialize"), || certificate_text(cert));
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli, ctx: &mut Ctx) -> Result<Status> {
    let format = ctx.format;
    match cli.command {
        Command::Theta { k, ell, interleaving, out } => {
            let interleaving = match interleaving {
                Some(Layout::LevelMajor) => Interleaving::LevelMajor,
                Some(Layout::PathMajor) => Interleaving::PathMajor,
                None => ctx.cfg.interleaving.clone(),
            };
            let g = make_theta(&ThetaSpec::new(k, ell).with_interleaving(interleaving))?;
            let text = write_graph_file(&g);
            match format {
                Format::Text => write_or_print(out.as_deref(), &text)?,
                Format::Json => {
                    if let Some(p) = &out {
                        write_or_print(Some(p), &text)?;
                    }
                    println!("{}", serde_json::to_string_pretty(&g.to_json())?);
                }
            }
            Ok(Status::Ok)
        }
        Command::Encode { graph, k, m, out, mapping } => {
            let enc = ctx.encoding(&graph, k, m)?;
            if let Some(p) = &mapping {
                write_or_print(Some(p), &enc.mapping_file())?;
            }
            let text = write_set_file(enc.set());
            match format {
                Format::Text => write_or_print(out.as_deref(), &text)?,
                Format::Json => {
                    if let Some(p) = &out {
                        write_or_print(Some(p), &text)?;
                    }
                    let v = json!({ "k": k, "m": enc.m(), "set": enc.set().to_json() });
                    println!("{}", serde_json::to_string_pretty(&v)?);
                }
            }
            Ok(Status::Ok)
        }
        Command::Rho { set, k, n } => {
            let x = ctx.set(&set)?;
            match n {
                Some(n) => {
                    let target = nat::parse(&n).with_context(|| format!("{n:?} is not a natural number"))?;
                    let rc = rho_count_capped(&x, k, &target, ctx.cfg.rep_cap)?;
                    emit(format, &serde_json::to_value(&rc)?, || {
                        let mut s = format!("rho({n}) = {}\n", rc.count);
                        for r in &rc.representations {
                            let terms: Vec<String> = r.terms.iter().map(|t| t.to_string()).collect();
                            s.push_str(&format!("  {}\n", terms.join(" + ")));
                        }
                        if rc.truncated {
                            s.push_str("  (representations truncated)\n");
                        }
                        s
                    });
                }
                None => {
                    let profile = rho_profile_capped(&x, k, ctx.cfg.rep_cap)?;
                    emit(format, &serde_json::to_value(&profile)?, || {
                        let mut s = format!("rho_{k} = {}\n", profile.max_value);
                        for (count, targets) in &profile.histogram {
                            s.push_str(&format!("  {targets} target(s) with {count} representation(s)\n"));
                        }
                        s
                    });
                }
            }
            Ok(Status::Ok)
        }
        Command::Classify { set, k } => {
            let x = ctx.set(&set)?;
            let c = classify(&x, k)?;
            emit(format, &serde_json::to_value(c)?, || format!("{c}\n"));
            Ok(Status::Ok)
        }
        Command::Verify(args) => verify(args, ctx),
        Command::Extract { graph, k, subset, random_seed } => {
            let enc = ctx.encoding(&graph, k, None)?;
            let y = match &subset {
                Some(p) => ctx.set(p)?,
                None => enc.set().clone(),
            };
            let ex = extract_bk(&y, &enc, k)?;
            let mut cert = ex.certificate;
            if let Some(seed) = random_seed {
                ctx.manifest.seed = Some(seed);
                let edges: Vec<_> = y
                    .elements()
                    .iter()
                    .map(|x| {
                        let (u, v) = enc.edge_of(x).expect("extraction accepted every element");
                        (enc.value_of(u).clone(), enc.value_of(v).clone())
                    })
                    .collect();
                let w = partition_edges_random(&edges, k, seed)?;
                cert.params.insert(
                    "random_partition".into(),
                    json!({ "seed": seed, "cross": w.cross_count(), "chosen": w.chosen_edges().len() }),
                );
            }
            emit_cert(format, &cert);
            Ok(status_of(cert.passed))
        }
        Command::Ramsey(RamseyCommand::CheckSet { set, k, ell, r }) => {
            let x = ctx.set(&set)?;
            let v = arrow_check(&x, k, ell, r, &ctx.cfg)?;
            emit_cert(format, &v.set_certificate(&x, k, ell, r)?);
            Ok(Status::Ok)
        }
        Command::Ramsey(RamseyCommand::CheckGraph { graph, k, ell, r }) => {
            let h = ctx.graph(&graph)?;
            let v = edge_arrow_check(&h, k, ell, r, &ctx.cfg)?;
            emit_cert(format, &v.edge_certificate(&h, k, ell, r));
            Ok(Status::Ok)
        }
        Command::Forest { family, pool, budget } => {
            let text = ctx.read(&family)?;
            let fam = parse_family_file(&text).context("parsing family file")?;
            match pool {
                None => {
                    let v = is_forest_of_copies(&fam, &ctx.cfg)?;
                    emit(format, &v.to_json(), || match &v.ordering {
                        Some(o) => format!("forest of copies; order {o:?}\n"),
                        None => {
                            let cut = v.cut.as_ref().expect("refutations carry a cut");
                            format!("not a forest of copies; placed {:?}, blocked {:?}\n", cut.placed, cut.blocked)
                        }
                    });
                }
                Some(p) => {
                    let text = ctx.read(&p)?;
                    let pool = parse_family_file(&text).context("parsing pool file")?;
                    let ext = find_extension(&fam, &pool, budget, &ctx.cfg)?;
                    let v = json!({
                        "found": ext.is_some(),
                        "extension": ext.as_ref().map(|e| e.iter().map(|&i| &pool.members[i].copy.host_vertices).collect::<Vec<_>>()),
                        "indices": ext,
                        "budget": budget,
                    });
                    emit(format, &v, || match &ext {
                        Some(e) => format!("extension of size {} found: pool members {e:?}\n", e.len()),
                        None => format!("no extension within budget {budget}\n"),
                    });
                }
            }
            Ok(Status::Ok)
        }
        Command::Oracle(OracleCommand::Sums { set, k }) => {
            let x = ctx.set(&set)?;
            let table = oracle::sum_table(&x, k);
            let v: Value = table
                .iter()
                .map(|(n, reps)| {
                    let reps: Vec<Value> = reps.iter().map(|r| nat::list_to_json(r)).collect();
                    (n.to_string(), Value::Array(reps))
                })
                .collect::<serde_json::Map<_, _>>()
                .into();
            emit(format, &v, || {
                table
                    .iter()
                    .map(|(n, reps)| {
                        let reps: Vec<String> = reps
                            .iter()
                            .map(|r| r.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("+"))
                            .collect();
                        format!("{n}: {}\n", reps.join(", "))
                    })
                    .collect()
            });
            Ok(Status::Ok)
        }
        Command::Oracle(OracleCommand::Cycles { graph, s }) => {
            let g = ctx.graph(&graph)?;
            let cycles = oracle::induced_cycles(&g, s, &ctx.cfg)?;
            emit(format, &json!(cycles), || cycles.iter().map(|c| format!("{c:?}\n")).collect());
            Ok(Status::Ok)
        }
        Command::Oracle(OracleCommand::Colorings { set, k, ell, r }) => {
            let x = ctx.set(&set)?;
            let v = oracle::arrow_sweep(&x, k, ell, r, &ctx.cfg)?;
            let value = json!({ "holds": v.holds, "counterexample": v.counterexample, "colorings": v.colorings });
            emit(format, &value, || match &v.counterexample {
                None => format!("holds ({} colourings)\n", v.colorings),
                Some(c) => format!("does not hold; first counterexample {c:?}\n"),
            });
            Ok(Status::Ok)
        }
        Command::Pipeline { k, ell, graph, r, out } => {
            let source = match &graph {
                Some(p) => GraphSource::Given {
                    graph: ctx.graph(p).map_err(|e| e.context("stage load failed"))?,
                    label: p.display().to_string(),
                },
                None => GraphSource::Theta,
            };
            let bundle = pipeline::run(&PipelineInput { k, ell, source, r }, &ctx.cfg)?;
            if let Some(dir) = &out {
                std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
                std::fs::write(dir.join("bundle.json"), bundle.to_json_pretty() + "\n")?;
            }
            emit(format, &bundle.to_json(), || {
                let mut s = String::new();
                for cert in bundle.certificates() {
                    s.push_str(&certificate_text(cert));
                }
                s.push_str(&format!("classification: {}\n", bundle.classification));
                s.push_str(&certificate_text(&bundle.arrow));
                s
            });
            Ok(status_of(bundle.passed()))
        }
    }
}

fn verify(args: VerifyArgs, ctx: &mut Ctx) -> Result<Status> {
    let format = ctx.format;
    if let Some(path) = &args.set {
        let x = ctx.set(path)?;
        let clauses = args
            .clauses
            .split(',')
            .map(|c| c.trim().parse::<Clause>())
            .collect::<gsidon::Result<Vec<_>>>()?;
        let cert = verify_theorem_properties_capped(&x, args.k, args.ell as u64, &clauses, ctx.cfg.rep_cap)?;
        emit_cert(format, &cert);
        return Ok(status_of(cert.passed));
    }
    let path = args.graph.as_ref().expect("clap requires --set or --graph");
    let g = ctx.graph(path)?;
    let s = args.s.unwrap_or(2 * args.k);
    let mut cert = check_local_structure(&g, args.k, args.ell, s)?;
    if args.claim {
        let m = ctx.cfg.modulus.unwrap_or(2 * args.k as u64 + 1);
        let enc = encode_with_modulus(&g, args.k, m)?;
        let report = verify_claim_exhaustive(&enc, args.ell)?;
        cert.push(if report.passed() {
            gsidon::Check::pass("coincidences").with_witness(report.to_json())
        } else {
            gsidon::Check::fail("coincidences", report.to_json())
        });
    }
    emit_cert(format, &cert);
    Ok(status_of(cert.passed))
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let inner = err
        .chain()
        .find_map(|e| e.downcast_ref::<Error>().or_else(|| e.downcast_ref::<StageError>().map(|s| &s.error)));
    match inner {
        Some(Error::GuardRefusal { .. }) => 2,
        _ => 1,
    }
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let mut cfg = match path {
        Some(p) => Config::load(p).with_context(|| format!("loading config {}", p.display()))?,
        None => Config::default(),
    };
    cfg.apply_env(std::env::vars())?;
    if let Some(m) = cfg.modulus {
        if m % 2 == 0 {
            bail!("modulus must be odd, got {m}");
        }
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let started = Instant::now();
    let cli = Cli::parse();

    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot start {n} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    let cfg = match load_config(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let manifest_path = cli.manifest.clone();
    let pipeline_dir = match &cli.command {
        Command::Pipeline { out, .. } => out.clone(),
        _ => None,
    };
    let mut ctx = Ctx {
        manifest: RunManifest::new(std::env::args().collect(), cfg.to_map()),
        cfg,
        format: cli.format,
    };
    if let Some(p) = &cli.config {
        if let Ok(bytes) = std::fs::read(p) {
            ctx.manifest.record_input(p, &bytes);
        }
    }

    let result = run(cli, &mut ctx);
    ctx.manifest.wall_time_ms = started.elapsed().as_millis() as u64;
    let manifest_json = serde_json::to_string_pretty(&ctx.manifest).expect("manifest serializes") + "\n";
    for path in manifest_path.into_iter().chain(pipeline_dir.map(|d| d.join("manifest.json"))) {
        if let Err(e) = std::fs::write(&path, &manifest_json) {
            eprintln!("warning: cannot write manifest {}: {e}", path.display());
        }
    }

    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
