use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use heller_core::cache::{read_module, write_module, ModuleCache};
use heller_core::liecore::{klyachko_field, lambda_module, lie_module, symmetrize, LieFamily};
use heller_core::modrep::{DECOMPOSE_BUDGET, Module};
use heller_core::rng::DEFAULT_SEED;
use heller_core::symgrp::spec::parse_subgroup;
use heller_core::verify::{self, Params, Report, Verdict, CHECKS, SUITES};
use heller_core::{field_make, Error};

const EXIT_USAGE: u8 = 4;

#[derive(Parser)]
#[command(name = "heller-lab", version, about = "Heller translates, periods and vertices of Lie modules")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every randomized algorithm (decimal or 0x-prefixed hex)
    #[arg(long, global = true, env = "HELLER_LAB_SEED", value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest module dimension a check may decompose
    #[arg(long, global = true, default_value_t = DECOMPOSE_BUDGET)]
    budget_dim: usize,
    #[arg(long, global = true, env = "HELLER_LAB_CACHE_DIR", default_value = "cache")]
    cache_dir: PathBuf,
    /// Checks run concurrently by `suite`
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Work over GF(p^e) instead of GF(p)
    #[arg(long, global = true, default_value_t = 1)]
    field_ext: u32,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Run one named check
    Verify {
        check_id: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Run a named suite of checks
    Suite { name: String },
    /// List registered checks and suites
    List,
    /// Build modules and store them in the cache
    Build {
        object: Object,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
    },
    /// Describe a subgroup, e.g. `C3@diag(2)` or `S3 x S2`
    Group { spec: String },
    #[command(subcommand)]
    Cache(CacheCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    /// Every module the checks at (p, k) use, plus a manifest
    Family,
    /// Lie(pk) over GF(p)
    Lie,
    /// The lambda module of S_pk
    Lambda,
    /// S^p(Lie(k))
    Symmetrized,
}

#[derive(Subcommand)]
enum CacheCmd {
    /// List cached modules and manifests
    Ls,
    /// Remove cached modules by hash
    Rm { hashes: Vec<String> },
    /// Remove modules no manifest refers to
    Gc,
    /// Copy a cached module to a file
    Export { hash: String, path: PathBuf },
    /// Add a module file to the cache
    Import { path: PathBuf },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let r = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    r.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// Exit status for an error: usage problems are 4, budget overruns 3, anything else 2.
fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(Error::BadParams(_) | Error::UnknownCheck(_) | Error::NotPrime(_)) => EXIT_USAGE,
        Some(e) if e.is_budget() => 3,
        _ => 2,
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn params(g: &Global, p: Option<usize>, k: Option<usize>) -> Params {
    Params {
        p,
        k,
        seed: g.seed,
        budget_dim: g.budget_dim,
        field_ext: g.field_ext,
    }
}

fn print_failures(r: &Report) {
    for a in r.assertions.iter().filter(|a| a.verdict != Verdict::Pass) {
        eprintln!("    {} [{}] {}", a.claim, a.verdict, a.detail.as_deref().unwrap_or(""));
    }
    for n in &r.notes {
        eprintln!("    note: {n}");
    }
}

fn verify_one(g: &Global, check_id: &str, p: Option<usize>, k: Option<usize>) -> anyhow::Result<Verdict> {
    let report = verify::run_check(check_id, &params(g, p, k))?;
    eprintln!("{}", report.summary());
    print_failures(&report);
    emit(g.out.as_deref(), &report.to_json())?;
    Ok(report.verdict)
}

fn suite(g: &Global, name: &str) -> anyhow::Result<Verdict> {
    let reports = verify::run_suite(name, &params(g, None, None), g.jobs.max(1))?;
    for r in &reports {
        eprintln!("{}", r.summary());
        if r.verdict != Verdict::Pass {
            print_failures(r);
        }
    }
    let verdict = Verdict::combine(reports.iter().map(|r| r.verdict));
    eprintln!("suite {name}: {verdict}");
    emit(g.out.as_deref(), &serde_json::to_string_pretty(&reports)?)?;
    Ok(verdict)
}

fn list() {
    println!("checks:");
    for c in CHECKS {
        let needs = match c.needs {
            verify::Needs::Nothing => "",
            verify::Needs::P => "--p",
            verify::Needs::PK => "--p --k",
        };
        println!("  {:<30} {:<8} {}", c.id, needs, c.summary);
    }
    println!("suites:");
    for s in SUITES {
        let n = verify::suite_entries(s).map(|e| e.len()).unwrap_or(0);
        println!("  {s:<30} {n} checks");
    }
}

fn store(cache: &ModuleCache, m: &Module) -> anyhow::Result<()> {
    let hash = cache.store(m)?;
    println!("{hash}  {:>6}  {}", m.dim(), m.label());
    Ok(())
}

fn build(g: &Global, object: Object, p: usize, k: usize) -> anyhow::Result<()> {
    heller_core::liecore::check_pair(p, k)?;
    let cache = ModuleCache::open(&g.cache_dir, g.seed)?;
    heller_core::rng::set_global_seed(g.seed);
    let f = field_make(p as u32, g.field_ext)?;
    match object {
        Object::Family => {
            let fam = LieFamily::build_with(p, k, Some(&cache))?;
            for m in fam.members() {
                println!("{}  {:>6}  {}", cache.key(m.field(), m.group(), m.label()), m.dim(), m.label());
            }
        }
        Object::Lie => store(&cache, &lie_module(p * k, &f)?.with_label(format!("Lie({})", p * k)))?,
        Object::Lambda => store(&cache, &lambda_module(p, k, &klyachko_field(k, p as u32)?)?)?,
        Object::Symmetrized => store(&cache, &symmetrize(&lie_module(k, &f)?.with_label(format!("Lie({k})")), p)?)?,
    }
    Ok(())
}

fn group(spec: &str) -> anyhow::Result<()> {
    let h = parse_subgroup(spec)?;
    println!("{}", h.descriptor());
    println!("order {}", h.order());
    Ok(())
}

fn cache_cmd(g: &Global, cmd: &CacheCmd) -> anyhow::Result<()> {
    let cache = ModuleCache::open(&g.cache_dir, g.seed)?;
    match cmd {
        CacheCmd::Ls => {
            for e in cache.list()? {
                println!("{}  {:>6}  {:>10}  {}", e.hash, e.dim, e.bytes, e.label);
            }
            for m in cache.manifests()? {
                println!("manifest p={} k={}: {} members", m.p, m.k, m.members.len());
            }
        }
        CacheCmd::Rm { hashes } => {
            for h in hashes {
                if !cache.remove(h)? {
                    bail!(Error::BadParams(format!("no cached module {h}")));
                }
            }
        }
        CacheCmd::Gc => {
            for name in cache.gc()? {
                println!("removed {name}");
            }
        }
        CacheCmd::Export { hash, path } => {
            let m = cache
                .load(hash)?
                .ok_or_else(|| Error::BadParams(format!("no cached module {hash}")))?;
            fs::write(path, write_module(&m, g.seed))?;
        }
        CacheCmd::Import { path } => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let file = read_module(&text)?;
            store(&ModuleCache::open(&g.cache_dir, file.seed)?, &file.module)?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Verdict> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify { check_id, p, k } => verify_one(g, check_id, *p, *k),
        Command::Suite { name } => suite(g, name),
        Command::List => {
            list();
            Ok(Verdict::Pass)
        }
        Command::Build { object, p, k } => build(g, *object, *p, *k).map(|_| Verdict::Pass),
        Command::Group { spec } => group(spec).map(|_| Verdict::Pass),
        Command::Cache(cmd) => cache_cmd(g, cmd).map(|_| Verdict::Pass),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(v) => ExitCode::from(v.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(error_code(&e))
        }
    }
}
