use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use hurwitz_cli::report;
use hurwitz_cli::reproduce::{self, DEFAULT_SEED};
use hurwitz_cli::source::{self, CliError};
use hurwitz_core::alexander::{
    alexander_polynomial_with, build_matrix, verify, AlexanderResult, PipelineOptions,
};
use hurwitz_core::braid::g_nm_presentation;
use hurwitz_core::constructions::hurwitz_product;
use hurwitz_core::covering::betti_b1;
use hurwitz_core::presentation::{render, CPresentation};

/// Alexander polynomials of C-groups and Hurwitz C-groups.
///
/// Inputs are `-` (presentation text on standard input), a file path, or
/// `builtin:<spec>` with spec one of universal:<m>, abelian:<n>, g2,
/// torus:<n>:<m>, torus6:<n>:<m>. The thread count for --parallel comes
/// from HURWITZ_THREADS.
#[derive(Parser)]
#[command(name = "hurwitz", version)]
struct Cli {
    /// Print machine-readable JSON, including errors.
    #[arg(long, global = true)]
    json: bool,
    /// Report progress and timings on standard error.
    #[arg(short, long, global = true)]
    verbose: bool,
    /// Compute minors on the rayon thread pool.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial, factorization and checks.
    Alexander { source: String },
    /// Betti numbers of the n-sheeted cyclic covering.
    Betti {
        /// Presentation whose Alexander polynomial is used.
        #[arg(long)]
        delta: String,
        #[arg(long)]
        n: u64,
    },
    /// Hurwitz product of two Hurwitz presentations.
    Product {
        a: String,
        b: String,
        /// Print the product presentation instead of its polynomial.
        #[arg(long)]
        dsl: bool,
    },
    /// Presentation of the braid monodromy group of w^n = z^m.
    BraidGroup {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
    /// Re-run the checks on a presentation or a saved JSON result; exit 2
    /// when any check fails.
    Verify { source: String },
    /// Print the acceptance table; exit 2 when any criterion fails.
    Reproduce {
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

struct Ctx {
    json: bool,
    verbose: bool,
    opts: PipelineOptions,
}

impl Ctx {
    fn note(&self, msg: impl AsRef<str>) {
        if self.verbose {
            eprintln!("[hurwitz] {}", msg.as_ref());
        }
    }

    fn emit(&self, value: serde_json::Value, text: String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
        } else {
            print!("{text}");
        }
    }

    fn compute(&self, p: &CPresentation) -> AlexanderResult {
        if self.verbose {
            let m = build_matrix(p);
            let s = m.simplify_unit_pivots();
            self.note(format!(
                "{}: {} generators, {} relations; matrix {}x{}, {}x{} after unit pivots",
                p.label().unwrap_or("presentation"),
                p.generator_count(),
                p.relations().len(),
                m.row_count(),
                m.col_count(),
                s.row_count(),
                s.col_count()
            ));
        }
        let start = Instant::now();
        let r = alexander_polynomial_with(p, self.opts);
        self.note(format!("pipeline finished in {:.3} s", start.elapsed().as_secs_f64()));
        r
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("HURWITZ_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Invalid(format!("HURWITZ_THREADS={value} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Invalid(format!("thread pool: {e}")))
}

fn alexander(ctx: &Ctx, src: &str) -> Result<ExitCode, CliError> {
    alexander_of(ctx, &source::load(src)?)
}

fn betti(ctx: &Ctx, src: &str, n: u64) -> Result<ExitCode, CliError> {
    let r = ctx.compute(&source::load(src)?);
    let Some(f) = &r.factorization else {
        return Err(CliError::Invalid("Alexander polynomial is 0".into()));
    };
    let b = betti_b1(f, n).map_err(hurwitz_core::Error::from)?;
    let mut value = serde_json::to_value(b).expect("report serializes");
    value["label"] = json!(r.label);
    value["polynomial"] = json!(r.canonical.to_string());
    ctx.emit(value, report::betti(r.label.as_deref(), &b));
    Ok(ExitCode::SUCCESS)
}

fn product(ctx: &Ctx, a: &str, b: &str, dsl: bool) -> Result<ExitCode, CliError> {
    let (pa, pb) = (source::load(a)?, source::load(b)?);
    let prod = hurwitz_product(&pa, &pb).map_err(hurwitz_core::Error::from)?;
    ctx.note(format!(
        "product: {} generators, Hurwitz degree {}",
        prod.generator_count(),
        prod.hurwitz_degree().unwrap_or(0)
    ));
    if dsl {
        let text = render(&prod);
        ctx.emit(json!({ "label": prod.label(), "dsl": text }), text.clone());
        return Ok(ExitCode::SUCCESS);
    }
    alexander_of(ctx, &prod)
}

fn alexander_of(ctx: &Ctx, p: &CPresentation) -> Result<ExitCode, CliError> {
    let r = ctx.compute(p);
    ctx.emit(serde_json::to_value(&r).expect("result serializes"), report::alexander(&r));
    Ok(ExitCode::SUCCESS)
}

fn braid_group(ctx: &Ctx, n: usize, m: u32) -> Result<ExitCode, CliError> {
    if n < 2 || m < 1 {
        return Err(CliError::Invalid(format!("need n >= 2 and m >= 1, got n = {n}, m = {m}")));
    }
    let p = g_nm_presentation(n, m);
    let text = render(&p);
    ctx.emit(
        json!({
            "label": p.label(),
            "generators": p.generator_count(),
            "hurwitz_degree": p.hurwitz_degree(),
            "dsl": text,
        }),
        text.clone(),
    );
    Ok(ExitCode::SUCCESS)
}

/// A saved result is recognized by a leading `{`.
fn verify_source(ctx: &Ctx, src: &str) -> Result<ExitCode, CliError> {
    let (label, polynomial, checks) = if src.starts_with("builtin:") {
        let r = ctx.compute(&source::load(src)?);
        (r.label, r.canonical, r.checks)
    } else {
        let text = source::read_text(src)?;
        if text.trim_start().starts_with('{') {
            let saved: AlexanderResult = serde_json::from_str(&text)
                .map_err(|e| CliError::Json { origin: source::origin(src), msg: e.to_string() })?;
            let checks = verify(&saved.canonical, saved.hurwitz_degree, saved.components);
            if checks != saved.checks {
                ctx.note("recorded checks differ from the recomputed ones");
            }
            (saved.label, saved.canonical, checks)
        } else {
            let p = hurwitz_core::presentation::parse(&text)
                .map_err(|error| CliError::Parse { origin: source::origin(src), error })?;
            let r = ctx.compute(&p);
            (r.label, r.canonical, r.checks)
        }
    };
    let pass = checks.all_pass();
    let mut text = String::new();
    if let Some(l) = &label {
        text.push_str(&format!("label: {l}\n"));
    }
    text.push_str(&format!("Delta = {polynomial}\n"));
    text.push_str(&report::checks(&checks));
    text.push_str(if pass { "verify: PASS\n" } else { "verify: FAIL\n" });
    ctx.emit(
        json!({ "label": label, "polynomial": polynomial.to_string(), "pass": pass, "checks": checks }),
        text,
    );
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn reproduce_table(ctx: &Ctx, seed: u64) -> Result<ExitCode, CliError> {
    let start = Instant::now();
    let rows = reproduce::run(seed, |row| {
        if !ctx.json {
            println!("{row}");
        }
    });
    let pass = rows.iter().all(|r| r.pass);
    let total = start.elapsed().as_secs_f64();
    if ctx.json {
        let value = json!({
            "seed": seed,
            "pass": pass,
            "seconds": total,
            "criteria": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("JSON values serialize"));
    } else {
        println!("{} in {total:.3} s, seed {seed}", if pass { "all criteria PASS" } else { "FAIL" });
    }
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        json: cli.json,
        verbose: cli.verbose,
        opts: PipelineOptions { parallel: cli.parallel, ..PipelineOptions::default() },
    };
    let result = configure_threads().and_then(|()| match &cli.command {
        Command::Alexander { source } => alexander(&ctx, source),
        Command::Betti { delta, n } => betti(&ctx, delta, *n),
        Command::Product { a, b, dsl } => product(&ctx, a, b, *dsl),
        Command::BraidGroup { n, m } => braid_group(&ctx, *n, *m),
        Command::Verify { source } => verify_source(&ctx, source),
        Command::Reproduce { seed } => reproduce_table(&ctx, *seed),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            if ctx.json {
                println!("{}", serde_json::to_string_pretty(&e.to_json()).expect("JSON values serialize"));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
    }
}
