mod svg;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use geo_ramsey::coloring::binomial;
use geo_ramsey::constructions::{
    find_mono_clique, find_ramsey_witness, gen_blowup_coloring, gen_cupcap_free, gen_no_convex, gen_stepup_coloring,
    gen_stepup_points, random_coloring, random_general_position, RamseySearch, WitnessSource, COLOR_STREAM,
};
use geo_ramsey::extraction::{extract_mono_convex_with_steps, Extraction};
use geo_ramsey::io::{parse_coloring, parse_points, write_coloring, write_points};
use geo_ramsey::verify::{
    check_delta_local_minimum_exclusion, check_monotone_case_bound, has_mono_convex_subset, verify_cupcap_free,
    verify_stepup_constraints, DEFAULT_BUDGET,
};
use geo_ramsey::{Certificate, Config, EdgeColoring, HyperColoring, SteppingUpSet, Verdict, VerifyError};

#[derive(Parser)]
#[command(
    name = "geo-ramsey",
    version,
    about = "Monochromatic convex sets: generate, verify, extract, render"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a construction, write its files and certify it.
    Generate(GenerateArgs),
    /// Check a property of point-set and coloring files.
    Verify(VerifyArgs),
    /// Run the extraction pipeline on a pair coloring.
    Extract(ExtractArgs),
    /// Draw a point set as SVG.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    CupcapFree,
    NoConvex,
    Blowup,
    StepupPoints,
    StepupColoring,
    RamseyWitness,
    Random,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::CupcapFree => "cupcap-free",
            Kind::NoConvex => "no-convex",
            Kind::Blowup => "blowup",
            Kind::StepupPoints => "stepup-points",
            Kind::StepupColoring => "stepup-coloring",
            Kind::RamseyWitness => "ramsey-witness",
            Kind::Random => "random",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    MonoConvex,
    CupcapFree,
    Stepup,
    DeltaLocalMin,
}

#[derive(Args)]
struct Budget {
    /// Enumeration budget (search nodes).
    #[arg(long, env = "GEO_RAMSEY_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct GenerateArgs {
    kind: Kind,
    /// Forbidden convex size, or clique size for Ramsey-based kinds.
    #[arg(long)]
    n: Option<u32>,
    /// Number of colors.
    #[arg(long)]
    q: Option<u32>,
    /// Cup parameter.
    #[arg(long)]
    k: Option<u32>,
    /// Cap parameter, or coloring arity for `random`.
    #[arg(long)]
    l: Option<u32>,
    /// Stepping-up level.
    #[arg(long)]
    t: Option<u32>,
    /// Ramsey base size.
    #[arg(long = "M")]
    m: Option<u32>,
    /// Number of points for `random`.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    budget: Budget,
    /// Skip the certification run.
    #[arg(long)]
    no_verify: bool,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    property: Property,
    #[arg(long)]
    points: PathBuf,
    #[arg(long)]
    coloring: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    /// Subset size for `delta-local-min`.
    #[arg(long)]
    m: Option<usize>,
    #[command(flatten)]
    budget: Budget,
    /// The property holds when no witness exists: exit 0 on a failed search.
    #[arg(long)]
    expect_absent: bool,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    points: PathBuf,
    #[arg(long)]
    coloring: PathBuf,
    #[arg(long)]
    n: usize,
    /// Expected number of colors; checked against the coloring file.
    #[arg(long)]
    q: Option<u32>,
    /// Step quota for the sequence; defaults to q n^2.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    points: PathBuf,
    #[arg(long)]
    coloring: Option<PathBuf>,
    /// Comma-separated vertex indices to emphasize.
    #[arg(long, value_delimiter = ',')]
    highlight: Vec<usize>,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Extract(a) => extract(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<VerifyError>() {
                Some(VerifyError::BudgetExceeded { .. }) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn exit_for(cert: &Certificate) -> ExitCode {
    match cert.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
    }
}

/// Turns a witness search into the statement "no witness exists": pass when
/// the search found nothing, fail carrying the witness otherwise.
fn absent(search: Certificate) -> Certificate {
    let property = format!("no-{}", search.property);
    let mut cert = match search.verdict {
        Verdict::Pass => Certificate::fail(property, search.examined, search.witness.unwrap_or_default()),
        Verdict::Fail => Certificate::pass(property, search.examined),
    };
    cert.notes = search.notes;
    cert
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.with_context(|| format!("{kind} needs --{flag}"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_points(path: &Path) -> Result<Config> {
    let points = parse_points(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Config::new(points).with_context(|| format!("validating {}", path.display()))
}

fn load_coloring(path: &Path, config: &Config) -> Result<EdgeColoring> {
    let c = parse_coloring(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    ensure!(
        c.vertex_count() == config.len(),
        "{} colors {} vertices but the point set has {}",
        path.display(),
        c.vertex_count(),
        config.len()
    );
    Ok(c)
}

fn write(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(path)
}

fn mono_absent(config: &Config, coloring: &impl HyperColoring, n: u32, budget: u64) -> Result<Certificate> {
    Ok(absent(has_mono_convex_subset(config, coloring, n as usize, budget)?))
}

fn generate(a: GenerateArgs) -> Result<ExitCode> {
    let kind = a.kind.name();
    let budget = a.budget.budget;
    let mut written = Vec::new();
    let mut summary = format!("kind={kind}");
    let check: Option<Certificate> = match a.kind {
        Kind::CupcapFree => {
            let (k, l) = (need(a.k, "k", kind)?, need(a.l, "l", kind)?);
            let config = gen_cupcap_free::<num_bigint::BigInt>(k, l)?;
            written.push(write(
                &a.out,
                &format!("{kind}.points"),
                &write_points(config.points()),
            )?);
            summary += &format!(" points={}", config.len());
            (!a.no_verify).then(|| verify_cupcap_free(&config, k, l))
        }
        Kind::NoConvex => {
            let n = need(a.n, "n", kind)?;
            let config = gen_no_convex(n)?;
            written.push(write(
                &a.out,
                &format!("{kind}.points"),
                &write_points(config.points()),
            )?);
            summary += &format!(" points={}", config.len());
            match a.no_verify {
                true => None,
                false => {
                    let one = EdgeColoring::uniform(2, 1, config.len(), 0)?;
                    Some(mono_absent(&config, &one, n, budget)?)
                }
            }
        }
        Kind::Blowup => {
            let (n, q) = (need(a.n, "n", kind)?, need(a.q, "q", kind)?);
            let b = gen_blowup_coloring(n, q)?;
            written.push(write(
                &a.out,
                &format!("{kind}.points"),
                &write_points(b.config.points()),
            )?);
            written.push(write(
                &a.out,
                &format!("{kind}.coloring"),
                &write_coloring(&b.coloring),
            )?);
            summary += &format!(" points={} colors={}", b.config.len(), b.coloring.color_count());
            match a.no_verify {
                true => None,
                false => Some(mono_absent(&b.config, &b.coloring, n, budget)?),
            }
        }
        Kind::StepupPoints => {
            let t = need(a.t, "t", kind)?;
            let set: SteppingUpSet = gen_stepup_points(t)?;
            written.push(write(&a.out, &format!("{kind}.points"), &write_points(set.points()))?);
            summary += &format!(" points={} level={t}", set.len());
            (!a.no_verify).then(|| verify_stepup_constraints(&set))
        }
        Kind::StepupColoring => {
            let m = need(a.m, "M", kind)?;
            let n = a.n.unwrap_or(3);
            let search = RamseySearch {
                seed: a.seed,
                ..RamseySearch::default()
            };
            let Some(witness) = find_ramsey_witness(m as usize, n as usize, &search) else {
                bail!("no 2-coloring of K_{m} without a monochromatic K_{n} was found");
            };
            let set: SteppingUpSet = gen_stepup_points(m)?;
            let lifted = gen_stepup_coloring(&witness.coloring)?.materialize()?;
            written.push(write(&a.out, &format!("{kind}.points"), &write_points(set.points()))?);
            written.push(write(&a.out, &format!("{kind}.coloring"), &write_coloring(&lifted))?);
            written.push(write(
                &a.out,
                &format!("{kind}.base.coloring"),
                &write_coloring(&witness.coloring),
            )?);
            summary += &format!(" points={} base_vertices={m} clique={n}", set.len());
            match a.no_verify {
                true => None,
                false => Some(check_monotone_case_bound(
                    &set,
                    &witness.coloring,
                    &lifted,
                    n as usize,
                    budget,
                )?),
            }
        }
        Kind::RamseyWitness => {
            let (m, n) = (need(a.m, "M", kind)?, need(a.n, "n", kind)?);
            let search = RamseySearch {
                seed: a.seed,
                ..RamseySearch::default()
            };
            let Some(witness) = find_ramsey_witness(m as usize, n as usize, &search) else {
                println!("{summary} verdict=fail reason=not-found");
                return Ok(ExitCode::from(1));
            };
            written.push(write(
                &a.out,
                &format!("{kind}.coloring"),
                &write_coloring(&witness.coloring),
            )?);
            let source = match witness.source {
                WitnessSource::BuiltIn(name) => name.to_string(),
                WitnessSource::Search { seed } => format!("search:{seed}"),
            };
            summary += &format!(" vertices={m} clique={n} source={source}");
            (!a.no_verify).then(|| {
                let examined = binomial(u128::from(m), u128::from(n)).min(u128::from(u64::MAX)) as u64;
                match find_mono_clique(&witness.coloring, n as usize) {
                    None => Certificate::pass("no-mono-clique", examined),
                    Some(k) => Certificate::fail("no-mono-clique", examined, k),
                }
            })
        }
        Kind::Random => {
            let size = need(a.size, "size", kind)?;
            let q = need(a.q, "q", kind)?;
            let arity = a.l.unwrap_or(2) as usize;
            let config: Config = random_general_position(size, a.seed)?;
            let coloring = random_coloring(arity, q, size, a.seed ^ COLOR_STREAM)?;
            written.push(write(
                &a.out,
                &format!("{kind}.points"),
                &write_points(config.points()),
            )?);
            written.push(write(&a.out, &format!("{kind}.coloring"), &write_coloring(&coloring))?);
            summary += &format!(" points={size} arity={arity} colors={q} seed={}", a.seed);
            None
        }
    };
    let files: Vec<String> = written.iter().map(|p| p.display().to_string()).collect();
    println!("{summary} files={}", files.join(","));
    match check {
        None => {
            println!("verdict=skipped");
            Ok(ExitCode::SUCCESS)
        }
        Some(cert) => {
            println!("{cert}");
            Ok(exit_for(&cert))
        }
    }
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let config = load_points(&a.points)?;
    let cert = match a.property {
        Property::MonoConvex => {
            let path = need(a.coloring.as_deref(), "coloring", "mono-convex")?;
            let coloring = load_coloring(path, &config)?;
            let n = need(a.n, "n", "mono-convex")?;
            has_mono_convex_subset(&config, &coloring, n, a.budget.budget)?
        }
        Property::CupcapFree => {
            verify_cupcap_free(&config, need(a.k, "k", "cupcap-free")?, need(a.l, "l", "cupcap-free")?)
        }
        Property::Stepup => verify_stepup_constraints(&SteppingUpSet::from_config(config)?),
        Property::DeltaLocalMin => {
            let m = need(a.m, "m", "delta-local-min")?;
            check_delta_local_minimum_exclusion(&SteppingUpSet::from_config(config)?, m)
        }
    };
    let cert = if a.expect_absent { absent(cert) } else { cert };
    println!("{cert}");
    Ok(exit_for(&cert))
}

fn extract(a: ExtractArgs) -> Result<ExitCode> {
    let config = load_points(&a.points)?;
    let coloring = load_coloring(&a.coloring, &config)?;
    ensure!(
        coloring.arity() == 2,
        "extraction needs a pair coloring, got arity {}",
        coloring.arity()
    );
    let q = coloring.color_count();
    if let Some(expected) = a.q {
        ensure!(expected == q, "--q {expected} but the coloring has {q} colors");
    }
    let steps = a.steps.unwrap_or(q as usize * a.n * a.n);
    match extract_mono_convex_with_steps(&config, &coloring, a.n, steps)? {
        Extraction::Found { witness, color, report } => {
            let vertices: Vec<String> = witness.vertices.iter().map(|v| v.to_string()).collect();
            let text = format!(
                "result=found kind={} color={color} witness={} oracle=pass\n{report}\n",
                witness.kind,
                vertices.join(",")
            );
            write(&a.out, "witness.txt", &text)?;
            let picture = svg::render(config.points(), Some(&coloring), &witness.vertices);
            write(&a.out, "witness.svg", &picture)?;
            print!("{text}");
            Ok(ExitCode::SUCCESS)
        }
        Extraction::NotFound { report } => {
            let text = format!("result=not-found\n{report}\n");
            write(&a.out, "report.txt", &text)?;
            print!("{text}");
            Ok(ExitCode::from(1))
        }
    }
}

fn render(a: RenderArgs) -> Result<ExitCode> {
    let config = load_points(&a.points)?;
    let coloring = a.coloring.as_deref().map(|p| load_coloring(p, &config)).transpose()?;
    if let Some(&bad) = a.highlight.iter().find(|&&i| i >= config.len()) {
        bail!("highlight index {bad} out of range for {} points", config.len());
    }
    let picture = svg::render(config.points(), coloring.as_ref(), &a.highlight);
    let path = write(&a.out, "render.svg", &picture)?;
    println!("svg={}", path.display());
    Ok(ExitCode::SUCCESS)
}
