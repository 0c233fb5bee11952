use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dwpf_core::determinant;
use dwpf_core::lattice::{self, Capacity, EnumOptions, Normalization, MAX_N_ENV};
use dwpf_core::methods::{MethodRegistry, Query};
use dwpf_core::recurrence::six;
use dwpf_core::sample::Sampler;
use dwpf_core::scalar::{Cyclo12, Field, Rational, Ring};
use dwpf_core::suite::{self, QDomain, SuiteConfig};
use dwpf_core::symmetric;
use dwpf_core::vertex::Model;

#[derive(Parser)]
#[command(
    name = "dwpf",
    version,
    about = "Exact domain-wall partition functions of the 6v and 19v models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for enumeration and the suite.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Largest lattice size the enumerator accepts (both models).
    #[arg(long, global = true, env = MAX_N_ENV)]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Z_N by every requested method, with an agreement verdict.
    Compute(ComputeArgs),
    /// The exact identity suite for one model and q domain.
    Verify(VerifyArgs),
    /// Export the Delta table at size N.
    Delta(DeltaArgs),
    /// Wall time and algebraic size of the routes across N.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    #[value(name = "6v")]
    Six,
    #[value(name = "19v")]
    Nineteen,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Six => Model::SixVertex,
            ModelArg::Nineteen => Model::NineteenVertex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum QArg {
    Rational,
    Cyclo12,
}

impl From<QArg> for QDomain {
    fn from(q: QArg) -> Self {
        match q {
            QArg::Rational => QDomain::Rational,
            QArg::Cyclo12 => QDomain::Cyclo12,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NormArg {
    Raw,
    Cleared,
}

impl From<NormArg> for Normalization {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Raw => Normalization::Raw,
            NormArg::Cleared => Normalization::Cleared,
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_enum, default_value = "6v")]
    model: ModelArg,
    /// Lattice size; implied by explicit rapidities when given.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "rational")]
    q: QArg,
    /// sqrt(q) for the rational domain; seeded when omitted.
    #[arg(long)]
    q_sqrt: Option<String>,
    /// Square roots of the row rapidities.
    #[arg(long, num_args = 1..)]
    zeta_sqrt: Vec<String>,
    /// Square roots of the column rapidities.
    #[arg(long, num_args = 1..)]
    z_sqrt: Vec<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "raw")]
    normalization: NormArg,
    /// Method names, or `all` for every registered one.
    #[arg(long, num_args = 1.., default_value = "all")]
    method: Vec<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "19v")]
    model: ModelArg,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, value_enum, default_value = "cyclo12")]
    q: QArg,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Generating,
    Elementary,
}

#[derive(Args)]
struct DeltaArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "generating")]
    construction: Construction,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "19v")]
    model: ModelArg,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Whether the command's exact checks all held.
struct Outcome {
    doc: Value,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (doc, code) = match run(&cli) {
        Ok(out) => (out.doc, if out.ok { 0 } else { 1 }),
        Err(e) => (json!({ "error": format!("{e:#}") }), 2),
    };
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
    let written = match &cli.output {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    };
    if let Err(e) = written {
        eprintln!("dwpf: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn options(cli: &Cli) -> EnumOptions {
    let capacity = match cli.max_n {
        Some(n) => Capacity {
            max_n_6v: n,
            max_n_19v: n,
        },
        None => Capacity::default(),
    };
    EnumOptions {
        threads: cli.threads.max(1),
        capacity,
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let opts = options(cli);
    match &cli.command {
        Command::Compute(a) => compute(a, &opts),
        Command::Verify(a) => verify(a, &opts),
        Command::Delta(a) => delta(a),
        Command::Bench(a) => bench(a, &opts),
    }
}

fn parse_all<F: FromStr<Err = dwpf_core::Error>>(
    xs: &[String],
    what: &str,
) -> anyhow::Result<Vec<F>> {
    xs.iter()
        .map(|s| s.parse::<F>().with_context(|| format!("{what} `{s}`")))
        .collect()
}

/// Explicit or seeded roots; `probe_q` only steers the seeded draw away
/// from degenerate ratios.
fn roots<F: Field + FromStr<Err = dwpf_core::Error>>(
    a: &ComputeArgs,
    sampler: &mut Sampler,
    probe_q: &Rational,
) -> anyhow::Result<(Vec<F>, Vec<F>)> {
    if a.zeta_sqrt.is_empty() != a.z_sqrt.is_empty() {
        bail!("give both --zeta-sqrt and --z-sqrt, or neither");
    }
    if a.zeta_sqrt.is_empty() {
        let Some(n) = a.n else {
            bail!("--n is required without explicit rapidities")
        };
        let pt = sampler.roots::<Rational>(n, probe_q);
        let up = |xs: Vec<Rational>| xs.iter().map(F::from_rational).collect();
        return Ok((up(pt.u), up(pt.v)));
    }
    let u: Vec<F> = parse_all(&a.zeta_sqrt, "row root")?;
    let v: Vec<F> = parse_all(&a.z_sqrt, "column root")?;
    if u.len() != v.len() {
        bail!("{} row roots but {} column roots", u.len(), v.len());
    }
    if let Some(n) = a.n {
        if n != u.len() {
            bail!("--n {n} disagrees with {} explicit roots", u.len());
        }
    }
    Ok((u, v))
}

fn compute(a: &ComputeArgs, opts: &EnumOptions) -> anyhow::Result<Outcome> {
    let mut sampler = Sampler::new(a.seed);
    match a.q {
        QArg::Rational => {
            let p: Rational = match &a.q_sqrt {
                Some(s) => s.parse().with_context(|| format!("--q-sqrt `{s}`"))?,
                None => sampler.generic_p(),
            };
            let (u, v) = roots::<Rational>(a, &mut sampler, &p.square())?;
            compute_with(
                a,
                MethodRegistry::<Rational>::standard(),
                u,
                v,
                p,
                "rational",
                opts,
            )
        }
        QArg::Cyclo12 => {
            if a.q_sqrt.is_some() {
                bail!("--q-sqrt applies to the rational domain only");
            }
            let (u, v) = roots::<Cyclo12>(a, &mut sampler, &Rational::from(2))?;
            compute_with(
                a,
                MethodRegistry::<Cyclo12>::standard(),
                u,
                v,
                Cyclo12::p(),
                "cyclo12",
                opts,
            )
        }
    }
}

fn strings<F: Ring>(xs: &[F]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn compute_with<F: Field>(
    a: &ComputeArgs,
    registry: MethodRegistry<F>,
    u: Vec<F>,
    v: Vec<F>,
    p: F,
    domain: &str,
    opts: &EnumOptions,
) -> anyhow::Result<Outcome> {
    let query = Query {
        model: a.model.into(),
        u,
        v,
        p,
        normalization: a.normalization.into(),
    };
    let names: Vec<String> = if a.method.iter().any(|m| m == "all") {
        registry.names().into_iter().map(String::from).collect()
    } else {
        a.method.clone()
    };
    let mut values = Vec::new();
    let mut computed: Vec<F> = Vec::new();
    for name in &names {
        let method = registry.get(name)?;
        match method.compute(&query, opts) {
            Ok(x) => {
                values.push(json!({ "method": name, "provenance": method.provenance(), "value": x.to_string() }));
                computed.push(x);
            }
            Err(e @ (dwpf_core::Error::Unsupported(_) | dwpf_core::Error::Coincident(_))) => {
                values.push(json!({ "method": name, "provenance": method.provenance(), "skipped": e.to_string() }));
            }
            Err(e) => return Err(e).with_context(|| format!("method `{name}`")),
        }
    }
    if computed.is_empty() {
        bail!("no requested method applies to this query");
    }
    let ok = computed.windows(2).all(|w| w[0] == w[1]);
    Ok(Outcome {
        doc: json!({
            "command": "compute",
            "model": query.model,
            "n": query.n(),
            "q_domain": domain,
            "p": query.p.to_string(),
            "normalization": query.normalization,
            "zeta_sqrt": strings(&query.u),
            "z_sqrt": strings(&query.v),
            "values": values,
            "verdict": if ok { "exact-equal" } else { "mismatch" },
        }),
        ok,
    })
}

fn verify(a: &VerifyArgs, opts: &EnumOptions) -> anyhow::Result<Outcome> {
    let cfg = SuiteConfig {
        model: a.model.into(),
        n: a.n,
        domain: a.q.into(),
        seed: a.seed,
        trials: a.trials,
        opts: *opts,
    };
    let reports = suite::run_suite(&cfg)?;
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.identity.as_str())
        .collect();
    let ok = failing.is_empty();
    Ok(Outcome {
        doc: json!({
            "command": "verify",
            "model": cfg.model,
            "n": a.n,
            "q_domain": match a.q { QArg::Rational => "rational", QArg::Cyclo12 => "cyclo12" },
            "seed": a.seed,
            "trials": a.trials,
            "reports": reports,
            "failing": failing,
            "verdict": if ok { "exact-equal" } else { "mismatch" },
        }),
        ok,
    })
}

fn delta(a: &DeltaArgs) -> anyhow::Result<Outcome> {
    let (table, name) = match a.construction {
        Construction::Generating => (symmetric::delta_from_generating(a.n)?, "generating"),
        Construction::Elementary => (symmetric::delta_from_elementary(a.n), "elementary"),
    };
    let mut doc = serde_json::to_value(table.export())?;
    doc["command"] = json!("delta");
    doc["construction"] = json!(name);
    Ok(Outcome { doc, ok: true })
}

fn bench(a: &BenchArgs, opts: &EnumOptions) -> anyhow::Result<Outcome> {
    let model: Model = a.model.into();
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 1..=a.max_n {
        let mut sampler = Sampler::new(a.seed);
        let d = model.edge_states() as u64;
        let mut row = json!({ "n": n, "transfer_states": d.pow(n as u32 + 1) });
        match model {
            Model::SixVertex => {
                let q = sampler.generic_p().square();
                let pt = sampler.roots::<Rational>(n, &q);
                let (zeta, z) = (pt.zeta(), pt.z());
                let t = Instant::now();
                let e = lattice::enumerate_six_vertex_raw(&zeta, &z, &q, opts)?;
                row["enumerate_ms"] = json!(t.elapsed().as_secs_f64() * 1e3);
                let t = Instant::now();
                let i = six::izergin_determinant(&zeta, &z, &q)?;
                row["izergin_ms"] = json!(t.elapsed().as_secs_f64() * 1e3);
                row["agree"] = json!(e == i);
                ok &= e == i;
            }
            Model::NineteenVertex => {
                let pt = sampler.roots::<Rational>(n, &Rational::from(2));
                let up =
                    |xs: &[Rational]| xs.iter().map(Cyclo12::from_rational).collect::<Vec<_>>();
                let t = Instant::now();
                let e =
                    lattice::enumerate_cleared(model, &up(&pt.u), &up(&pt.v), &Cyclo12::p(), opts)?;
                row["enumerate_ms"] = json!(t.elapsed().as_secs_f64() * 1e3);
                let t = Instant::now();
                let mu = determinant::mu_constant(n, opts)?;
                let det = determinant::determinant_route(&up(&pt.zeta()), &up(&pt.z()), &mu)?;
                row["determinant_ms"] = json!(t.elapsed().as_secs_f64() * 1e3);
                row["agree"] = json!(e == det);
                ok &= e == det;
                if n <= 5 {
                    let table = symmetric::delta_from_generating(n)?;
                    row["delta_terms"] =
                        json!(table.entries().iter().map(|p| p.len()).sum::<usize>());
                }
                if n <= 4 {
                    row["determinant_terms"] =
                        json!(determinant::z_cubic_root_symbolic(n)?.value.len());
                }
            }
        }
        rows.push(row);
    }
    Ok(Outcome {
        doc: json!({ "command": "bench", "model": model, "seed": a.seed, "rows": rows }),
        ok,
    })
}
