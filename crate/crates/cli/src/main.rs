use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use order66::arithmetic::field::{fp2, Fp};
use order66::elliptic::{base_orbits, AnyModel, BaseAction, ModelField, ModelFixture, WeierstrassModel};
use order66::engine::{
    run_complex_with, run_tame_with, run_wild_with, supersingularity_report, CaseFixture, Perturbation,
    ProofTranscript, TRANSCRIPT_DIR_ENV,
};
use order66::weights::{solve, weights_from_invariance};
use order66::{count_points, enumerate_profiles, ProfileConstraint};

const EXIT_FAIL: u8 = 2;
const EXIT_INPUT: u8 = 3;

#[derive(Parser)]
#[command(
    name = "order66",
    version,
    about = "Replays the order-66 K3 classification with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    /// Also write the result as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run one case of the classification and print its transcript.
    Verify {
        #[command(subcommand)]
        case: Case,
    },
    /// Enumerate eigenvalue profiles of a given order.
    Profiles {
        #[arg(long)]
        order: u64,
        #[arg(long, default_value_t = 22)]
        dim: u64,
        /// Constraints such as `one`, `orbit:66`, `power:6=[1.2, z11:10.2]`, separated by `;`.
        #[arg(long)]
        constraints: Vec<String>,
    },
    /// Solve the weight congruences of a diagonal action on a model.
    Weights {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 66)]
        modulus: u64,
        /// Extra relations, e.g. `11a = 22; 11b = 33; a + c - b = 5`.
        #[arg(long)]
        relations: Option<String>,
    },
    /// Discriminant, Kodaira ledger and base orbits of a model.
    Fibration {
        #[arg(long)]
        model: String,
        /// `mult:<n>` or `translate`.
        #[arg(long)]
        action: Option<String>,
    },
    /// Count points of a model over F_q, fibre by fibre.
    Count {
        #[arg(long)]
        model: String,
        /// `p`, `p2`, or the field size itself.
        #[arg(long)]
        q: String,
    },
    /// The congruence p^nu = -1 (mod 66), with point counts for p = 11.
    Supersingular {
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum Case {
    Tame {
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long)]
        perturb: Option<String>,
    },
    Wild {
        #[arg(long)]
        perturb: Option<String>,
    },
    Complex {
        #[arg(long)]
        perturb: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Verify { case } => verify(case, &cli.out),
        Command::Profiles {
            order,
            dim,
            constraints,
        } => profiles(*order, *dim, constraints, &cli.out),
        Command::Weights {
            model,
            modulus,
            relations,
        } => weights(model, *modulus, relations.as_deref(), &cli.out),
        Command::Fibration { model, action } => fibration(model, action.as_deref(), &cli.out),
        Command::Count { model, q } => count(model, q, &cli.out),
        Command::Supersingular { p } => {
            let r = supersingularity_report(*p)?;
            print!("{r}");
            write_json(&cli.out, &r.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn write_json(out: &Output, text: &str) -> Result<()> {
    if let Some(path) = &out.json {
        write_file(path, text)?;
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn fixture_with(base: CaseFixture, perturb: Option<&str>) -> Result<CaseFixture> {
    Ok(match perturb {
        Some(p) => base.perturbed(p.parse::<Perturbation>()?),
        None => base,
    })
}

fn verify(case: &Case, out: &Output) -> Result<ExitCode> {
    let t: ProofTranscript = match case {
        Case::Tame {
            characteristic,
            perturb,
        } => run_tame_with(*characteristic, &fixture_with(CaseFixture::tame(), perturb.as_deref())?)?,
        Case::Complex { perturb } => run_complex_with(&fixture_with(CaseFixture::tame(), perturb.as_deref())?),
        Case::Wild { perturb } => run_wild_with(&fixture_with(CaseFixture::wild(), perturb.as_deref())?),
    };
    print!("{}", t.summary(out.verbose));
    let text = t.to_json();
    write_json(out, &text)?;
    if let Some(dir) = std::env::var_os(TRANSCRIPT_DIR_ENV) {
        let path = PathBuf::from(dir).join(format!("{}-{}.json", t.case, t.characteristic));
        write_file(&path, &text)?;
    }
    Ok(if t.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    })
}

fn profiles(order: u64, dim: u64, raw: &[String], out: &Output) -> Result<ExitCode> {
    let mut cs = vec![ProfileConstraint::ExactProfileOrder(order)];
    for item in raw
        .iter()
        .flat_map(|r| r.split(';'))
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        cs.push(item.parse()?);
    }
    let found = enumerate_profiles(dim, &cs)?;
    for p in &found {
        if out.verbose {
            println!(
                "{p}  e = {}",
                p.lefschetz_number().map_or("-".into(), |e| e.to_string())
            );
        } else {
            println!("{p}");
        }
    }
    println!("{} profile(s)", found.len());
    let v = json!({
        "order": order.to_string(),
        "dim": dim.to_string(),
        "constraints": cs.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "profiles": found.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    write_json(out, &pretty(&v))?;
    Ok(ExitCode::SUCCESS)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn load_model(name: &str) -> Result<AnyModel> {
    Ok(ModelFixture::resolve(name)?.build()?)
}

fn monomials<F: ModelField>(m: &WeierstrassModel<F>) -> Vec<Vec<u32>> {
    let f = m.field();
    let mut out = vec![vec![3, 0, 0], vec![0, 2, 0]];
    for (k, c) in m.a().coeffs().iter().enumerate().rev() {
        if !f.is_zero(c) {
            out.push(vec![1, 0, k as u32]);
        }
    }
    for (k, c) in m.b().coeffs().iter().enumerate().rev() {
        if !f.is_zero(c) {
            out.push(vec![0, 0, k as u32]);
        }
    }
    out
}

fn weights(model: &str, modulus: u64, relations: Option<&str>, out: &Output) -> Result<ExitCode> {
    let monos = match load_model(model)? {
        AnyModel::Rational(m) => monomials(&m),
        AnyModel::Prime(m) => monomials(&m),
    };
    let mut sys = weights_from_invariance(&monos, &["a", "b", "c"], modulus)?;
    if let Some(r) = relations {
        sys.parse_relations(r)?;
    }
    let sols = solve(&sys)?;
    println!("{sys}");
    for s in &sols {
        println!("  {s}");
    }
    println!("{} solution(s)", sols.len());
    let v = json!({
        "system": sys.to_string(),
        "solutions": sols.iter().map(ToString::to_string).collect::<Vec<_>>(),
    });
    write_json(out, &pretty(&v))?;
    Ok(ExitCode::SUCCESS)
}

fn fibration(model: &str, action: Option<&str>, out: &Output) -> Result<ExitCode> {
    let action: Option<BaseAction> = action.map(str::parse).transpose()?;
    let v = match load_model(model)? {
        AnyModel::Rational(m) => describe(&m, action.as_ref(), out.verbose)?,
        AnyModel::Prime(m) => describe(&m, action.as_ref(), out.verbose)?,
    };
    write_json(out, &pretty(&v))?;
    Ok(ExitCode::SUCCESS)
}

fn describe<F: ModelField>(m: &WeierstrassModel<F>, action: Option<&BaseAction>, verbose: bool) -> Result<Value> {
    let f = m.field();
    let ledger = m.euler_ledger()?;
    println!("A = {}", m.a().format(f));
    println!("B = {}", m.b().format(f));
    println!("Delta = {}", m.discriminant().format(f));
    let mut places = Vec::new();
    for p in &ledger.places {
        let name = p.place.format(f);
        if verbose {
            println!(
                "  {name:<24} deg {} v(A)={} v(B)={} v(D)={}  {}",
                p.residue_degree, p.va, p.vb, p.vdelta, p.kodaira
            );
        }
        places.push(json!({
            "place": name,
            "degree": p.residue_degree.to_string(),
            "kodaira": p.kodaira.to_string(),
        }));
    }
    let mut types = std::collections::BTreeMap::new();
    for p in &ledger.places {
        *types.entry(p.kodaira.to_string()).or_insert(0) += p.residue_degree;
    }
    let summary: Vec<String> = types.iter().map(|(k, n)| format!("{k} x{n}")).collect();
    println!("fibres: {}; euler = {}", summary.join(", "), ledger.total);
    let mut v = json!({
        "characteristic": m.characteristic().to_string(),
        "discriminant": m.discriminant().format(f),
        "places": places,
        "euler": ledger.total.to_string(),
    });
    if let Some(a) = action {
        let list: Vec<_> = ledger.places.iter().map(|p| p.place.clone()).collect();
        let d = base_orbits(f, a, &list)?;
        let lengths: Vec<String> = d.orbit_lengths().iter().map(u64::to_string).collect();
        println!("orbits under {a}: [{}]", lengths.join(", "));
        v["orbits"] = json!(lengths);
    }
    Ok(v)
}

fn count(model: &str, q: &str, out: &Output) -> Result<ExitCode> {
    let m = load_model(model)?;
    let (model, degree) = match m {
        AnyModel::Prime(m) => {
            let p = m.characteristic();
            let degree = match q {
                "p" => 1,
                "p2" | "p^2" => 2,
                n => match n.parse::<u64>() {
                    Ok(n) if n == p => 1,
                    Ok(n) if n == p * p => 2,
                    _ => bail!("--q must be p, p2, {p} or {}", p * p),
                },
            };
            (m, degree)
        }
        AnyModel::Rational(m) => {
            let n: u64 = q.parse().map_err(|_| anyhow!("a rational model needs a numeric --q"))?;
            let (p, degree) = (2..=n)
                .find(|p| n.is_multiple_of(*p))
                .map(|p| (p, if n == p { 1 } else { 2 }))
                .filter(|&(p, d)| d == 1 || p * p == n)
                .ok_or_else(|| anyhow!("--q must be a prime or the square of one"))?;
            (m.reduce_mod(p)?, degree)
        }
    };
    let p = model.characteristic();
    let rec = if degree == 1 {
        count_points(&model, &Fp::new(p)?)?
    } else {
        count_points(&model, &fp2(p)?)?
    };
    println!("{rec}");
    if out.verbose {
        for f in &rec.per_fiber {
            println!("  t = {:<10} {:>6}  {}", f.base, f.count, f.kind);
        }
    }
    let v = json!({
        "q": rec.q.to_string(),
        "total": rec.total.to_string(),
        "fibers": rec.per_fiber.iter().map(|f| json!({
            "base": f.base,
            "count": f.count.to_string(),
            "kind": f.kind.to_string(),
        })).collect::<Vec<_>>(),
    });
    write_json(out, &pretty(&v))?;
    Ok(ExitCode::SUCCESS)
}
