//! `groupdet`: inspect groups, print representation tables, compute group
//! determinants and inverses, and run the identity checkers.
//!
//! Exit status: 0 on success, 1 if a checker fails, 2 on usage or domain errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use groupdet::cyclotomic::parse_rational;
use groupdet::detlab::{self, DEFAULT_SYMBOLIC_LIMIT};
use groupdet::reps::Representation;
use groupdet::verify::{self, CheckId, CheckResult, Mode, RunConfig, Status};
use groupdet::{CycloNumber, Error, GroupContext};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "groupdet",
    version,
    about = "Exact group determinants and their factorizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, family, field and element listing of a group
    Info {
        group: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Irreducible representation table
    Reps {
        group: String,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// The group determinant, symbolically or at random points
    Det {
        group: String,
        #[arg(long, value_enum, default_value_t = DetMode::Symbolic)]
        mode: DetMode,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run one checker, or `all`
    Verify {
        check: String,
        group: String,
        #[arg(long, value_enum, default_value_t = VerifyMode::Auto)]
        mode: VerifyMode,
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Inverse of Σ c_g g via the factorization formulas
    Inverse {
        group: String,
        /// JSON object mapping element names to rational strings, inline or as a file path;
        /// omitted names are 0. Without it a random integer element is drawn from --seed.
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Full JSON report: group data, determinant and every applicable checker
    Report {
        group: String,
        #[arg(long, value_enum, default_value_t = VerifyMode::Auto)]
        mode: VerifyMode,
        #[command(flatten)]
        run: RunArgs,
        /// Write the report here instead of standard output
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args, Clone, Copy)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Largest order expanded symbolically
    #[arg(long, default_value_t = DEFAULT_SYMBOLIC_LIMIT)]
    limit: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DetMode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Auto,
    Symbolic,
    Randomized,
}

impl RunArgs {
    fn config(self, mode: VerifyMode) -> RunConfig {
        RunConfig {
            mode: match mode {
                VerifyMode::Auto => Mode::Auto,
                VerifyMode::Symbolic => Mode::Symbolic,
                VerifyMode::Randomized => Mode::Randomized,
            },
            trials: self.trials,
            seed: self.seed,
            symbolic_limit: self.limit,
        }
    }
}

enum Failure {
    Domain(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Info { group, json } => {
            let ctx = GroupContext::parse(&group)?;
            let payload = info_payload(&ctx);
            if let Some(path) = json {
                write_json(&path, &envelope(&ctx, "info", None, &[], payload))?;
            } else {
                print_info(&ctx);
            }
            Ok(())
        }
        Command::Reps { group, json } => {
            let ctx = GroupContext::parse(&group)?;
            let payload = reps_payload(&ctx);
            if let Some(path) = json {
                write_json(&path, &envelope(&ctx, "reps", None, &[], payload))?;
            } else {
                print_reps(&ctx);
            }
            Ok(())
        }
        Command::Det {
            group,
            mode,
            run,
            json,
        } => {
            let ctx = GroupContext::parse(&group)?;
            let payload = match mode {
                DetMode::Symbolic => det_symbolic(&ctx, run.limit)?,
                DetMode::Numeric => det_numeric(&ctx, run),
            };
            let failed = payload["identities"]
                .as_array()
                .is_some_and(|ids| ids.iter().any(|i| i["status"] == "fail"));
            if let Some(path) = json {
                let seed = (mode == DetMode::Numeric).then_some(run.seed);
                write_json(&path, &envelope(&ctx, "det", seed, &[], payload))?;
            } else if mode == DetMode::Symbolic {
                println!("{}", payload["theta"].as_str().unwrap());
            } else {
                for p in payload["points"].as_array().unwrap() {
                    println!("trial {}: Θ = {}", p["trial"], p["theta"].as_str().unwrap());
                }
                for i in payload["identities"].as_array().unwrap() {
                    println!(
                        "{} {}",
                        i["status"].as_str().unwrap().to_uppercase(),
                        i["name"].as_str().unwrap()
                    );
                }
            }
            if failed {
                return Err(Failure::Checks);
            }
            Ok(())
        }
        Command::Verify {
            check,
            group,
            mode,
            run,
            json,
        } => {
            let ctx = GroupContext::parse(&group)?;
            let cfg = run.config(mode);
            let results = if check.eq_ignore_ascii_case("all") {
                verify::run_all(&ctx, &cfg)
            } else {
                let id: CheckId = check.parse()?;
                vec![verify::run_check(id, &ctx, &cfg)?]
            };
            for r in &results {
                println!("{}", result_line(r));
            }
            if let Some(path) = json {
                write_json(
                    &path,
                    &envelope(&ctx, "verify", Some(run.seed), &results, Value::Null),
                )?;
            }
            if results.iter().any(|r| r.status == Status::Fail) {
                return Err(Failure::Checks);
            }
            Ok(())
        }
        Command::Inverse {
            group,
            coeffs,
            seed,
            json,
        } => {
            let ctx = GroupContext::parse(&group)?;
            let point = match coeffs {
                Some(spec) => read_coefficients(&ctx, &spec)?,
                None => verify::random_assignment(&ctx, seed, verify::default_bound(&ctx)),
            };
            let inv = detlab::inverse_element(&ctx, &point)?;
            if let Some(path) = json {
                let payload = json!({
                    "element": coefficient_json(&ctx, &point),
                    "inverse": inv.to_json(),
                });
                write_json(&path, &envelope(&ctx, "inverse", Some(seed), &[], payload))?;
            } else {
                for (g, c) in inv.coeffs().iter().enumerate() {
                    println!("{}: {}", ctx.group.name(g), c);
                }
            }
            Ok(())
        }
        Command::Report {
            group,
            mode,
            run,
            json,
        } => {
            let ctx = GroupContext::parse(&group)?;
            let cfg = run.config(mode);
            let results = verify::run_all(&ctx, &cfg);
            let det = if ctx.order() <= run.limit {
                det_symbolic(&ctx, run.limit)?
            } else {
                det_numeric(&ctx, run)
            };
            let payload = json!({
                "info": info_payload(&ctx),
                "reps": reps_payload(&ctx),
                "determinant": det,
            });
            let report = envelope(&ctx, "report", Some(run.seed), &results, payload);
            match json {
                Some(path) => write_json(&path, &report)?,
                None => println!("{}", to_pretty(&report)),
            }
            if results.iter().any(|r| r.status == Status::Fail) {
                return Err(Failure::Checks);
            }
            Ok(())
        }
    }
}

fn result_line(r: &CheckResult) -> String {
    let status = match r.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    };
    let mut line = format!("{status} {:15} {:6} {}", r.id.as_str(), r.group, r.mode);
    if let Some(reason) = &r.reason {
        line.push_str(&format!(" ({reason})"));
    }
    if r.status == Status::Fail {
        if let Some(w) = &r.witness {
            line.push_str(&format!(" witness: {w}"));
        }
    }
    line
}

fn envelope(
    ctx: &GroupContext,
    command: &str,
    seed: Option<u64>,
    results: &[CheckResult],
    payload: Value,
) -> Value {
    json!({
        "version": VERSION,
        "group": ctx.group.spec().to_string(),
        "command": command,
        "seed": seed,
        "results": results,
        "payload": payload,
    })
}

fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

fn write_json(path: &Path, v: &Value) -> Result<(), Failure> {
    let mut text = to_pretty(v);
    text.push('\n');
    fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn family_name(ctx: &GroupContext) -> &'static str {
    match ctx.group.family() {
        groupdet::groups::Family::Abelian => "abelian",
        groupdet::groups::Family::Dihedral => "dihedral",
        groupdet::groups::Family::Quaternion => "generalized quaternion",
    }
}

fn info_payload(ctx: &GroupContext) -> Value {
    let g = &ctx.group;
    json!({
        "spec": g.spec().to_string(),
        "family": family_name(ctx),
        "order": g.order(),
        "conductor": ctx.field.conductor(),
        "elements": g.names(),
        "rotation_order": g.rotation_order(),
        "degrees": ctx.reps.degrees(),
    })
}

fn print_info(ctx: &GroupContext) {
    let g = &ctx.group;
    println!("group:      {}", g.spec());
    println!("family:     {}", family_name(ctx));
    println!("order:      {}", g.order());
    println!("field:      Q(ζ_{})", ctx.field.conductor());
    if let Some(r) = g.rotation_order() {
        println!("⟨a⟩ order:  {r}");
    }
    let degrees: Vec<String> = ctx.reps.degrees().iter().map(|d| d.to_string()).collect();
    println!("degrees:    [{}]", degrees.join(", "));
    println!("elements:   {}", g.names().join(", "));
}

fn matrix_text(rep: &Representation, g: usize) -> String {
    let m = rep.matrix(g);
    if m.dim() == 1 {
        return m.get(0, 0).to_string();
    }
    format!(
        "[[{}, {}], [{}, {}]]",
        m.get(0, 0),
        m.get(0, 1),
        m.get(1, 0),
        m.get(1, 1)
    )
}

fn reps_payload(ctx: &GroupContext) -> Value {
    let g = &ctx.group;
    let rows: Vec<Value> = ctx
        .reps
        .reps()
        .iter()
        .map(|rep| {
            let mut values = Map::new();
            for v in 0..g.order() {
                values.insert(g.name(v).to_string(), json!(matrix_text(rep, v)));
            }
            json!({ "name": rep.name(), "degree": rep.degree(), "values": values })
        })
        .collect();
    json!({
        "field": format!("Q(zeta_{})", ctx.field.conductor()),
        "columns": g.names(),
        "representations": rows,
    })
}

fn print_reps(ctx: &GroupContext) {
    let g = &ctx.group;
    println!("z = exp(2πi/{})", ctx.field.conductor());
    for rep in ctx.reps.reps() {
        println!("{} (degree {})", rep.name(), rep.degree());
        for v in 0..g.order() {
            println!("  {:>8}: {}", g.name(v), matrix_text(rep, v));
        }
    }
}

fn det_symbolic(ctx: &GroupContext, limit: usize) -> Result<Value, Failure> {
    let theta = detlab::symbolic_det(ctx, limit)?;
    let xs = ctx.symbols();
    let mut identities = vec![identity(
        "Θ(G) = Π_φ det(Σ φ(g) x_g)^{deg φ}",
        detlab::frobenius_theta(ctx, &xs) == theta,
    )];
    if !ctx.group.is_abelian_family() {
        identities.push(identity(
            "Θ(G) = Π_{χ'} Σ χ'(g) A_g",
            detlab::circulant_theta(ctx, &xs)? == theta,
        ));
    }
    Ok(json!({
        "mode": "symbolic",
        "theta": theta.to_text(&ctx.vars),
        "terms": theta.num_terms(),
        "identities": identities,
    }))
}

fn det_numeric(ctx: &GroupContext, run: RunArgs) -> Value {
    let mut points = Vec::new();
    let mut frobenius_ok = true;
    let mut circulant_ok = true;
    for t in 0..run.trials {
        let seed = run.seed.wrapping_add(t as u64);
        let point = verify::random_assignment(ctx, seed, verify::default_bound(ctx));
        let theta = detlab::numeric_det_at(ctx, &point);
        frobenius_ok &= detlab::frobenius_theta(ctx, &point) == theta;
        if !ctx.group.is_abelian_family() {
            circulant_ok &= detlab::circulant_theta(ctx, &point).is_ok_and(|c| c == theta);
        }
        points.push(json!({
            "trial": t,
            "assignment": coefficient_json(ctx, &point),
            "theta": theta.to_string(),
        }));
    }
    let mut identities = vec![identity("Θ(G) = Π_φ det(Σ φ(g) x_g)^{deg φ}", frobenius_ok)];
    if !ctx.group.is_abelian_family() {
        identities.push(identity("Θ(G) = Π_{χ'} Σ χ'(g) A_g", circulant_ok));
    }
    json!({
        "mode": "numeric",
        "trials": run.trials,
        "points": points,
        "identities": identities,
    })
}

fn identity(name: &str, holds: bool) -> Value {
    json!({ "name": name, "status": if holds { "pass" } else { "fail" } })
}

fn coefficient_json(ctx: &GroupContext, values: &[CycloNumber]) -> Value {
    let mut m = Map::new();
    for (g, v) in values.iter().enumerate() {
        m.insert(ctx.group.name(g).to_string(), json!(v.to_string()));
    }
    Value::Object(m)
}

/// Parses `{"<element>": "<rational>", ...}`, given inline or as a file path.
fn read_coefficients(ctx: &GroupContext, spec: &str) -> Result<Vec<CycloNumber>, Failure> {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        fs::read_to_string(spec).map_err(|e| Failure::Domain(format!("{spec}: {e}")))?
    };
    let parsed: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::Domain(format!("coefficients are not valid JSON: {e}")))?;
    let Value::Object(map) = parsed else {
        return Err(Failure::Domain(
            "coefficients must be a JSON object of element name to rational string".into(),
        ));
    };
    let mut point = vec![ctx.field.zero(); ctx.order()];
    for (name, value) in map {
        let g = ctx.group.index_by_name(&name)?;
        let text = match &value {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() => n.to_string(),
            other => {
                return Err(Failure::Domain(format!(
                    "coefficient of {name} must be a rational string, got {other}"
                )))
            }
        };
        point[g] = ctx.field.rational(parse_rational(&text)?);
    }
    Ok(point)
}
