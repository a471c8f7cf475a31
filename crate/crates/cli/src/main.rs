//! `paley`: command-line front end for paley-core.

mod report;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paley_core::bounds::{
    best_bounds, prop41_certify, remark32_certificate, thm11_certificate, thm13_certificate, thm14_certify,
    trivial_certificate, Certificate,
};
use paley_core::directions::{cor15_check, cor23_check, cor24_check, direction_set, thm16_lower_bound, PointSet};
use paley_core::families::{counterexample_ex45, counterexample_ex46, family_ex42, family_ex43, family_ex44, Ex44Outcome, FamilyInstance};
use paley_core::field::{FieldConfig, DEFAULT_TABLE_THRESHOLD};
use paley_core::graph::{build_cyclotomic_graph, build_paley_graph, enumerate_max_cliques, is_clique, max_clique, Graph};
use paley_core::suites::{run_suite, Suite, SuiteConfig};
use paley_core::{Error, Field, FieldElement};
use serde_json::{json, Value};

use report::{Report, Status, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "paley", version, about = "Clique numbers of generalized Paley graphs and direction sets in AG(2,q)")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Seed for randomized verification suites.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads for sharded sweeps.
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,
    /// Largest field order that gets log/exp tables.
    #[arg(long, env = "PALEY_TABLE_LIMIT", default_value_t = DEFAULT_TABLE_THRESHOLD, global = true)]
    table_threshold: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Construct GF(p^e) and print its modulus and primitive root.
    Field { p: u64, e: u32 },
    /// Describe GP(q, d) or a cyclotomic graph.
    Graph {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Exact clique number, or all maximum cliques.
    Clique {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        enumerate: bool,
        /// Vertices every enumerated clique must contain, e.g. 0,1.
        #[arg(long, value_delimiter = ',', requires = "enumerate")]
        contains: Vec<u64>,
        #[arg(long, default_value_t = 60.0)]
        time_limit: f64,
    },
    /// Clique-number bound certificates.
    Bound {
        p: u64,
        e: u32,
        d: u64,
        #[command(flatten)]
        which: BoundChoice,
    },
    /// Direction set of A × B.
    Directions {
        p: u64,
        e: u32,
        /// x-coordinates: explicit list (0,1,4), subfield:m or range:k.
        #[arg(long = "A")]
        a: String,
        /// y-coordinates, same syntax as --A.
        #[arg(long = "B")]
        b: String,
        /// Also evaluate the difference-set corollaries on A.
        #[arg(long)]
        corollaries: bool,
    },
    /// Explicit families and counterexamples.
    Family {
        #[command(subcommand)]
        family: FamilyCommand,
    },
    /// Run an invariant suite: field, arith, graph, directions, redei, bounds, families or all.
    Verify {
        suite: String,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Debug, Args)]
struct GraphArgs {
    p: u64,
    e: u32,
    d: u64,
    /// Cyclotomic index set I ⊆ Z/dZ; defaults to {0}.
    #[arg(long, value_delimiter = ',')]
    index_set: Vec<u64>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct BoundChoice {
    #[arg(long)]
    all: bool,
    #[arg(long)]
    trivial: bool,
    #[arg(long)]
    thm11: bool,
    #[arg(long)]
    thm13: bool,
    /// Needs e = 3.
    #[arg(long)]
    thm14: bool,
    /// Subfield order |K|.
    #[arg(long, value_name = "K")]
    prop41: Option<u64>,
    #[arg(long, value_name = "I", value_delimiter = ',', num_args = 1..)]
    remark32: Option<Vec<u64>>,
}

#[derive(Debug, Subcommand)]
enum FamilyCommand {
    /// q = p^(3m), K = F_(p^m), d = (p^(2m) + p^m + 1)/3, p ≡ 1 mod 3.
    Ex42 { p: u64, m: u32 },
    /// q = p^(st), K = F_(p^s) for coprime s > t.
    Ex43 { p: u64, s: u32, t: u32 },
    /// p = 2x^2 + x + 1, d = 4x^2 + 3, q = p^3.
    Ex44 { x: u64 },
    /// q = p^4 with d = 2(p^2+1) and d = p^2+1.
    Ex45 {
        p: u64,
        /// Confirm both clique numbers by exact search.
        #[arg(long)]
        search: bool,
    },
    /// q = 5^6, d = 3, K = F_25.
    Ex46,
}

struct Ctx {
    config: FieldConfig,
    seed: u64,
    workers: usize,
}

impl Ctx {
    fn field(&self, p: u64, e: u32) -> Result<Arc<Field>, Error> {
        Ok(Arc::new(Field::with_config(p, e, self.config)?))
    }

    fn graph(&self, args: &GraphArgs) -> Result<Graph, Error> {
        let field = self.field(args.p, args.e)?;
        if args.index_set.is_empty() {
            build_paley_graph(field, args.d)
        } else {
            build_cyclotomic_graph(field, args.d, &args.index_set)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        config: FieldConfig { table_threshold: cli.table_threshold, ..FieldConfig::default() },
        seed: cli.seed,
        workers: cli.workers,
    };
    match dispatch(&ctx, &cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            ExitCode::from(report.status as u8)
        }
        Err(CliError::Core(err)) => {
            eprintln!("error: {err}");
            let status = if err == Error::Timeout { Status::Timeout } else { Status::Inapplicable };
            ExitCode::from(status as u8)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(Status::Inapplicable as u8)
        }
    }
}

enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn elements(vs: &[u64], q: u64) -> Result<Vec<FieldElement>, CliError> {
    vs.iter()
        .map(|&v| {
            if v < q {
                Ok(FieldElement::new(v as u32))
            } else {
                Err(CliError::Core(Error::VertexOutOfRange(v)))
            }
        })
        .collect()
}

/// `subfield:m`, `range:k` or a comma-separated list of element encodings.
fn parse_set(spec: &str, field: &Field) -> Result<Vec<FieldElement>, CliError> {
    let q = field.q();
    let bad = |what: &str| CliError::Usage(format!("malformed set {spec:?}: {what}"));
    let set = if let Some(m) = spec.strip_prefix("subfield:") {
        let m: u32 = m.trim().parse().map_err(|_| bad("expected subfield:<degree>"))?;
        field.subfield_elements(m)?
    } else if let Some(k) = spec.strip_prefix("range:") {
        let k: u64 = k.trim().parse().map_err(|_| bad("expected range:<size>"))?;
        if k > q {
            return Err(bad("range exceeds the field"));
        }
        (0..k).map(|v| FieldElement::new(v as u32)).collect()
    } else {
        let vs: Vec<u64> = spec
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad("expected comma-separated integers"))?;
        elements(&vs, q)?
    };
    let mut set = set;
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(bad("empty set"));
    }
    Ok(set)
}

fn dispatch(ctx: &Ctx, command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Field { p, e } => {
            let f = ctx.field(*p, *e)?;
            let mut v = to_value(&f.describe());
            v["tables"] = json!(f.has_tables());
            Ok(Report::new("field", v))
        }
        Command::Graph { graph } => {
            let g = ctx.graph(graph)?;
            let mut v = to_value(&g.describe());
            v["scaling_invariant"] = json!(g.is_scaling_invariant());
            v["connection_set"] = to_value(&g.connection_set());
            Ok(Report::new("graph", v))
        }
        Command::Clique { graph, enumerate, contains, time_limit } => clique(ctx, graph, *enumerate, contains, *time_limit),
        Command::Bound { p, e, d, which } => bound(ctx, *p, *e, *d, which),
        Command::Directions { p, e, a, b, corollaries } => directions(ctx, *p, *e, a, b, *corollaries),
        Command::Family { family } => family_cmd(family),
        Command::Verify { suite, q, exhaustive } => {
            let suite: Suite = suite.parse()?;
            let config = SuiteConfig { seed: ctx.seed, exhaustive: *exhaustive, q: *q, workers: ctx.workers };
            let r = run_suite(suite, &config)?;
            let mut table = Table::new(&["suite", "check", "cases", "violations", "passed", "detail"]);
            for c in &r.checks {
                table.row(vec![
                    c.suite.into(),
                    c.name.into(),
                    c.cases.to_string(),
                    c.violations.to_string(),
                    c.passed.to_string(),
                    c.detail.clone(),
                ]);
            }
            let status = if r.passed { Status::Ok } else { Status::Violation };
            Ok(Report::new("verify", to_value(&r)).with_table(table).with_status(status))
        }
    }
}

fn clique(ctx: &Ctx, args: &GraphArgs, enumerate: bool, contains: &[u64], time_limit: f64) -> Result<Report, CliError> {
    if !(time_limit >= 0.0 && time_limit.is_finite()) {
        return Err(CliError::Usage(format!("invalid time limit {time_limit}")));
    }
    let g = ctx.graph(args)?;
    if enumerate {
        let required = elements(contains, g.q())?;
        let cliques = enumerate_max_cliques(&g, &required)?;
        let ok = cliques.iter().all(|c| is_clique(&g, c) && required.iter().all(|v| c.contains(v)));
        let v = json!({
            "graph": g.describe(),
            "contains": contains,
            "omega": cliques.first().map(|c| c.len()),
            "count": cliques.len(),
            "cliques": cliques,
        });
        return Ok(Report::new("clique", v).with_status(if ok { Status::Ok } else { Status::Violation }));
    }
    let res = max_clique(&g, Some(Duration::from_secs_f64(time_limit)));
    let status = if !is_clique(&g, &res.witness) {
        Status::Violation
    } else if !res.optimal {
        Status::Timeout
    } else {
        Status::Ok
    };
    let v = json!({ "graph": g.describe(), "result": res });
    Ok(Report::new("clique", v).with_status(status))
}

fn certificate_table(certs: &[&Certificate]) -> Table {
    let mut t = Table::new(&["bound", "kind", "value", "applicable", "informative", "reason"]);
    for c in certs {
        t.row(vec![
            c.bound.clone(),
            to_value(&c.kind).as_str().unwrap_or_default().into(),
            c.value.to_string(),
            c.applicable.to_string(),
            c.informative.to_string(),
            c.reason.clone(),
        ]);
    }
    t
}

fn bound(ctx: &Ctx, p: u64, e: u32, d: u64, which: &BoundChoice) -> Result<Report, CliError> {
    let q = ctx.field(p, e)?.q();
    let single = |cert: Certificate| {
        let status = if cert.applicable { Status::Ok } else { Status::Inapplicable };
        let table = certificate_table(&[&cert]);
        Report::new("bound", to_value(&cert)).with_table(table).with_status(status)
    };
    Ok(if which.trivial {
        single(trivial_certificate(q, d)?)
    } else if which.thm11 {
        single(thm11_certificate(q, d)?)
    } else if which.thm13 {
        single(thm13_certificate(q, d)?)
    } else if which.thm14 {
        if e != 3 {
            return Err(CliError::Usage("--thm14 needs e = 3".into()));
        }
        single(thm14_certify(p, d)?)
    } else if let Some(k) = which.prop41 {
        single(prop41_certify(q, k, d)?)
    } else if let Some(index) = &which.remark32 {
        single(remark32_certificate(q, d, index)?)
    } else {
        let bundle = best_bounds(q, d)?;
        let status = if bundle.best_lower <= bundle.best_upper { Status::Ok } else { Status::Violation };
        let table = certificate_table(&bundle.certificates.iter().collect::<Vec<_>>());
        Report::new("bound", to_value(&bundle)).with_table(table).with_status(status)
    })
}

fn directions(ctx: &Ctx, p: u64, e: u32, a: &str, b: &str, corollaries: bool) -> Result<Report, CliError> {
    let field = ctx.field(p, e)?;
    let (a, b) = (parse_set(a, &field)?, parse_set(b, &field)?);
    let (m, n, q) = (a.len() as u64, b.len() as u64, field.q());
    let dirs = direction_set(&field, &PointSet::cartesian(&a, &b))?;
    let lower = if m >= 2 && n >= 2 && m * n <= q { Some(thm16_lower_bound(m, n, q, p)?) } else { None };
    let size = dirs.len() as i64;
    let mut status = if lower.is_some_and(|lb| size < lb) { Status::Violation } else { Status::Ok };
    let mut v = json!({
        "q": q,
        "m": m,
        "n": n,
        "size": size,
        "bound": lower,
        "sharp": lower.map(|lb| lb == size),
        "directions": dirs,
    });
    if corollaries {
        let mut reports = vec![cor23_check(&field, &a)];
        if e % 2 == 1 {
            reports.push(cor15_check(&field, &a)?);
        }
        for k in (1..e).filter(|k| e % k == 0) {
            reports.push(cor24_check(&field, k, &a)?);
        }
        if reports.iter().any(|r| !r.consistent()) {
            status = Status::Violation;
        }
        v["corollaries"] = to_value(&reports);
    }
    Ok(Report::new("directions", v).with_status(status))
}

fn instance_report(inst: FamilyInstance) -> Result<Report, CliError> {
    let ok = inst.revalidate()?;
    let table = certificate_table(&[&inst.certificate]);
    Ok(Report::new("family", to_value(&inst)).with_table(table).with_status(if ok { Status::Ok } else { Status::Violation }))
}

fn family_cmd(family: &FamilyCommand) -> Result<Report, CliError> {
    match family {
        FamilyCommand::Ex42 { p, m } => instance_report(family_ex42(*p, *m)?),
        FamilyCommand::Ex43 { p, s, t } => instance_report(family_ex43(*p, *s, *t)?),
        FamilyCommand::Ex44 { x } => match family_ex44(*x)? {
            Ex44Outcome::Instance(inst) => instance_report(inst),
            rejected => Ok(Report::new("family", to_value(&rejected)).with_status(Status::Inapplicable)),
        },
        FamilyCommand::Ex45 { p, search } => {
            let r = counterexample_ex45(*p, *search)?;
            let status = if r.consistent() { Status::Ok } else { Status::Violation };
            Ok(Report::new("family", to_value(&r)).with_status(status))
        }
        FamilyCommand::Ex46 => {
            let r = counterexample_ex46()?;
            let status = if r.consistent() { Status::Ok } else { Status::Violation };
            Ok(Report::new("family", to_value(&r)).with_status(status))
        }
    }
}
