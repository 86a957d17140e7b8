//! `balrig`: balanced shifting and bipartite rigidity from the command line.
//!
//! Every command prints one report on stdout. Errors go to stderr as a JSON
//! object `{"error": {"code", "kind", "message"}}` and set the exit code:
//! 2 usage, 3 input, 4 size cap, 5 trial disagreement. `selftest` exits
//! with 1 when a criterion fails.

mod report;

use std::process::ExitCode;

use balrig_core::acceptance::{self, Outcome};
use balrig_core::combinat::{BipartiteGraph, VertexOrder};
use balrig_core::exactla::{PrimeField, TrialPolicy, DEFAULT_PRIME};
use balrig_core::families::{self, FamilySpec, Generated};
use balrig_core::rigidity::{analyze, heawood_check, laman_check, rows_independent_m, stress_space, verdicts_from_shifted};
use balrig_core::shifting::{is_shifted_complex, is_shifted_graph, shift_complex, shift_graph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use report::{CliError, Input};

#[derive(Parser, Debug)]
#[command(name = "balrig", version, about = "Balanced shifting and bipartite rigidity over a large prime field")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Field modulus for the random specializations.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Independent draws that must agree before a verdict is reported.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    #[arg(long, global = true, env = "BALRIG_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

/// Where the input comes from. `--graph` and `--complex` take a path, `-`
/// for stdin, or inline JSON; `--family` takes a generator spec such as
/// `"cube d=3"`.
#[derive(Args, Debug)]
struct Source {
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    complex: Option<String>,
    #[arg(long)]
    family: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Balanced shifting of a graph or complex.
    Shift {
        #[command(flatten)]
        source: Source,
        /// Leading A-vertices (graphs) of the default order.
        #[arg(short, default_value_t = 1)]
        k: usize,
        /// Leading B-vertices (graphs) or leading vertices per color (complexes).
        #[arg(short, default_value_t = 1)]
        l: usize,
        /// Explicit order: `1 1' 2 2'` for graphs, `1:1 2:1 1:2` for complexes.
        #[arg(long)]
        order: Option<String>,
    },
    /// Rank of the (k,l)-rigidity matrix and the verdicts it implies.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        /// Cross-check against the shifted graph under this admissible order.
        #[arg(long)]
        order: Option<String>,
        /// Also print a basis of self-stresses.
        #[arg(long)]
        stresses: bool,
    },
    /// Exhaustive (k,l)-Laman count check.
    Laman {
        #[command(flatten)]
        source: Source,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
    },
    /// Row independence of M(K,l), or the facet count bound with --heawood.
    Mcheck {
        #[command(flatten)]
        source: Source,
        #[arg(short, default_value_t = 2)]
        l: usize,
        #[arg(long)]
        heawood: bool,
    },
    /// Emit a graph or complex from a named family.
    Generate(GenerateArgs),
    /// Run the acceptance criteria and print a pass/fail table.
    Selftest {
        /// Run only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<usize>,
    },
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Family name; `--list` shows them all.
    #[arg(required_unless_present = "list")]
    family: Option<String>,
    #[arg(long)]
    list: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long)]
    splits: Option<usize>,
    #[arg(long)]
    ears: Option<usize>,
    #[arg(long)]
    pendants: Option<usize>,
    #[arg(long)]
    max_degree: Option<usize>,
}

impl GenerateArgs {
    fn spec(&self, seed: u64) -> FamilySpec {
        let params: Vec<(&str, usize)> = [
            ("n", self.n),
            ("m", self.m),
            ("d", self.d),
            ("t", self.t),
            ("l", self.l),
            ("size", self.size),
            ("edges", self.edges),
            ("splits", self.splits),
            ("ears", self.ears),
            ("pendants", self.pendants),
            ("max_degree", self.max_degree),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k, v)))
        .collect();
        FamilySpec::new(self.family.as_deref().unwrap_or_default(), &params, seed)
    }
}

fn policy(c: &Common) -> Result<TrialPolicy, CliError> {
    let field = PrimeField::new(c.prime).map_err(|e| CliError::usage(e.to_string()))?;
    TrialPolicy::new(c.trials, field, c.seed).map_err(|e| CliError::usage(e.to_string()))
}

fn graph_json(g: &BipartiteGraph) -> Value {
    serde_json::to_value(g.to_json()).expect("graphs serialize")
}

fn check_sides(k: usize, l: usize) -> Result<(), CliError> {
    if k == 0 || l == 0 {
        return Err(CliError::usage(format!("k and l must be at least 1, got ({k}, {l})")));
    }
    Ok(())
}

fn shift(c: &Common, source: &Source, k: usize, l: usize, order: Option<&str>) -> Result<Value, CliError> {
    let p = policy(c)?;
    let input = report::load(source.graph.as_deref(), source.complex.as_deref(), source.family.as_deref(), c.seed)?;
    let (mut out, order, meta) = match input {
        Input::Graph(g) => {
            let order = match order {
                Some(s) => VertexOrder::parse_graph(s, g.a_size(), g.b_size()).map_err(balrig_core::Error::from)?,
                None => VertexOrder::for_graph(g.a_size(), g.b_size(), k, l),
            };
            let r = shift_graph(&g, &order, &p)?;
            assert!(is_shifted_graph(&r.shifted) && r.shifted.n_edges() == g.n_edges());
            (graph_json(&r.shifted), r.order, r.meta)
        }
        Input::Complex(cx) => {
            let order = match order {
                Some(s) => VertexOrder::parse_complex(s, cx.color_sizes()).map_err(balrig_core::Error::from)?,
                None => VertexOrder::default_admissible(cx.color_sizes(), &vec![l; cx.n_colors()]),
            };
            let r = shift_complex(&cx, &order, &p)?;
            assert!(is_shifted_complex(&r.shifted) && r.shifted.f_vector() == cx.f_vector());
            (serde_json::to_value(r.shifted.to_json()).expect("complexes serialize"), r.order, r.meta)
        }
    };
    let mut metadata = serde_json::to_value(&meta).expect("metadata serializes");
    metadata["order"] = json!(order.to_string());
    out["metadata"] = metadata;
    Ok(out)
}

fn analyze_cmd(
    c: &Common,
    source: &Source,
    k: usize,
    l: usize,
    order: Option<&str>,
    stresses: bool,
) -> Result<Value, CliError> {
    check_sides(k, l)?;
    let p = policy(c)?;
    let g = report::load_graph(source.graph.as_deref(), source.family.as_deref(), c.seed)?;
    let r = analyze(&g, k, l, &p)?;
    let mut out = serde_json::to_value(&r).expect("reports serialize");
    if let Some(s) = order {
        let order = VertexOrder::parse_graph(s, g.a_size(), g.b_size()).map_err(balrig_core::Error::from)?;
        if !order.is_admissible(&[k.min(g.a_size()), l.min(g.b_size())]) {
            return Err(CliError::input(format!("order {order} is not ({k},{l})-admissible")));
        }
        let shifted = shift_graph(&g, &order, &p)?.shifted;
        let (rigid, free) = verdicts_from_shifted(&shifted, k, l);
        out["shift_check"] = json!({
            "order": order.to_string(),
            "is_rigid": rigid,
            "is_stress_free": free,
            "agrees": rigid == r.is_rigid && free == r.is_stress_free,
        });
    }
    if stresses {
        let s = stress_space(&g, k, l, &p)?;
        let edges: Vec<[usize; 2]> = s.edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect();
        out["stresses"] = json!({ "edges": edges, "basis": s.basis, "theta_seed": s.theta_seed });
    }
    Ok(out)
}

/// Generated objects print as JSON, or in their compact text form as a table.
fn generate_cmd(c: &Common, args: &GenerateArgs) -> Result<String, CliError> {
    if args.list {
        let list: Vec<Value> = families::FAMILIES.iter().map(|&(n, p)| json!({ "family": n, "params": p })).collect();
        return Ok(match c.format {
            Format::Json => render(&Value::Array(list), Format::Json),
            Format::Table => families::FAMILIES.iter().map(|(n, p)| format!("{n:<24}{p}\n")).collect(),
        });
    }
    let (json, text) = match families::generate(&args.spec(c.seed))? {
        Generated::Graph(g) => (graph_json(&g), g.to_string()),
        Generated::Complex(k) => (serde_json::to_value(k.to_json()).expect("complexes serialize"), k.to_string()),
    };
    Ok(match c.format {
        Format::Json => render(&json, Format::Json),
        Format::Table => format!("{text}\n"),
    })
}

fn selftest(c: &Common, only: &[usize]) -> Result<(Vec<Outcome>, bool), CliError> {
    // A composite modulus is let through here on purpose: the arithmetic
    // check below is what should reject it.
    let field = PrimeField::new(c.prime).unwrap_or_else(|_| PrimeField::new_unchecked(c.prime));
    if c.prime < 2 || c.prime >= 1 << 63 {
        return Err(CliError::usage(format!("prime {} is outside 2..2^63", c.prime)));
    }
    let arith = acceptance::field_self_check(&field, c.seed);
    if !arith.passed {
        return Ok((vec![arith], false));
    }
    let p = TrialPolicy::new(c.trials, field, c.seed).map_err(|e| CliError::usage(e.to_string()))?;
    let mut outcomes = vec![arith];
    if only.is_empty() {
        outcomes.extend(acceptance::run_all(&p));
    } else {
        for &id in only {
            outcomes.push(acceptance::run_one(id, &p).ok_or_else(|| CliError::usage(format!("no criterion {id}")))?);
        }
    }
    let ok = outcomes.iter().all(|o| o.passed);
    Ok((outcomes, ok))
}

fn selftest_table(outcomes: &[Outcome]) -> String {
    let mut s = String::new();
    for o in outcomes {
        s.push_str(&format!("{o}\n"));
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    s.push_str(&format!("{passed}/{} passed\n", outcomes.len()));
    s
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => format!("{v}\n"),
        Format::Table => report::table(v),
    }
}

fn run(cli: &Cli) -> Result<(String, ExitCode), CliError> {
    let c = &cli.common;
    let value = match &cli.command {
        Command::Shift { source, k, l, order } => shift(c, source, *k, *l, order.as_deref())?,
        Command::Analyze { source, k, l, order, stresses } => {
            analyze_cmd(c, source, *k, *l, order.as_deref(), *stresses)?
        }
        Command::Laman { source, k, l } => {
            check_sides(*k, *l)?;
            let g = report::load_graph(source.graph.as_deref(), source.family.as_deref(), c.seed)?;
            serde_json::to_value(laman_check(&g, *k, *l)?).expect("reports serialize")
        }
        Command::Mcheck { source, l, heawood } => {
            if source.graph.is_some() {
                return Err(CliError::usage("mcheck takes --complex or --family"));
            }
            let p = policy(c)?;
            let k = report::load_complex(source.complex.as_deref(), source.family.as_deref(), c.seed)?;
            if *heawood {
                serde_json::to_value(heawood_check(&k, &p)?).expect("reports serialize")
            } else {
                serde_json::to_value(rows_independent_m(&k, *l, &p)?).expect("reports serialize")
            }
        }
        Command::Generate(args) => return Ok((generate_cmd(c, args)?, ExitCode::SUCCESS)),
        Command::Selftest { criteria } => {
            let (outcomes, ok) = selftest(c, criteria)?;
            let code = if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE };
            let text = match c.format {
                Format::Table => selftest_table(&outcomes),
                Format::Json => {
                    let passed = outcomes.iter().filter(|o| o.passed).count();
                    render(
                        &json!({ "seed": c.seed, "prime": c.prime, "trials": c.trials, "passed": passed,
                                 "failed": outcomes.len() - passed, "criteria": outcomes }),
                        Format::Json,
                    )
                }
            };
            return Ok((text, code));
        }
    };
    Ok((render(&value, c.format), ExitCode::SUCCESS))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // Keep clap's explanation, drop its usage banner.
            let msg = e.render().to_string();
            let head: Vec<&str> = msg.lines().take_while(|l| !l.trim().is_empty()).map(str::trim).collect();
            eprintln!("{}", CliError::usage(head.join(" ").trim_start_matches("error: ")).to_json());
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.code)
        }
    }
}
