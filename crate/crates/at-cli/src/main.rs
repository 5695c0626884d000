//! Command line front end for exact Alon-Tarsi certification.
//!
//! Every invocation prints exactly one report: plain "key: value" lines, or
//! one flat JSON object under --json. All values are decimal strings and are
//! never truncated, so repeated runs on the same input are byte identical.
//! Wall clock metadata is appended only under --timings.
//!
//! Exit codes: 0 for a computed value or a true decision, 1 for a false
//! decision or an inapplicable certificate route, 2 for input errors or a
//! failed recheck, 3 when the step budget is exhausted.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use alon_tarsi::algebra::{ryser_permanent_scalar, scheim_coefficient};
use alon_tarsi::apps::{
    hypergraph_f_at, hypergraph_f_at_cyclotomic, hypergraph_polynomial,
    min_edge_unique_certificate, parity_unique_certificate, t_list_cycle_check, ParityBranch,
    QSpec, TSet, UniquePartition,
};
use alon_tarsi::budget::{Budget, DEFAULT_BUDGET};
use alon_tarsi::certify::{
    build_permanent_matrix, coefficient_via_permanent, euler_diff, graph_polynomial,
    graph_polynomial_lazy, signed_coloring_sum, signed_sum_regular, weighted_subgraph_sum,
    WeightScheme,
};
use alon_tarsi::corpus::{connected_iso_classes, connected_labeled_graphs, corpus_rng, random_f};
use alon_tarsi::error::Error;
use alon_tarsi::graph::{
    canonical_orientation, count_list_colorings, enumerate_orientations, generate_family,
    line_graph, orientation_from_mask, parse_hypergraph, parse_multigraph, Family, Hypergraph,
    MultiGraph, Orientation,
};
use alon_tarsi::scalar::ExactScalar;
use alon_tarsi::solver::{at_number, bounds_report, is_f_at, ATCertificate};

#[derive(Parser)]
#[command(
    name = "atcert",
    version,
    about = "Exact Alon-Tarsi certificates for multigraphs and hypergraphs"
)]
struct Cli {
    /// Print the report as one flat JSON object instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,

    /// Recheck the reported value or certificate by its cheap counterpart.
    #[arg(long, global = true)]
    verify: bool,

    /// Step budget for enumerations; overrides the ATCERT_BUDGET variable.
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,

    /// Append wall clock metadata to the report.
    #[arg(long, global = true)]
    timings: bool,

    #[command(subcommand)]
    command: Command,
}

/// Exactly one graph source per invocation.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Multigraph file: header "n m", then one "i j" line per edge, 1-based;
    /// '#' starts a comment.
    #[arg(long, value_name = "PATH")]
    graph: Option<PathBuf>,

    /// Built-in family: complete:N, complete_bipartite:A:B, cycle:N,
    /// cycle_power:N:K, path:N, balanced_multipartite_2:K.
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Alon-Tarsi number together with a certificate.
    At {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Decide f-choosability by the Alon-Tarsi method.
    FAt {
        #[command(flatten)]
        input: GraphInput,
        /// Comma list of list sizes, one per vertex.
        #[arg(long, value_name = "N,N,...")]
        f: String,
    },
    /// Count even and odd spanning eulerian subdigraphs of an orientation.
    Euler {
        #[command(flatten)]
        input: GraphInput,
        /// Arc reversal mask applied to the canonical orientation; bit i
        /// flips edge i of the input order.
        #[arg(long, default_value_t = 0, value_name = "BITS")]
        mask: u64,
    },
    /// Weighted subdigraph sum of an orientation under consecutive weights.
    Weighted {
        #[command(flatten)]
        input: GraphInput,
        /// Arc reversal mask applied to the canonical orientation.
        #[arg(long, default_value_t = 0, value_name = "BITS")]
        mask: u64,
    },
    /// Signed sum over colorings from prefix lists of sizes f.
    SignedSum {
        #[command(flatten)]
        input: GraphInput,
        /// Comma list of list sizes, one per vertex; needs sum (f_i - 1) = m.
        #[arg(long, value_name = "N,N,...")]
        f: String,
    },
    /// Graph polynomial coefficient at exponents f - 1 via the permanent.
    PermanentCoeff {
        #[command(flatten)]
        input: GraphInput,
        /// Comma list of list sizes, one per vertex; needs sum (f_i - 1) = m.
        #[arg(long, value_name = "N,N,...")]
        f: String,
    },
    /// Signed count of proper colorings from d colors on a line graph.
    RegularSignSum {
        #[command(flatten)]
        input: GraphInput,
        /// Color count; the graph should be the line graph of a d-regular
        /// d-edge-colorable multigraph.
        #[arg(long)]
        d: u32,
        /// Optional pre-image multigraph, a file path or a family spec, whose
        /// regularity and edge colorability are checked.
        #[arg(long, value_name = "PATH|SPEC")]
        preimage: Option<String>,
    },
    /// Certify AT(G) = k for a uniquely k-colorable graph.
    Unique {
        #[command(flatten)]
        input: GraphInput,
        /// Number of color classes of the unique coloring.
        #[arg(long)]
        k: u32,
        /// Certificate route.
        #[arg(long, value_enum)]
        route: UniqueRoute,
    },
    /// Decide f-AT of a uniform hypergraph by an exact polynomial route.
    Hyper {
        /// Hypergraph file (header "n m", then "k v1 .. vk" lines) or "fano".
        #[arg(long, value_name = "PATH|fano")]
        hypergraph: String,
        /// Certificate polynomial, one factor per line as
        /// "c_1 ... c_n | const", or "fano" for the bundled certificate.
        #[arg(
            long,
            value_name = "PATH|fano",
            conflicts_with = "k",
            required_unless_present = "k"
        )]
        qspec: Option<String>,
        /// Prime order for the cyclotomic route.
        #[arg(long, value_name = "PRIME")]
        k: Option<u32>,
        /// Comma list of list sizes, one per vertex.
        #[arg(long, value_name = "N,N,...")]
        f: String,
    },
    /// Decide T-list colorability of an even cycle.
    Tlist {
        /// Cycle length, even and at least 4.
        #[arg(long)]
        length: u32,
        /// Comma list of forbidden differences; must contain 0.
        #[arg(long, value_name = "N,N,...")]
        t: String,
    },
    /// Bracket the Alon-Tarsi number by cheap structural bounds.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run the bundled identity corpus and report one line per group.
    Selfcheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniqueRoute {
    /// Minimum edge count route: m = (k-1)n - C(k,2).
    MinEdge,
    /// Class parity route with graph augmentation.
    Parity,
}

enum CliError {
    Lib(Error),
    Input(String),
    Verify,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => e.fmt(f),
            CliError::Input(msg) => f.write_str(msg),
            CliError::Verify => f.write_str("verification failed"),
        }
    }
}

/// Ordered key-value report; insertion order is the output order.
struct Report {
    pairs: Vec<(String, String)>,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            pairs: vec![(String::from("command"), String::from(command))],
        }
    }

    fn push(&mut self, key: &str, value: impl Display) {
        self.pairs.push((key.to_string(), value.to_string()));
    }

    fn print(&self, json: bool) {
        if json {
            let mut object = serde_json::Map::with_capacity(self.pairs.len());
            for (key, value) in &self.pairs {
                object.insert(key.clone(), serde_json::Value::String(value.clone()));
            }
            let text = serde_json::to_string_pretty(&serde_json::Value::Object(object))
                .expect("a map of strings always serializes");
            println!("{text}");
        } else {
            for (key, value) in &self.pairs {
                println!("{key}: {value}");
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Report::new(command_name(&cli.command));
    let start = Instant::now();
    let outcome = resolve_budget(cli.budget).and_then(|(steps, source)| {
        let budget = Budget::new(steps);
        let result = run(&cli, &budget, &mut report);
        report.push("budget", steps);
        report.push("budget_source", source);
        result
    });
    let (code, status) = match outcome {
        Ok((code, status)) => (code, String::from(status)),
        Err(CliError::Verify) => (2, String::from("error: verify")),
        Err(error) => {
            let budget_hit = matches!(&error, CliError::Lib(e) if e.is_budget());
            report.push("error", &error);
            if budget_hit {
                (3, String::from("error: budget"))
            } else {
                (2, String::from("error: input"))
            }
        }
    };
    if cli.timings {
        report.push("elapsed_ms", start.elapsed().as_millis());
    }
    report.push("status", status);
    report.print(cli.json);
    ExitCode::from(code)
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::At { .. } => "at",
        Command::FAt { .. } => "f-at",
        Command::Euler { .. } => "euler",
        Command::Weighted { .. } => "weighted",
        Command::SignedSum { .. } => "signed-sum",
        Command::PermanentCoeff { .. } => "permanent-coeff",
        Command::RegularSignSum { .. } => "regular-sign-sum",
        Command::Unique { .. } => "unique",
        Command::Hyper { .. } => "hyper",
        Command::Tlist { .. } => "tlist",
        Command::Bounds { .. } => "bounds",
        Command::Selfcheck => "selfcheck",
    }
}

/// Flag beats the ATCERT_BUDGET variable beats the built-in default.
fn resolve_budget(flag: Option<u64>) -> Result<(u64, &'static str), CliError> {
    if let Some(steps) = flag {
        return Ok((steps, "flag"));
    }
    match std::env::var("ATCERT_BUDGET") {
        Ok(raw) => raw
            .parse::<u64>()
            .map(|steps| (steps, "env"))
            .map_err(|_| CliError::Input(format!("ATCERT_BUDGET is not a number: {raw:?}"))),
        Err(_) => Ok((DEFAULT_BUDGET, "default")),
    }
}

fn run(cli: &Cli, budget: &Budget, report: &mut Report) -> Result<(u8, &'static str), CliError> {
    match &cli.command {
        Command::At { input } => {
            let g = input.load(report)?;
            let (value, certificate) = at_number(&g, budget)?;
            report.push("at", value);
            push_certificate(report, &certificate);
            if cli.verify {
                let f = vec![value; g.n() as usize];
                push_verified(report, certificate.verify(&g, &f, budget)?)?;
            }
            Ok((0, "ok"))
        }
        Command::FAt { input, f } => {
            let g = input.load(report)?;
            let f = parse_u32_list(f, "f")?;
            report.push("f", csv(&f));
            match is_f_at(&g, &f, budget)? {
                Some(certificate) => {
                    report.push("f_at", true);
                    push_certificate(report, &certificate);
                    if cli.verify {
                        push_verified(report, certificate.verify(&g, &f, budget)?)?;
                    }
                    Ok((0, "ok"))
                }
                None => {
                    report.push("f_at", false);
                    Ok((1, "ok"))
                }
            }
        }
        Command::Euler { input, mask } => {
            let g = input.load(report)?;
            let d = orientation_for(&g, *mask)?;
            push_orientation(report, *mask, &d);
            let count = euler_diff(&d, budget)?;
            report.push("euler_even", count.even);
            report.push("euler_odd", count.odd);
            report.push("euler_diff", count.diff());
            if cli.verify {
                // Cross route: the difference equals the graph polynomial
                // coefficient at the out-degrees up to the orientation sign.
                let f: Vec<u32> = d.out_degrees().iter().map(|&di| di + 1).collect();
                let coeff = coefficient_via_permanent(&g, &f, budget)?;
                let signed = if d.r() % 2 == 1 { -&coeff } else { coeff };
                push_verified(report, ExactScalar::from_i64(count.diff()) == signed)?;
            }
            Ok((0, "ok"))
        }
        Command::Weighted { input, mask } => {
            let g = input.load(report)?;
            let d = orientation_for(&g, *mask)?;
            push_orientation(report, *mask, &d);
            let degrees = d.out_degrees();
            let value = weighted_subgraph_sum(&d, &WeightScheme::consecutive(&degrees), budget)?;
            report.push("weights", "consecutive");
            report.push("value", &value);
            if cli.verify {
                let count = euler_diff(&d, budget)?;
                let expected = &edge_sign(g.m())
                    * &(&ExactScalar::from_i64(count.diff()) * &factorial_product(&degrees));
                push_verified(report, value == expected)?;
            }
            Ok((0, "ok"))
        }
        Command::SignedSum { input, f } => {
            let g = input.load(report)?;
            let f = parse_u32_list(f, "f")?;
            report.push("f", csv(&f));
            let sum = signed_coloring_sum(&g, &f, budget)?;
            report.push("sum", &sum);
            if cli.verify {
                let s: Vec<u32> = f.iter().map(|&fi| fi - 1).collect();
                let coeff = coefficient_via_permanent(&g, &f, budget)?;
                let expected = &edge_sign(g.m()) * &(&coeff * &factorial_product(&s));
                push_verified(report, sum == expected)?;
            }
            Ok((0, "ok"))
        }
        Command::PermanentCoeff { input, f } => {
            let g = input.load(report)?;
            let f = parse_u32_list(f, "f")?;
            report.push("f", csv(&f));
            let coefficient = coefficient_via_permanent(&g, &f, budget)?;
            let s: Vec<u32> = f.iter().map(|&fi| fi - 1).collect();
            report.push("exponents", csv(&s));
            report.push("coefficient", &coefficient);
            if cli.verify {
                let lazy = graph_polynomial_lazy(&g);
                push_verified(report, scheim_coefficient(&lazy, &s, budget)? == coefficient)?;
            }
            Ok((0, "ok"))
        }
        Command::RegularSignSum { input, d, preimage } => {
            let g = input.load(report)?;
            report.push("d", *d);
            let pre = match preimage {
                Some(spec) => {
                    report.push("preimage", spec);
                    Some(load_graph_or_family(spec)?)
                }
                None => None,
            };
            let out = signed_sum_regular(&g, *d, pre.as_ref(), budget)?;
            report.push("sum", &out.sum);
            report.push("colorings", out.colorings);
            let nonzero = !out.sum.is_zero();
            report.push("nonzero", nonzero);
            if cli.verify {
                let lists: Vec<Vec<u32>> = vec![(0..*d).collect(); g.n() as usize];
                let count = count_list_colorings(&g, &lists, budget)?;
                push_verified(report, count == out.colorings)?;
            }
            Ok(if nonzero { (0, "ok") } else { (1, "ok") })
        }
        Command::Unique { input, k, route } => {
            let g = input.load(report)?;
            report.push("k", *k);
            match route {
                UniqueRoute::MinEdge => run_unique_min_edge(cli, budget, report, &g, *k),
                UniqueRoute::Parity => run_unique_parity(cli, budget, report, &g, *k),
            }
        }
        Command::Hyper {
            hypergraph,
            qspec,
            k,
            f,
        } => run_hyper(cli, budget, report, hypergraph, qspec.as_deref(), *k, f),
        Command::Tlist { length, t } => {
            let values = parse_u32_list(t, "t")?;
            report.push("length", *length);
            report.push("t", csv(&values));
            let t = TSet::new(values)?;
            let out = t_list_cycle_check(*length, &t, budget)?;
            report.push("list_size", out.list_size);
            report.push("sum", &out.sum);
            report.push("nz_count", out.nz.len());
            report.push("nz_is_constant", out.nz_is_constant);
            report.push("choosable", out.choosable);
            if cli.verify {
                let again = t_list_cycle_check(*length, &t, budget)?;
                push_verified(report, again.sum == out.sum && again.nz == out.nz)?;
            }
            Ok(if out.choosable { (0, "ok") } else { (1, "ok") })
        }
        Command::Bounds { input } => {
            let g = input.load(report)?;
            let out = bounds_report(&g, budget)?;
            report.push("components", out.components.len());
            for (index, c) in out.components.iter().enumerate() {
                report.push(
                    &format!("component_{}", index + 1),
                    format!(
                        "vertices={} n={} m={} chromatic={} density_lower={} lower={} upper={}",
                        csv(&c.vertices),
                        c.n,
                        c.m,
                        c.chromatic,
                        c.density_lower,
                        c.lower,
                        c.upper
                    ),
                );
            }
            report.push("lower", out.lower);
            report.push("upper", out.upper);
            if cli.verify {
                push_verified(report, out.lower <= out.upper)?;
            }
            Ok((0, "ok"))
        }
        Command::Selfcheck => selfcheck(budget, report),
    }
}

impl GraphInput {
    fn load(&self, report: &mut Report) -> Result<MultiGraph, CliError> {
        let g = if let Some(spec) = &self.family {
            report.push("family", spec);
            family_graph(spec)?
        } else {
            let path = self.graph.as_ref().expect("clap enforces the input group");
            report.push("graph", path.display());
            parse_multigraph(&read_input(path)?)?
        };
        report.push("n", g.n());
        report.push("m", g.m());
        Ok(g)
    }
}

fn family_graph(spec: &str) -> Result<MultiGraph, CliError> {
    let family = Family::parse(spec)?;
    match generate_family(&family)?.as_graph() {
        Some(g) => Ok(g.clone()),
        None => Err(CliError::Input(format!(
            "family {spec} is a hypergraph; use the hyper subcommand"
        ))),
    }
}

/// A pre-image argument is a family spec when it parses as one, else a path.
fn load_graph_or_family(spec: &str) -> Result<MultiGraph, CliError> {
    if Family::parse(spec).is_ok() {
        family_graph(spec)
    } else {
        Ok(parse_multigraph(&read_input(Path::new(spec))?)?)
    }
}

fn read_input(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn parse_u32_list(raw: &str, what: &str) -> Result<Vec<u32>, CliError> {
    raw.split(',')
        .map(|token| {
            let token = token.trim();
            token
                .parse::<u32>()
                .map_err(|_| CliError::Input(format!("bad {what} entry {token:?}")))
        })
        .collect()
}

fn orientation_for(g: &MultiGraph, mask: u64) -> Result<Orientation, CliError> {
    let m = g.m();
    if m < 64 && mask >= (1u64 << m) {
        return Err(CliError::Input(format!(
            "mask {mask} has bits beyond the {m} edges"
        )));
    }
    Ok(orientation_from_mask(g, mask))
}

fn push_orientation(report: &mut Report, mask: u64, d: &Orientation) {
    report.push("mask", mask);
    report.push("arcs", arcs_str(d.arcs()));
    report.push("out_degrees", csv(d.out_degrees()));
    report.push("decreasing_arcs", d.r());
}

fn push_certificate(report: &mut Report, certificate: &ATCertificate) {
    match certificate {
        ATCertificate::Monomial {
            exponents,
            coefficient,
        } => {
            report.push("certificate", "monomial");
            report.push("exponents", csv(exponents));
            report.push("coefficient", coefficient);
        }
        ATCertificate::Orientation {
            reversal_mask,
            arcs,
            out_degrees,
            euler,
        } => {
            report.push("certificate", "orientation");
            report.push("mask", reversal_mask);
            report.push("arcs", arcs_str(arcs));
            report.push("out_degrees", csv(out_degrees));
            report.push("euler_even", euler.even);
            report.push("euler_odd", euler.odd);
            report.push("euler_diff", euler.diff());
        }
        ATCertificate::Structural {
            at_most,
            description,
        } => {
            report.push("certificate", "structural");
            report.push("at_most", at_most);
            report.push("description", description);
        }
    }
}

fn push_verified(report: &mut Report, ok: bool) -> Result<(), CliError> {
    if ok {
        report.push("verify", "pass");
        Ok(())
    } else {
        report.push("verify", "fail");
        Err(CliError::Verify)
    }
}

fn run_unique_min_edge(
    cli: &Cli,
    budget: &Budget,
    report: &mut Report,
    g: &MultiGraph,
    k: u32,
) -> Result<(u8, &'static str), CliError> {
    report.push("route", "min-edge");
    let out = match min_edge_unique_certificate(g, k, budget) {
        Ok(out) => out,
        Err(e @ Error::UniquenessNotEstablished { .. }) => {
            report.push("applicable", false);
            report.push("reason", e);
            return Ok((1, "inapplicable"));
        }
        Err(e) => return Err(e.into()),
    };
    report.push("required_m", out.required_m);
    report.push("applicable", out.applicable);
    report.push("partition", classes_str(&out.partition));
    if let Some(lists) = &out.lists {
        report.push("lists", lists_str(lists));
    }
    if let Some(colorings) = out.list_colorings {
        report.push("list_colorings", colorings);
    }
    if let Some(at) = out.at {
        report.push("at", at);
    }
    if cli.verify {
        match (&out.lists, out.list_colorings) {
            (Some(lists), Some(expected)) => {
                let count = count_list_colorings(g, lists, budget)?;
                push_verified(report, count == expected && expected == 1)?;
            }
            _ => report.push("verify", "skipped"),
        }
    }
    Ok(if out.at == Some(k) {
        (0, "ok")
    } else {
        (1, "inapplicable")
    })
}

fn run_unique_parity(
    cli: &Cli,
    budget: &Budget,
    report: &mut Report,
    g: &MultiGraph,
    k: u32,
) -> Result<(u8, &'static str), CliError> {
    report.push("route", "parity");
    let out = match parity_unique_certificate(g, k, budget) {
        Ok(out) => out,
        Err(e @ Error::UniquenessNotEstablished { .. }) => {
            report.push("applicable", false);
            report.push("reason", e);
            return Ok((1, "inapplicable"));
        }
        Err(e) => return Err(e.into()),
    };
    report.push("r_odd", out.r_odd);
    report.push("r_even", out.r_even);
    report.push("p_odd", out.p_odd);
    report.push("p_even", out.p_even);
    report.push("bound_odd", out.bound_odd);
    report.push("bound_even", out.bound_even);
    report.push("holds_odd", out.holds_odd);
    report.push("holds_even", out.holds_even);
    report.push("applicable", out.applicable);
    report.push("partition", classes_str(&out.partition));
    if let Some(branch) = out.branch {
        report.push("branch", branch_name(branch));
    }
    if let Some(aug) = &out.augmented {
        report.push("patch_edges", edges_str(&aug.patch_edges));
        report.push("slack_edges", aug.slack_edges);
        report.push("augmented_m", aug.g_second.m());
        report.push("lists", lists_str(&aug.lists));
        report.push("colorings", aug.colorings);
        report.push("signed_sum", &aug.signed_sum);
        report.push("sign_preserving", aug.sign_preserving);
    }
    if let Some(at) = out.at {
        report.push("at", at);
    }
    if cli.verify {
        match &out.augmented {
            Some(aug) => {
                let f: Vec<u32> = aug.lists.iter().map(|l| l.len() as u32).collect();
                let sum = signed_coloring_sum(&aug.g_second, &f, budget)?;
                push_verified(report, sum == aug.signed_sum)?;
            }
            None => report.push("verify", "skipped"),
        }
    }
    Ok(if out.at == Some(k) {
        (0, "ok")
    } else {
        (1, "inapplicable")
    })
}

fn run_hyper(
    cli: &Cli,
    budget: &Budget,
    report: &mut Report,
    hypergraph: &str,
    qspec: Option<&str>,
    k: Option<u32>,
    f: &str,
) -> Result<(u8, &'static str), CliError> {
    let h = load_hypergraph(hypergraph, report)?;
    let f = parse_u32_list(f, "f")?;
    report.push("f", csv(&f));
    match (qspec, k) {
        (Some(spec), None) => {
            report.push("route", "qspec");
            let q = load_qspec(spec, report)?;
            let out = hypergraph_f_at(&h, &q, &f, budget)?;
            report.push("f_at", out.f_at);
            report.push("sum", &out.sum);
            report.push("nz_count", out.nz.len());
            report.push("nz", points_str(&out.nz));
            if cli.verify {
                let ok = out.nz.iter().all(|(point, value)| {
                    let ints: Vec<i64> = point.iter().map(|&x| i64::from(x)).collect();
                    let eval = q
                        .factors()
                        .iter()
                        .fold(ExactScalar::one(), |acc, form| &acc * &form.eval_i64(&ints));
                    eval == *value
                });
                push_verified(report, ok)?;
            }
            Ok(if out.f_at { (0, "ok") } else { (1, "ok") })
        }
        (None, Some(order)) => {
            report.push("route", "cyclotomic");
            report.push("order", order);
            let p = hypergraph_polynomial(&h, order, budget)?;
            let out = hypergraph_f_at_cyclotomic(&h, order, &p, &f, budget)?;
            report.push("f_at", out.f_at);
            report.push("sum", &out.sum);
            report.push("nz_count", out.nz.len());
            report.push("nz", points_str(&out.nz));
            if cli.verify {
                let ok = out.nz.iter().all(|(point, value)| {
                    let ints: Vec<i64> = point.iter().map(|&x| i64::from(x)).collect();
                    p.eval_i64(&ints) == *value
                });
                push_verified(report, ok)?;
            }
            Ok(if out.f_at { (0, "ok") } else { (1, "ok") })
        }
        _ => Err(CliError::Input(String::from(
            "hyper needs exactly one of --qspec or --k",
        ))),
    }
}

fn load_hypergraph(spec: &str, report: &mut Report) -> Result<Hypergraph, CliError> {
    report.push("hypergraph", spec);
    let h = if spec == "fano" {
        generate_family(&Family::Fano)?
            .as_hypergraph()
            .expect("the fano family is a hypergraph")
            .clone()
    } else {
        parse_hypergraph(&read_input(Path::new(spec))?)?
    };
    report.push("n", h.n());
    report.push("m", h.m());
    Ok(h)
}

fn load_qspec(spec: &str, report: &mut Report) -> Result<QSpec, CliError> {
    report.push("qspec", spec);
    if spec == "fano" {
        Ok(QSpec::fano())
    } else {
        Ok(QSpec::parse(&read_input(Path::new(spec))?)?)
    }
}

fn branch_name(branch: ParityBranch) -> &'static str {
    match branch {
        ParityBranch::Odd => "odd",
        ParityBranch::Even => "even",
    }
}

/// (-1)^m as a scalar.
fn edge_sign(m: usize) -> ExactScalar {
    ExactScalar::from_i64(if m.is_multiple_of(2) { 1 } else { -1 })
}

/// prod_i s_i! for small exponent vectors.
fn factorial_product(s: &[u32]) -> ExactScalar {
    let mut acc = ExactScalar::one();
    for &si in s {
        for j in 2..=i64::from(si) {
            acc = &acc * &ExactScalar::from_i64(j);
        }
    }
    acc
}

fn csv<I>(items: I) -> String
where
    I: IntoIterator,
    I::Item: Display,
{
    let mut out = String::new();
    for (index, item) in items.into_iter().enumerate() {
        if index > 0 {
            out.push(',');
        }
        out.push_str(&item.to_string());
    }
    out
}

fn arcs_str(arcs: &[(u32, u32)]) -> String {
    let mut out = String::new();
    for (index, (a, b)) in arcs.iter().enumerate() {
        if index > 0 {
            out.push(',');
        }
        out.push_str(&format!("{a}>{b}"));
    }
    out
}

fn edges_str(edges: &[(u32, u32)]) -> String {
    let mut out = String::new();
    for (index, (a, b)) in edges.iter().enumerate() {
        if index > 0 {
            out.push(',');
        }
        out.push_str(&format!("{a}-{b}"));
    }
    out
}

fn classes_str(partition: &UniquePartition) -> String {
    let mut out = String::new();
    for (index, class) in partition.classes().iter().enumerate() {
        if index > 0 {
            out.push('|');
        }
        out.push_str(&csv(class));
    }
    out
}

fn lists_str(lists: &[Vec<u32>]) -> String {
    let mut out = String::new();
    for (index, list) in lists.iter().enumerate() {
        if index > 0 {
            out.push('|');
        }
        out.push_str(&csv(list));
    }
    out
}

fn points_str<V: Display>(points: &[(Vec<u32>, V)]) -> String {
    let mut out = String::new();
    for (index, (point, value)) in points.iter().enumerate() {
        if index > 0 {
            out.push_str("; ");
        }
        out.push_str(&format!("({})={}", csv(point), value));
    }
    out
}

type GroupCheck = fn(&Budget) -> Result<bool, CliError>;

/// Scaled down mirror of the library identity corpus: one line per group,
/// exit 0 exactly when every group holds.
fn selfcheck(budget: &Budget, report: &mut Report) -> Result<(u8, &'static str), CliError> {
    let groups: [(&str, GroupCheck); 7] = [
        ("identity_chain", check_identity_chain),
        ("orientation_suite", check_orientation_suite),
        ("at_catalogue", check_at_catalogue),
        ("fano_qspec", check_fano),
        ("t_list_cycle", check_tlist),
        ("unique_routes", check_unique),
        ("regular_sign_sum", check_regular),
    ];
    let mut all = true;
    for (name, check) in groups {
        let ok = check(budget)?;
        report.push(name, if ok { "ok" } else { "FAIL" });
        all &= ok;
    }
    Ok(if all { (0, "ok") } else { (1, "error: selfcheck") })
}

/// Signed coloring sum, permanent, coefficient, and finite differences agree
/// on every connected labeled graph with at most four vertices.
fn check_identity_chain(budget: &Budget) -> Result<bool, CliError> {
    let mut rng = corpus_rng(0xCA11);
    for n in 1..=4 {
        for g in connected_labeled_graphs(n) {
            let poly = graph_polynomial(&g, budget)?;
            let lazy = graph_polynomial_lazy(&g);
            let sgn = edge_sign(g.m());
            for _ in 0..2 {
                let f = random_f(&mut rng, &g);
                let s: Vec<u32> = f.iter().map(|&fi| fi - 1).collect();
                let coeff = poly.coefficient_or(&s, ExactScalar::zero())?;
                let matrix = build_permanent_matrix(&canonical_orientation(&g), &f)?;
                let per = ryser_permanent_scalar(&matrix, budget)?;
                let lhs = signed_coloring_sum(&g, &f, budget)?;
                if lhs != &sgn * &per
                    || lhs != &sgn * &(&coeff * &factorial_product(&s))
                    || scheim_coefficient(&lazy, &s, budget)? != coeff
                    || coefficient_via_permanent(&g, &f, budget)? != coeff
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Eulerian counts and weighted sums match the coefficient on every
/// orientation of every connected isomorphism class with at most five edges.
fn check_orientation_suite(budget: &Budget) -> Result<bool, CliError> {
    for g in connected_iso_classes(5).into_iter().flatten() {
        let poly = graph_polynomial(&g, budget)?;
        let sgn = edge_sign(g.m());
        for d in enumerate_orientations(&g, budget)? {
            let degrees = d.out_degrees();
            let count = euler_diff(&d, budget)?;
            let coeff = poly.coefficient_or(&degrees, ExactScalar::zero())?;
            if (count.diff() != 0) != !coeff.is_zero() {
                return Ok(false);
            }
            let value =
                weighted_subgraph_sum(&d, &WeightScheme::consecutive(&degrees), budget)?;
            let expected =
                &sgn * &(&ExactScalar::from_i64(count.diff()) * &factorial_product(&degrees));
            if value != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Known Alon-Tarsi numbers, with each certificate passing its own recheck.
fn check_at_catalogue(budget: &Budget) -> Result<bool, CliError> {
    let cases = [
        (Family::Complete(4), 4),
        (Family::Cycle(5), 3),
        (Family::Cycle(6), 2),
        (Family::BalancedMultipartite2(3), 3),
    ];
    for (family, expected) in cases {
        let g = family_graph_direct(&family)?;
        let (value, certificate) = at_number(&g, budget)?;
        if value != expected {
            return Ok(false);
        }
        if !certificate.verify(&g, &vec![value; g.n() as usize], budget)? {
            return Ok(false);
        }
    }
    let double = MultiGraph::new(2, vec![(1, 2), (1, 2)])?;
    let (value, _) = at_number(&double, budget)?;
    Ok(value == 2 && is_f_at(&double, &[2, 1], budget)?.is_none())
}

/// The bundled Fano certificate leaves one box point with value 16.
fn check_fano(budget: &Budget) -> Result<bool, CliError> {
    let fano = generate_family(&Family::Fano)?
        .as_hypergraph()
        .expect("the fano family is a hypergraph")
        .clone();
    let out = hypergraph_f_at(&fano, &QSpec::fano(), &[3, 2, 1, 2, 2, 2, 2], budget)?;
    Ok(out.f_at
        && out.nz.len() == 1
        && out.nz[0].0 == vec![2, 0, 0, 1, 1, 0, 1]
        && out.nz[0].1 == ExactScalar::from_i64(16)
        && out.sum == ExactScalar::from_i64(-16))
}

/// T-list sums on C_4 land on the known values with constant NZ tuples.
fn check_tlist(budget: &Budget) -> Result<bool, CliError> {
    let cases: [(Vec<u32>, i64); 2] = [(vec![0], 2), (vec![0, 1], 212_544)];
    for (values, sum) in cases {
        let t = TSet::new(values)?;
        let out = t_list_cycle_check(4, &t, budget)?;
        if !out.choosable || !out.nz_is_constant || out.sum != ExactScalar::from_i64(sum) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both unique coloring routes conclude on their smallest standard inputs.
fn check_unique(budget: &Budget) -> Result<bool, CliError> {
    let k4 = family_graph_direct(&Family::Complete(4))?;
    let min_edge = min_edge_unique_certificate(&k4, 4, budget)?;
    let c6 = family_graph_direct(&Family::Cycle(6))?;
    let parity = parity_unique_certificate(&c6, 2, budget)?;
    Ok(min_edge.at == Some(4) && parity.at == Some(2))
}

/// The octahedron, as the line graph of K_4, has sign sum 6 over 6 colorings.
fn check_regular(budget: &Budget) -> Result<bool, CliError> {
    let k4 = family_graph_direct(&Family::Complete(4))?;
    let lk4 = line_graph(&k4)?;
    let out = signed_sum_regular(&lk4, 3, Some(&k4), budget)?;
    Ok(out.sum == ExactScalar::from_i64(6) && out.colorings == 6)
}

fn family_graph_direct(family: &Family) -> Result<MultiGraph, CliError> {
    match generate_family(family)?.as_graph() {
        Some(g) => Ok(g.clone()),
        None => Err(CliError::Input(String::from(
            "family generates a hypergraph",
        ))),
    }
}
