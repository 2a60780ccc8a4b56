use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use monopow::jumping::{certify, JumpingCertificate, StepTable};
use monopow::polyhedral::{newton_polyhedron_hrep, newton_polyhedron_hrep_dd, HPolyhedron};
use monopow::rational::{format_pq, format_short};
use monopow::{parse_rational, Algorithm, ExactRational, PowerContext, PowerResult};
use serde_json::{json, Value};

use crate::bench::{self, BenchConfig};
use crate::error::CliError;
use crate::parse::{format_ideal, parse_ideal, ParsedIdeal};
use crate::svg;

pub const OUT_DIR_ENV: &str = "MONOPOW_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "monopow",
    version,
    about = "Real powers of monomial ideals, jumping numbers and step tables"
)]
pub struct Cli {
    /// Write the output to this file instead of stdout. Relative paths are
    /// resolved against $MONOPOW_OUT_DIR when it is set.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a real power with one or all algorithms.
    Power(PowerArgs),
    /// Print the facet inequalities of the Newton polyhedron.
    Hrep(HrepArgs),
    /// Decide whether an exponent is a jumping number, or list them up to a bound.
    Jumping(JumpingArgs),
    /// Tabulate the distinct powers on (0, max].
    Table(TableArgs),
    /// Draw a two-variable power as SVG.
    Plot(PlotArgs),
    /// Time the algorithms on a family of instances and emit CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Inline monomial list, JSON spec, or path to a file holding either.
    #[arg(long)]
    pub ideal: String,
    /// Variable order, comma separated. Defaults to the sorted names in use.
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
}

impl IdealArgs {
    fn parse(&self) -> Result<ParsedIdeal, CliError> {
        parse_ideal(&self.ideal, self.vars.as_deref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(short = 'r', long = "exponent")]
    pub exponent: String,
    /// minkowski, hyperrect, improved, staircase, oracle, or all
    #[arg(long, default_value = "staircase")]
    pub algorithm: String,
    /// Record the lattice points each algorithm examined.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HrepArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    /// Use double description even in two variables.
    #[arg(long)]
    pub dd: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["exponent", "max"])))]
pub struct JumpingArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(short = 'r', long = "exponent")]
    pub exponent: Option<String>,
    #[arg(long)]
    pub max: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(long)]
    pub max: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub ideal: IdealArgs,
    #[arg(short = 'r', long = "exponent")]
    pub exponent: String,
    /// Overlay the path of the staircase traversal.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = bench::DEFAULT_IDEAL)]
    pub ideal: String,
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
    /// Largest exponent of the generated family.
    #[arg(long, default_value = "8")]
    pub max: String,
    /// Number of exponents in the family, evenly spaced on (0, max].
    #[arg(long, default_value_t = 8)]
    pub steps: u32,
    /// File with one `ideal; exponent` instance per line; replaces the family.
    #[arg(long)]
    pub instances: Option<PathBuf>,
}

/// Runs a parsed command line, returning what should be written out.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Power(a) => cmd_power(a),
        Command::Hrep(a) => cmd_hrep(a),
        Command::Jumping(a) => cmd_jumping(a),
        Command::Table(a) => cmd_table(a),
        Command::Plot(a) => cmd_plot(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

pub fn parse_exponent(text: &str) -> Result<ExactRational, CliError> {
    let r = parse_rational(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if r < ExactRational::default() {
        return Err(CliError::Parse(format!(
            "exponent must be nonnegative, got {text}"
        )));
    }
    Ok(r)
}

fn parse_bound(text: &str) -> Result<ExactRational, CliError> {
    let r = parse_exponent(text)?;
    if r == ExactRational::default() {
        return Err(CliError::Parse("the bound must be positive".into()));
    }
    Ok(r)
}

fn context(parsed: &ParsedIdeal) -> Result<PowerContext, CliError> {
    if parsed.ideal.is_zero() {
        return Err(CliError::Parse(
            "the zero ideal has no powers to compute".into(),
        ));
    }
    Ok(PowerContext::new(&parsed.ideal)?)
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn exponents_json(gens: &[monopow::ExponentVector]) -> Value {
    Value::Array(gens.iter().map(|g| json!(g.coords())).collect())
}

fn ideal_json(parsed: &ParsedIdeal) -> Value {
    json!({
        "vars": parsed.vars,
        "generators": parsed.render_all(parsed.ideal.generators()),
    })
}

pub fn cmd_power(args: &PowerArgs) -> Result<String, CliError> {
    let parsed = args.ideal.parse()?;
    let r = parse_exponent(&args.exponent)?;
    let algorithms: Vec<Algorithm> = if args.algorithm == "all" {
        Algorithm::ALL.to_vec()
    } else {
        vec![args.algorithm.parse().map_err(CliError::Parse)?]
    };
    let ctx = context(&parsed)?;
    let results = algorithms
        .iter()
        .map(|&a| ctx.run(&r, a, args.trace))
        .collect::<Result<Vec<PowerResult>, _>>()?;
    if let Some(first) = results.first() {
        for other in &results[1..] {
            if other.ideal != first.ideal {
                return Err(CliError::Consistency(format!(
                    "{} gives {} but {} gives {}",
                    first.algorithm,
                    format_ideal(&parsed.vars, &first.ideal),
                    other.algorithm,
                    format_ideal(&parsed.vars, &other.ideal)
                )));
            }
        }
    }

    match args.format {
        Format::Json => {
            let mut out = Vec::new();
            for res in &results {
                let region = if res.algorithm == Algorithm::Minkowski
                    && res.exponent != ExactRational::default()
                {
                    let c = ctx.minkowski_region(&r)?;
                    json!({
                        "kind": "minkowski",
                        "vertices": c.vertices().iter()
                            .map(|v| v.iter().map(format_pq).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    })
                } else {
                    let b = ctx.hyperrectangle(&r)?;
                    json!({"kind": "hyperrectangle", "lower": b.lower, "upper": b.upper})
                };
                let mut entry = json!({
                    "algorithm": res.algorithm.name(),
                    "generators": parsed.render_all(res.ideal.generators()),
                    "exponents": exponents_json(res.ideal.generators()),
                    "pre_interreduction": res.candidates.len(),
                    "candidates": parsed.render_all(&res.candidates),
                    "visited": res.visited,
                    "region": region,
                });
                if let Some(t) = &res.trace {
                    entry["trace"] = json!({
                        "visited": t.visited.iter()
                            .map(|p| json!({"point": p.point.coords(), "inside": p.inside}))
                            .collect::<Vec<_>>(),
                        "accepted": exponents_json(&t.accepted),
                    });
                }
                out.push(entry);
            }
            Ok(to_json(&json!({
                "ideal": ideal_json(&parsed),
                "redundant_input": parsed.render_all(&parsed.redundant),
                "exponent": format_pq(&r),
                "results": out,
            })))
        }
        Format::Text => {
            let mut s = format!(
                "ideal: {}\nexponent: {}\n",
                format_ideal(&parsed.vars, &parsed.ideal),
                format_short(&r)
            );
            if !parsed.redundant.is_empty() {
                s += &format!(
                    "redundant input: {}\n",
                    parsed.render_all(&parsed.redundant).join(", ")
                );
            }
            for res in &results {
                let body = if res.ideal.is_unit() {
                    "1".to_string()
                } else {
                    format_ideal(&parsed.vars, &res.ideal)
                };
                s += &format!(
                    "{}: {}\n  candidates: {}, visited: {}\n",
                    res.algorithm,
                    body,
                    res.candidates.len(),
                    res.visited
                );
                if let Some(t) = &res.trace {
                    let path: Vec<String> = t
                        .visited
                        .iter()
                        .map(|p| format!("{:?}{}", p.point, if p.inside { "+" } else { "-" }))
                        .collect();
                    s += &format!("  trace: {}\n", path.join(" "));
                }
            }
            Ok(s)
        }
        Format::Csv => Err(CliError::Unsupported(
            "power reports are json or text".into(),
        )),
    }
}

fn hrep_for(parsed: &ParsedIdeal, dd: bool) -> Result<HPolyhedron, CliError> {
    if parsed.ideal.is_zero() {
        return Err(CliError::Parse(
            "the zero ideal has no Newton polyhedron".into(),
        ));
    }
    Ok(if dd {
        newton_polyhedron_hrep_dd(&parsed.ideal)?
    } else {
        newton_polyhedron_hrep(&parsed.ideal)?
    })
}

pub fn cmd_hrep(args: &HrepArgs) -> Result<String, CliError> {
    let parsed = args.ideal.parse()?;
    let h = hrep_for(&parsed, args.dd)?;
    match args.format {
        Format::Json => {
            let facets: Vec<Value> = h
                .facets()
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    json!({
                        "index": i,
                        "normal": f.normal,
                        "offset": f.offset,
                        "inequality": f.render(&parsed.vars),
                        "vertices": parsed.render_all(&f.vertices),
                        "rays": f.rays.iter().map(|&k| parsed.vars[k].clone()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(to_json(&json!({
                "ideal": ideal_json(&parsed),
                "facets": facets,
                "vertices": parsed.render_all(h.vertices()),
            })))
        }
        Format::Text => Ok(h
            .facets()
            .iter()
            .enumerate()
            .map(|(i, f)| format!("{i}: {}\n", f.render(&parsed.vars)))
            .collect()),
        Format::Csv => Err(CliError::Unsupported(
            "hrep reports are json or text".into(),
        )),
    }
}

fn certificate_json(
    parsed: &ParsedIdeal,
    h: &HPolyhedron,
    r: &ExactRational,
    cert: &JumpingCertificate,
) -> Value {
    let mut v = json!({"exponent": format_pq(r), "jumping": cert.is_jumping()});
    v["certificate"] = match cert {
        JumpingCertificate::Jumping { facet, witness } => json!({
            "kind": "facet",
            "facet": facet,
            "inequality": h.facets()[*facet].render(&parsed.vars),
            "witness": parsed.render(witness),
            "witness_exponents": witness.coords(),
        }),
        JumpingCertificate::AtZero => json!({"kind": "zero"}),
        JumpingCertificate::NotJumping { epsilon } => json!({
            "kind": "constant",
            "epsilon": epsilon.as_ref().map(format_pq),
        }),
    };
    v
}

fn certificate_text(
    parsed: &ParsedIdeal,
    h: &HPolyhedron,
    r: &ExactRational,
    cert: &JumpingCertificate,
) -> String {
    let r = format_short(r);
    match cert {
        JumpingCertificate::Jumping { facet, witness } => format!(
            "{r}: jumping, witness {} on {}\n",
            parsed.render(witness),
            h.facets()[*facet].render(&parsed.vars)
        ),
        JumpingCertificate::AtZero => format!("{r}: jumping\n"),
        JumpingCertificate::NotJumping { epsilon: Some(e) } => {
            format!(
                "{r}: not jumping, constant on [{r}, {r} + {})\n",
                format_short(e)
            )
        }
        JumpingCertificate::NotJumping { epsilon: None } => format!("{r}: not jumping\n"),
    }
}

pub fn cmd_jumping(args: &JumpingArgs) -> Result<String, CliError> {
    let parsed = args.ideal.parse()?;
    let ctx = context(&parsed)?;
    let h = ctx.hrep();
    let certified: Vec<(ExactRational, JumpingCertificate)> = match (&args.exponent, &args.max) {
        (Some(r), _) => {
            let r = parse_exponent(r)?;
            let cert = certify(&ctx, &r)?;
            vec![(r, cert)]
        }
        (None, Some(max)) => {
            let max = parse_bound(max)?;
            monopow::jumping_numbers_up_to(&parsed.ideal, &max)?
                .into_iter()
                .map(|r| {
                    let cert = certify(&ctx, &r)?;
                    Ok((r, cert))
                })
                .collect::<Result<_, CliError>>()?
        }
        (None, None) => unreachable!("clap requires one of --exponent and --max"),
    };
    match args.format {
        Format::Json => {
            let items: Vec<Value> = certified
                .iter()
                .map(|(r, c)| certificate_json(&parsed, h, r, c))
                .collect();
            let v = if args.exponent.is_some() {
                items.into_iter().next().expect("one certificate")
            } else {
                json!({
                    "max": format_pq(&parse_bound(args.max.as_deref().unwrap_or_default())?),
                    "jumping_numbers": items,
                })
            };
            Ok(to_json(&v))
        }
        Format::Text => Ok(certified
            .iter()
            .map(|(r, c)| certificate_text(&parsed, h, r, c))
            .collect()),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["exponent", "jumping", "facet", "witness"])
                .map_err(|e| CliError::Io(e.to_string()))?;
            for (r, c) in &certified {
                let (facet, witness) = match c {
                    JumpingCertificate::Jumping { facet, witness } => {
                        (facet.to_string(), parsed.render(witness))
                    }
                    _ => (String::new(), String::new()),
                };
                w.write_record([format_pq(r), c.is_jumping().to_string(), facet, witness])
                    .map_err(|e| CliError::Io(e.to_string()))?;
            }
            csv_string(w)
        }
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

/// `{"intervals":[{"from","to","generators"}], "open_right"}` with exact
/// `p/q` endpoints.
pub fn table_json(parsed: &ParsedIdeal, table: &StepTable) -> Value {
    json!({
        "vars": parsed.vars,
        "intervals": table.intervals.iter().map(|iv| json!({
            "from": format_pq(&iv.from),
            "to": format_pq(&iv.to),
            "generators": parsed.render_all(iv.ideal.generators()),
        })).collect::<Vec<_>>(),
        "open_right": table.open_right,
    })
}

pub fn cmd_table(args: &TableArgs) -> Result<String, CliError> {
    let parsed = args.ideal.parse()?;
    let max = parse_bound(&args.max)?;
    if parsed.ideal.is_zero() {
        return Err(CliError::Parse("the zero ideal has no step table".into()));
    }
    let table = monopow::step_table(&parsed.ideal, &max)?;
    match args.format {
        Format::Json => Ok(to_json(&table_json(&parsed, &table))),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["from", "to", "generators"])
                .map_err(|e| CliError::Io(e.to_string()))?;
            for iv in &table.intervals {
                w.write_record([
                    format_pq(&iv.from),
                    format_pq(&iv.to),
                    parsed.render_all(iv.ideal.generators()).join(" "),
                ])
                .map_err(|e| CliError::Io(e.to_string()))?;
            }
            csv_string(w)
        }
        Format::Text => {
            let mut s = String::new();
            let last = table.intervals.len().saturating_sub(1);
            for (i, iv) in table.intervals.iter().enumerate() {
                let close = if i == last && table.open_right {
                    ") open"
                } else {
                    "]"
                };
                s += &format!(
                    "({}, {}{}  {}\n",
                    format_short(&iv.from),
                    format_short(&iv.to),
                    close,
                    parsed.render_all(iv.ideal.generators()).join(", ")
                );
            }
            Ok(s)
        }
    }
}

pub fn cmd_plot(args: &PlotArgs) -> Result<String, CliError> {
    let parsed = args.ideal.parse()?;
    if parsed.dim() != 2 {
        return Err(CliError::Unsupported(format!(
            "plots need exactly two variables, got {}",
            parsed.dim()
        )));
    }
    let r = parse_exponent(&args.exponent)?;
    let ctx = context(&parsed)?;
    svg::render(&parsed, &ctx, &r, args.trace)
}

pub fn cmd_bench(args: &BenchArgs) -> Result<String, CliError> {
    let config = match &args.instances {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
            BenchConfig::from_lines(&text, args.vars.as_deref())?
        }
        None => {
            let parsed = parse_ideal(&args.ideal, args.vars.as_deref())?;
            BenchConfig::family(parsed, &parse_bound(&args.max)?, args.steps)?
        }
    };
    let records = bench::run(&config)?;
    bench::to_csv(&records)
}
