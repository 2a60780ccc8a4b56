//! Timing harness. Every instance is run through each algorithm and the
//! results are compared before anything is reported.

use std::time::Instant;

use monopow::rational::format_pq;
use monopow::{Algorithm, ExactRational, MonomialIdeal, PowerContext};

use crate::commands::parse_exponent;
use crate::error::CliError;
use crate::parse::{format_ideal, parse_ideal, ParsedIdeal};

pub const DEFAULT_IDEAL: &str = "x*y^5, x^2*y^2, x^4*y";
pub const CSV_HEADER: [&str; 6] = [
    "instance",
    "algorithm",
    "micros",
    "visited",
    "pre_gens",
    "min_gens",
];

#[derive(Clone, Debug)]
pub struct BenchInstance {
    pub id: String,
    pub ideal: ParsedIdeal,
    pub exponent: ExactRational,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub instances: Vec<BenchInstance>,
    pub algorithms: Vec<Algorithm>,
}

impl BenchConfig {
    /// One ideal at exponents `k * max / steps` for `k = 1..=steps`.
    pub fn family(ideal: ParsedIdeal, max: &ExactRational, steps: u32) -> Result<Self, CliError> {
        if steps == 0 {
            return Err(CliError::Parse("--steps must be at least 1".into()));
        }
        let instances = (1..=steps)
            .map(|k| {
                let exponent = max * ExactRational::from_integer(k.into())
                    / ExactRational::from_integer(steps.into());
                BenchInstance {
                    id: format_pq(&exponent),
                    ideal: ideal.clone(),
                    exponent,
                }
            })
            .collect();
        Ok(BenchConfig {
            instances,
            algorithms: Algorithm::ALL.to_vec(),
        })
    }

    /// Lines of the form `ideal; exponent`. Blank lines and lines starting
    /// with `#` are skipped; the instance id is the line number.
    pub fn from_lines(text: &str, vars: Option<&[String]>) -> Result<Self, CliError> {
        let mut instances = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (ideal, r) = line.rsplit_once(';').ok_or_else(|| {
                CliError::Parse(format!("line {}: expected `ideal; exponent`", n + 1))
            })?;
            instances.push(BenchInstance {
                id: (n + 1).to_string(),
                ideal: parse_ideal(ideal.trim(), vars)?,
                exponent: parse_exponent(r.trim())?,
            });
        }
        if instances.is_empty() {
            return Err(CliError::Parse("no instances given".into()));
        }
        Ok(BenchConfig {
            instances,
            algorithms: Algorithm::ALL.to_vec(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: Algorithm,
    pub micros: u128,
    pub visited: usize,
    pub pre_gens: usize,
    pub min_gens: usize,
    pub ideal: MonomialIdeal,
}

/// Runs every instance with every algorithm. Fails, without returning any
/// timings, as soon as two algorithms disagree on an instance.
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRecord>, CliError> {
    let mut records = Vec::new();
    for inst in &config.instances {
        if inst.ideal.ideal.is_zero() {
            return Err(CliError::Parse(format!("instance {}: zero ideal", inst.id)));
        }
        let ctx = PowerContext::new(&inst.ideal.ideal)?;
        let start = records.len();
        for &algorithm in &config.algorithms {
            let clock = Instant::now();
            let res = ctx.run(&inst.exponent, algorithm, false)?;
            let micros = clock.elapsed().as_micros();
            records.push(BenchRecord {
                instance: inst.id.clone(),
                algorithm,
                micros,
                visited: res.visited,
                pre_gens: res.candidates.len(),
                min_gens: res.ideal.generators().len(),
                ideal: res.ideal,
            });
        }
        let batch = &records[start..];
        if let Some(first) = batch.first() {
            if let Some(bad) = batch.iter().find(|r| r.ideal != first.ideal) {
                let vars = &inst.ideal.vars;
                return Err(CliError::Consistency(format!(
                    "instance {} (r = {}): {} gives {} but {} gives {}",
                    inst.id,
                    format_pq(&inst.exponent),
                    first.algorithm,
                    format_ideal(vars, &first.ideal),
                    bad.algorithm,
                    format_ideal(vars, &bad.ideal)
                )));
            }
        }
    }
    Ok(records)
}

pub fn to_csv(records: &[BenchRecord]) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::Io(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in records {
        w.write_record([
            r.instance.clone(),
            r.algorithm.name().to_string(),
            r.micros.to_string(),
            r.visited.to_string(),
            r.pre_gens.to_string(),
            r.min_gens.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}
