//! Reading ideals from inline monomial lists or JSON specs, and writing them
//! back as monomial strings.

use std::path::Path;

use monopow::{interreduce_with_report, ExponentVector, MonomialIdeal};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Wire format of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorSpec {
    Exponents(Vec<i64>),
    Monomial(String),
}

/// A canonical ideal with the variable names it was written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub vars: Vec<String>,
    pub ideal: MonomialIdeal,
    /// Input generators that are divisible by another input generator.
    pub redundant: Vec<ExponentVector>,
}

impl ParsedIdeal {
    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn render(&self, a: &ExponentVector) -> String {
        format_monomial(&self.vars, a)
    }

    pub fn render_all(&self, gens: &[ExponentVector]) -> Vec<String> {
        gens.iter().map(|g| self.render(g)).collect()
    }

    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec {
            vars: Some(self.vars.clone()),
            generators: self
                .ideal
                .generators()
                .iter()
                .map(|g| GeneratorSpec::Monomial(self.render(g)))
                .collect(),
        }
    }
}

/// Parses `--ideal`: a path to a file, a JSON spec, or an inline list such
/// as `"x*y^5, x^2*y^2, x^4*y"`. `vars` fixes the variable order; otherwise
/// variables are sorted by name.
pub fn parse_ideal(input: &str, vars: Option<&[String]>) -> Result<ParsedIdeal, CliError> {
    let text = if !input.trim_start().starts_with('{') && Path::new(input).is_file() {
        std::fs::read_to_string(input)
            .map_err(|e| CliError::Parse(format!("cannot read {input}: {e}")))?
    } else {
        input.to_string()
    };
    let text = text.trim();
    if text.starts_with('{') {
        let spec: IdealSpec = serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("invalid ideal JSON: {e}")))?;
        from_spec(&spec, vars)
    } else {
        parse_inline(text, vars)
    }
}

pub fn from_spec(spec: &IdealSpec, vars: Option<&[String]>) -> Result<ParsedIdeal, CliError> {
    let mut names: Option<Vec<String>> = vars.map(<[String]>::to_vec).or_else(|| spec.vars.clone());
    if names.is_none() {
        let strings: Vec<&str> = spec
            .generators
            .iter()
            .filter_map(|g| match g {
                GeneratorSpec::Monomial(s) => Some(s.as_str()),
                GeneratorSpec::Exponents(_) => None,
            })
            .collect();
        if strings.len() == spec.generators.len() && !strings.is_empty() {
            names = Some(collect_vars(&strings)?);
        } else if let Some(GeneratorSpec::Exponents(e)) = spec.generators.first() {
            names = Some(default_vars(e.len()));
        }
    }
    let names = names.ok_or_else(|| CliError::Parse("cannot infer the variables".into()))?;
    validate_vars(&names)?;
    let mut points = Vec::with_capacity(spec.generators.len());
    for g in &spec.generators {
        points.push(match g {
            GeneratorSpec::Exponents(e) => {
                if e.len() != names.len() {
                    return Err(CliError::Parse(format!(
                        "generator {e:?} has {} entries, expected {}",
                        e.len(),
                        names.len()
                    )));
                }
                let coords = e
                    .iter()
                    .map(|&c| {
                        u64::try_from(c)
                            .map_err(|_| CliError::Parse(format!("negative exponent in {e:?}")))
                    })
                    .collect::<Result<Vec<u64>, _>>()?;
                ExponentVector::new(coords)
            }
            GeneratorSpec::Monomial(s) => parse_monomial(s, &names)?,
        });
    }
    canonical(names, points)
}

fn parse_inline(text: &str, vars: Option<&[String]>) -> Result<ParsedIdeal, CliError> {
    let body = text
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(text);
    let terms: Vec<&str> = body.split(',').map(str::trim).collect();
    if terms.iter().any(|t| t.is_empty()) {
        return Err(CliError::Parse(format!("malformed monomial list {text:?}")));
    }
    let names = match vars {
        Some(v) => v.to_vec(),
        None => collect_vars(&terms)?,
    };
    validate_vars(&names)?;
    let points = terms
        .iter()
        .map(|t| parse_monomial(t, &names))
        .collect::<Result<Vec<_>, _>>()?;
    canonical(names, points)
}

fn canonical(vars: Vec<String>, points: Vec<ExponentVector>) -> Result<ParsedIdeal, CliError> {
    let (ideal, redundant) = interreduce_with_report(vars.len(), points)?;
    Ok(ParsedIdeal {
        vars,
        ideal,
        redundant,
    })
}

fn validate_vars(vars: &[String]) -> Result<(), CliError> {
    if vars.is_empty() {
        return Err(CliError::Parse(
            "an ideal needs at least one variable".into(),
        ));
    }
    for (i, v) in vars.iter().enumerate() {
        if tokenize_name(v) != Some(v.len()) {
            return Err(CliError::Parse(format!("invalid variable name {v:?}")));
        }
        if vars[..i].contains(v) {
            return Err(CliError::Parse(format!("duplicate variable {v:?}")));
        }
    }
    Ok(())
}

/// `x`, `y`, `z` for up to three variables, else `x1, x2, ...`.
pub fn default_vars(dim: usize) -> Vec<String> {
    if dim <= 3 {
        ["x", "y", "z"][..dim]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (1..=dim).map(|i| format!("x{i}")).collect()
    }
}

/// Length of the variable name at the start of `s`: a letter followed by
/// digits.
fn tokenize_name(s: &str) -> Option<usize> {
    let mut chars = s.char_indices();
    let (_, first) = chars.next()?;
    if !first.is_ascii_alphabetic() {
        return None;
    }
    let end = chars
        .find(|(_, c)| !c.is_ascii_digit())
        .map_or(s.len(), |(i, _)| i);
    Some(end)
}

fn collect_vars(terms: &[&str]) -> Result<Vec<String>, CliError> {
    let mut names: Vec<String> = Vec::new();
    for t in terms {
        for (name, _) in factors(t)? {
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    // Sort x2 before x10.
    names.sort_by(|a, b| {
        let split = |s: &str| {
            let digits = s.len()
                - s.trim_start_matches(|c: char| c.is_ascii_alphabetic())
                    .len();
            (
                s[..digits].to_string(),
                s[digits..].parse::<u64>().unwrap_or(0),
            )
        };
        split(a).cmp(&split(b))
    });
    if names.is_empty() {
        return Err(CliError::Parse(
            "cannot infer the variables of a constant; pass --vars".into(),
        ));
    }
    Ok(names)
}

/// Splits a monomial such as `x^2*y` or `xy^3` into `(name, exponent)`
/// factors. `1` is the empty product.
fn factors(text: &str) -> Result<Vec<(String, i64)>, CliError> {
    let bad = |why: &str| CliError::Parse(format!("malformed monomial {text:?}: {why}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(bad("empty"));
    }
    while !rest.is_empty() {
        let len = tokenize_name(rest).ok_or_else(|| bad("expected a variable"))?;
        let name = rest[..len].to_string();
        rest = &rest[len..];
        let mut exp = 1i64;
        if let Some(after) = rest.strip_prefix('^') {
            let digits_end = after
                .char_indices()
                .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == '-' || c == '+'))))
                .map_or(after.len(), |(i, _)| i);
            exp = after[..digits_end]
                .parse()
                .map_err(|_| bad("expected an integer exponent"))?;
            rest = &after[digits_end..];
        }
        out.push((name, exp));
        if let Some(after) = rest.strip_prefix('*') {
            if after.is_empty() {
                return Err(bad("trailing '*'"));
            }
            rest = after;
        }
    }
    Ok(out)
}

pub fn parse_monomial(text: &str, vars: &[String]) -> Result<ExponentVector, CliError> {
    let mut coords = vec![0u64; vars.len()];
    for (name, exp) in factors(text)? {
        let k = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| CliError::Parse(format!("unknown variable {name:?} in {text:?}")))?;
        if exp < 0 {
            return Err(CliError::Parse(format!("negative exponent in {text:?}")));
        }
        coords[k] += exp as u64;
    }
    Ok(ExponentVector::new(coords))
}

/// `x^2*y^5`; the zero vector is `1`.
pub fn format_monomial(vars: &[String], a: &ExponentVector) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(a.coords())
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            if e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// `(x^2, x*y)`; the zero ideal is `(0)`.
pub fn format_ideal(vars: &[String], ideal: &MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "(0)".to_string();
    }
    let gens: Vec<String> = ideal
        .generators()
        .iter()
        .map(|g| format_monomial(vars, g))
        .collect();
    format!("({})", gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn inline_lists() {
        let p = parse_ideal("x*y^5, x^2*y^2, x^4*y", None).unwrap();
        assert_eq!(p.vars, vars(&["x", "y"]));
        assert_eq!(
            p.ideal,
            MonomialIdeal::from_exponents(2, &[[1, 5], [2, 2], [4, 1]]).unwrap()
        );
        let p = parse_ideal("(xy^3, x^2y, x^4)", None).unwrap();
        assert_eq!(
            p.ideal,
            MonomialIdeal::from_exponents(2, &[[1, 3], [2, 1], [4, 0]]).unwrap()
        );
        let p = parse_ideal("x^0", Some(&vars(&["x", "y"]))).unwrap();
        assert!(p.ideal.is_unit());
        let p = parse_ideal("x^0", None).unwrap();
        assert!(p.ideal.is_unit());
        let p = parse_ideal("x2*x10, x1^3", None).unwrap();
        assert_eq!(p.vars, vars(&["x1", "x2", "x10"]));
    }

    #[test]
    fn redundant_generators_are_reported() {
        let p = parse_ideal("x^2, x*y, x^3*y, x^2", None).unwrap();
        assert_eq!(p.ideal.generators().len(), 2);
        assert_eq!(
            p.redundant,
            vec![ExponentVector::from([3, 1]), ExponentVector::from([2, 0])]
        );
    }

    #[test]
    fn json_specs() {
        let p = parse_ideal(r#"{"vars":["x"],"generators":[[2]]}"#, None).unwrap();
        assert_eq!(p.ideal, MonomialIdeal::from_exponents(1, &[[2]]).unwrap());
        let p = parse_ideal(r#"{"vars":["a","b"],"generators":["a^2*b", [0, 3]]}"#, None).unwrap();
        assert_eq!(
            p.ideal,
            MonomialIdeal::from_exponents(2, &[[2, 1], [0, 3]]).unwrap()
        );
        let p = parse_ideal(r#"{"generators":[[1, 2, 3]]}"#, None).unwrap();
        assert_eq!(p.vars, vars(&["x", "y", "z"]));
        let p = parse_ideal(r#"{"vars":["x","y"],"generators":[]}"#, None).unwrap();
        assert!(p.ideal.is_zero());
    }

    #[test]
    fn parse_errors() {
        for bad in ["x*w", "x^-1", "x^", "x*", "x,,y", "2x", "", "x^1.5"] {
            let v = vars(&["x", "y"]);
            assert!(
                matches!(parse_ideal(bad, Some(&v)), Err(CliError::Parse(_))),
                "{bad:?}"
            );
        }
        assert!(parse_ideal(r#"{"vars":["x"],"generators":[[1, 2]]}"#, None).is_err());
        assert!(parse_ideal(r#"{"vars":["x"],"generators":[[-1]]}"#, None).is_err());
        assert!(parse_ideal(r#"{"vars":["x","x"],"generators":[[1, 2]]}"#, None).is_err());
        assert!(parse_ideal("1", None).is_err());
    }

    #[test]
    fn formatting() {
        let v = vars(&["x", "y"]);
        assert_eq!(
            format_monomial(&v, &ExponentVector::from([2, 5])),
            "x^2*y^5"
        );
        assert_eq!(format_monomial(&v, &ExponentVector::from([1, 0])), "x");
        assert_eq!(format_monomial(&v, &ExponentVector::from([0, 0])), "1");
        let i = MonomialIdeal::from_exponents(2, &[[2, 0], [1, 1]]).unwrap();
        assert_eq!(format_ideal(&v, &i), "(x*y, x^2)");
        assert_eq!(format_ideal(&v, &MonomialIdeal::zero(2)), "(0)");
    }
}
