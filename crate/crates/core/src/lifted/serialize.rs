//! JSON and text encodings of [`LiftedSystem`].

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{DetEquation, Formulation, LiftedSystem, PolyMatrix};
use crate::error::{Error, Result};
use crate::poly::{IntPolynomial, Monomial};
use crate::weyl::{LieKind, LieType, Permutation, SignedPermutation, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::parse("format", format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

impl Coefficient {
    fn from_big(c: &BigInt) -> Self {
        match c.to_i64() {
            Some(x) => Coefficient::Small(x),
            None => Coefficient::Big(c.to_string()),
        }
    }

    fn to_big(&self, at: &str) -> Result<BigInt> {
        match self {
            Coefficient::Small(x) => Ok(BigInt::from(*x)),
            Coefficient::Big(s) => s
                .parse()
                .map_err(|_| Error::parse(at.to_string(), format!("bad coefficient {s:?}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    c: Coefficient,
    m: BTreeMap<String, u32>,
}

#[derive(Serialize, Deserialize)]
struct DetJson {
    matrix: Vec<Vec<Vec<TermJson>>>,
    equals: Coefficient,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    lie_type: LieKind,
    rank: usize,
    formulation: String,
    u: Vec<i64>,
    v: Vec<i64>,
    t: Vec<i64>,
    variables: Vec<String>,
    parameters: Vec<String>,
    equations: Vec<Vec<TermJson>>,
    det_equations: Vec<DetJson>,
}

fn element_values(w: &WeylElement) -> Vec<i64> {
    match w {
        WeylElement::A(p) => p.window().iter().map(|&x| x as i64).collect(),
        WeylElement::Signed(s) => s.values().to_vec(),
    }
}

fn element_from_values(values: Vec<i64>, kind: LieKind, at: &str) -> Result<WeylElement> {
    let bad = |e: Error| Error::parse(at.to_string(), e.to_string());
    match kind {
        LieKind::A => {
            let window = values
                .into_iter()
                .map(|x| usize::try_from(x).map_err(|_| Error::parse(at.to_string(), "negative entry in a permutation")))
                .collect::<Result<Vec<_>>>()?;
            Ok(WeylElement::A(Permutation::new(window).map_err(bad)?))
        }
        _ => Ok(WeylElement::Signed(SignedPermutation::new(values).map_err(bad)?)),
    }
}

fn parse_formulation(s: &str, at: &str) -> Result<Formulation> {
    match s {
        "cell" => Ok(Formulation::Cell),
        "borel" => Ok(Formulation::Borel),
        other => Err(Error::parse(at.to_string(), format!("unknown formulation {other:?}"))),
    }
}

fn poly_to_json(p: &IntPolynomial, sys: &LiftedSystem) -> Vec<TermJson> {
    p.terms()
        .rev()
        .map(|(m, c)| TermJson {
            c: Coefficient::from_big(c),
            m: m
                .exponents()
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(k, &e)| (sys.symbol(k).to_string(), e))
                .collect(),
        })
        .collect()
}

fn poly_from_json(terms: &[TermJson], index: &HashMap<String, usize>, at: &str) -> Result<IntPolynomial> {
    let mut p = IntPolynomial::zero();
    for (k, t) in terms.iter().enumerate() {
        let at = format!("{at}, term {}", k + 1);
        let mut exps = Vec::new();
        for (name, &e) in &t.m {
            let v = *index
                .get(name)
                .ok_or_else(|| Error::parse(at.clone(), format!("undeclared symbol {name:?}")))?;
            if exps.len() <= v {
                exps.resize(v + 1, 0);
            }
            exps[v] += e;
        }
        p.add_term(Monomial::new(exps), t.c.to_big(&at)?);
    }
    Ok(p)
}

fn declared_index(variables: &[String], parameters: &[String], at: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::new();
    for (k, name) in variables.iter().chain(parameters).enumerate() {
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::parse(at.to_string(), format!("bad symbol name {name:?}")));
        }
        if index.insert(name.clone(), k).is_some() {
            return Err(Error::parse(at.to_string(), format!("symbol {name:?} declared twice")));
        }
    }
    Ok(index)
}

pub fn to_json(sys: &LiftedSystem) -> String {
    let json = SystemJson {
        lie_type: sys.lie_type.kind,
        rank: sys.lie_type.n,
        formulation: sys.formulation.to_string(),
        u: element_values(&sys.u),
        v: element_values(&sys.v),
        t: element_values(&sys.t),
        variables: sys.variables.clone(),
        parameters: sys.parameters.clone(),
        equations: sys.equations.iter().map(|p| poly_to_json(p, sys)).collect(),
        det_equations: sys
            .det_equations
            .iter()
            .map(|d| DetJson {
                matrix: d
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|p| poly_to_json(p, sys)).collect())
                    .collect(),
                equals: Coefficient::from_big(&d.equals),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&json).expect("system serializes")
}

pub fn from_json(s: &str) -> Result<LiftedSystem> {
    let json: SystemJson = serde_json::from_str(s)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let index = declared_index(&json.variables, &json.parameters, "symbol lists")?;
    let kind = json.lie_type;
    let equations = json
        .equations
        .iter()
        .enumerate()
        .map(|(k, terms)| poly_from_json(terms, &index, &format!("equation {}", k + 1)))
        .collect::<Result<Vec<_>>>()?;
    let det_equations = json
        .det_equations
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let at = format!("det equation {}", k + 1);
            let matrix = d
                .matrix
                .iter()
                .map(|row| row.iter().map(|terms| poly_from_json(terms, &index, &at)).collect())
                .collect::<Result<PolyMatrix>>()?;
            Ok(DetEquation { matrix, equals: d.equals.to_big(&at)? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LiftedSystem {
        lie_type: LieType::new(kind, json.rank),
        formulation: parse_formulation(&json.formulation, "formulation")?,
        u: element_from_values(json.u, kind, "u")?,
        v: element_from_values(json.v, kind, "v")?,
        t: element_from_values(json.t, kind, "t")?,
        variables: json.variables,
        parameters: json.parameters,
        equations,
        det_equations,
    })
}

/// Line-oriented rendering; every line is `key: value`.
pub fn to_text(sys: &LiftedSystem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type: {} {}", sys.lie_type.kind, sys.lie_type.n);
    let _ = writeln!(out, "formulation: {}", sys.formulation);
    let join = |w: &WeylElement| element_values(w).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let _ = writeln!(out, "u: {}", join(&sys.u));
    let _ = writeln!(out, "v: {}", join(&sys.v));
    let _ = writeln!(out, "t: {}", join(&sys.t));
    let _ = writeln!(out, "variables: {}", sys.variables.join(" "));
    let _ = writeln!(out, "parameters: {}", sys.parameters.join(" "));
    for p in &sys.equations {
        let _ = writeln!(out, "eq: {} = 0", sys.render(p));
    }
    for d in &sys.det_equations {
        let rows: Vec<String> = d
            .matrix
            .iter()
            .map(|row| row.iter().map(|p| sys.render(p)).collect::<Vec<_>>().join(" | "))
            .collect();
        let _ = writeln!(out, "det: {} = {}", rows.join(" ; "), d.equals);
    }
    out
}

fn parse_poly_at(s: &str, index: &HashMap<String, usize>, line: usize, offset: usize) -> Result<IntPolynomial> {
    IntPolynomial::parse_with(s, &|name| index.get(name).copied()).map_err(|e| match e {
        Error::Parse { position, message } => {
            let col = position
                .strip_prefix("column ")
                .and_then(|c| c.parse::<usize>().ok())
                .map_or(offset + 1, |c| c + offset);
            Error::parse(format!("line {line}, column {col}"), message)
        }
        other => other,
    })
}

/// Splits `lhs = rhs` at the last `=`, returning the byte offset of `rhs`.
fn split_equals(s: &str, line: usize) -> Result<(&str, &str, usize)> {
    let k = s
        .rfind('=')
        .ok_or_else(|| Error::parse(format!("line {line}"), "expected '='"))?;
    Ok((&s[..k], &s[k + 1..], k + 1))
}

pub fn from_text(s: &str) -> Result<LiftedSystem> {
    let mut header: HashMap<&str, (usize, &str, usize)> = HashMap::new();
    let mut eq_lines = Vec::new();
    let mut det_lines = Vec::new();
    for (k, raw) in s.lines().enumerate() {
        let line = k + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let colon = raw
            .find(':')
            .ok_or_else(|| Error::parse(format!("line {line}, column 1"), "expected 'key: value'"))?;
        let key = raw[..colon].trim();
        let value_offset = colon + 1;
        let value = &raw[value_offset..];
        match key {
            "eq" => eq_lines.push((line, value, value_offset)),
            "det" => det_lines.push((line, value, value_offset)),
            "type" | "formulation" | "u" | "v" | "t" | "variables" | "parameters" => {
                if header.insert(key, (line, value, value_offset)).is_some() {
                    return Err(Error::parse(format!("line {line}, column 1"), format!("duplicate {key:?}")));
                }
            }
            other => {
                return Err(Error::parse(format!("line {line}, column 1"), format!("unknown key {other:?}")));
            }
        }
    }
    let field = |key: &str| -> Result<(usize, &str)> {
        header
            .get(key)
            .map(|&(l, v, _)| (l, v.trim()))
            .ok_or_else(|| Error::parse("end of input", format!("missing {key:?} line")))
    };

    let (line, ty) = field("type")?;
    let mut parts = ty.split_whitespace();
    let kind: LieKind = parts
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|_| Error::parse(format!("line {line}"), "expected a type letter"))?;
    let n: usize = parts
        .next()
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| Error::parse(format!("line {line}"), "expected a rank"))?;
    let (line, f) = field("formulation")?;
    let formulation = parse_formulation(f, &format!("line {line}"))?;
    let element = |key: &str| -> Result<WeylElement> {
        let (line, v) = field(key)?;
        let at = format!("line {line}");
        let values = v
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::parse(at.clone(), format!("bad entry {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        element_from_values(values, kind, &at)
    };
    let (u, v, t) = (element("u")?, element("v")?, element("t")?);
    let names = |key: &str| -> Result<Vec<String>> {
        Ok(field(key)?.1.split_whitespace().map(str::to_string).collect())
    };
    let variables = names("variables")?;
    let parameters = names("parameters")?;
    let index = declared_index(&variables, &parameters, "symbol lists")?;

    let mut equations = Vec::new();
    for (line, value, offset) in eq_lines {
        let (lhs, rhs, rhs_at) = split_equals(value, line)?;
        if rhs.trim() != "0" {
            return Err(Error::parse(format!("line {line}, column {}", offset + rhs_at + 1), "expected '= 0'"));
        }
        equations.push(parse_poly_at(lhs, &index, line, offset)?);
    }
    let mut det_equations = Vec::new();
    for (line, value, offset) in det_lines {
        let (lhs, rhs, rhs_at) = split_equals(value, line)?;
        let equals: BigInt = rhs.trim().parse().map_err(|_| {
            Error::parse(format!("line {line}, column {}", offset + rhs_at + 1), "expected an integer")
        })?;
        let mut matrix = Vec::new();
        let mut row_start = offset;
        for row in lhs.split(';') {
            let mut entries = Vec::new();
            let mut entry_start = row_start;
            for entry in row.split('|') {
                entries.push(parse_poly_at(entry, &index, line, entry_start)?);
                entry_start += entry.len() + 1;
            }
            matrix.push(entries);
            row_start += row.len() + 1;
        }
        det_equations.push(DetEquation { matrix, equals });
    }
    Ok(LiftedSystem {
        lie_type: LieType::new(kind, n),
        formulation,
        u,
        v,
        t,
        variables,
        parameters,
        equations,
        det_equations,
    })
}

pub fn serialize(sys: &LiftedSystem, format: Format) -> String {
    match format {
        Format::Json => to_json(sys),
        Format::Text => to_text(sys),
    }
}

pub fn deserialize(s: &str, format: Format) -> Result<LiftedSystem> {
    match format {
        Format::Json => from_json(s),
        Format::Text => from_text(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifted::build_type_a;

    #[test]
    fn round_trips() {
        let p = |s: &str| -> Permutation { s.parse().unwrap() };
        let sys = build_type_a(&p("2143"), &p("3124"), &p("1423"));
        assert_eq!(from_json(&to_json(&sys)).unwrap(), sys);
        assert_eq!(from_text(&to_text(&sys)).unwrap(), sys);
        let empty = build_type_a(&p("1"), &p("1"), &p("1"));
        assert_eq!(from_json(&to_json(&empty)).unwrap(), empty);
        assert_eq!(from_text(&to_text(&empty)).unwrap(), empty);
    }

    #[test]
    fn errors_carry_positions() {
        let err = from_json("{\"lie_type\": \"A\",\n  \"rank\": }").unwrap_err();
        assert!(matches!(err, Error::Parse { ref position, .. } if position.starts_with("line 2")), "{err}");
        let text = "type: A 2\nformulation: cell\nu: 2,1\nv: 1,2\nt: 1,2\nvariables: x1\nparameters: y11\neq: x1 + q = 0\n";
        let err = from_text(text).unwrap_err();
        assert!(matches!(err, Error::Parse { ref position, .. } if position == "line 8, column 10"), "{err}");
    }
}
