//! The free-product command: symbolic arithmetic in the zero-free product of
//! two monoid files.
//!
//! Expressions are whitespace-separated syllables `name.M` / `name.N`, with
//! optional `*` separators; `1` and `0` denote the identity and zero. A `|`
//! splits the expression into an lcm query between its two sides.

use ihull_core::constructors::{FactorTag, FpLcm, FreeProduct, FreeProductElement};
use ihull_core::semigroup::Semigroup;

use crate::error::CliError;
use crate::report::{Cell, Report, Section};

fn parse_syllable(
    fp: &FreeProduct,
    token: &str,
) -> Result<FreeProductElement, CliError> {
    match token {
        "1" => return Ok(FreeProductElement::One),
        "0" => return Ok(FreeProductElement::Zero),
        _ => {}
    }
    let Some((name, factor)) = token.rsplit_once('.') else {
        return Err(CliError::Input(format!(
            "syllable `{token}` must look like name.M or name.N"
        )));
    };
    let tag = match factor {
        "M" => FactorTag::M,
        "N" => FactorTag::N,
        other => return Err(CliError::Input(format!("unknown factor `{other}`"))),
    };
    let table = fp.factor(tag);
    let id = table
        .id_of(name)
        .ok_or_else(|| CliError::Input(format!("unknown element `{name}` in factor {factor}")))?;
    fp.normalize(&[(tag, id)]).map_err(|e| CliError::Input(e.to_string()))
}

fn parse_product(fp: &FreeProduct, tokens: &[&str]) -> Result<FreeProductElement, CliError> {
    let mut acc = FreeProductElement::One;
    for token in tokens {
        if *token == "*" {
            continue;
        }
        let syllable = parse_syllable(fp, token)?;
        acc = fp.multiply(&acc, &syllable).map_err(|e| CliError::Input(e.to_string()))?;
    }
    Ok(acc)
}

pub fn render_element(fp: &FreeProduct, x: &FreeProductElement) -> String {
    match x {
        FreeProductElement::Zero => "0".to_string(),
        FreeProductElement::One => "1".to_string(),
        FreeProductElement::Word(syllables) => syllables
            .iter()
            .map(|&(tag, e)| {
                let factor = match tag {
                    FactorTag::M => "M",
                    FactorTag::N => "N",
                };
                format!("{}.{}", fp.factor(tag).name(e), factor)
            })
            .collect::<Vec<_>>()
            .join(" "),
    }
}

/// Evaluates an expression over the zero-free product of `m` and `n`.
pub fn cmd_freeprod(
    m: &Semigroup,
    n: &Semigroup,
    expr: &str,
    syllable_bound: usize,
) -> Result<Report, CliError> {
    let fp = FreeProduct::new(m, n).map_err(|e| CliError::Input(e.to_string()))?;
    let tokens: Vec<&str> = expr.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(CliError::Input("empty expression".into()));
    }
    let mut report = Report::new("free product");
    if let Some(split) = tokens.iter().position(|t| *t == "|") {
        let lhs = parse_product(&fp, &tokens[..split])?;
        let rhs = parse_product(&fp, &tokens[split + 1..])?;
        let mut section = Section::new("lcm query", &["key", "value"]);
        section.push(vec![Cell::text("lhs"), Cell::text(render_element(&fp, &lhs))]);
        section.push(vec![Cell::text("rhs"), Cell::text(render_element(&fp, &rhs))]);
        section.push(vec![
            Cell::text("lhs divides rhs"),
            Cell::text(fp.divides(&lhs, &rhs).to_string()),
        ]);
        section.push(vec![
            Cell::text("rhs divides lhs"),
            Cell::text(fp.divides(&rhs, &lhs).to_string()),
        ]);
        let lcm = fp
            .lcm(&lhs, &rhs, syllable_bound)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let rendered = match &lcm {
            FpLcm::Resolved(x) => render_element(&fp, x),
            FpLcm::Unresolved => "unresolved".to_string(),
        };
        section.push(vec![Cell::text("lcm"), Cell::text(rendered)]);
        section.push(vec![
            Cell::text("verified to syllable length"),
            Cell::text(syllable_bound.to_string()),
        ]);
        report.sections.push(section);
    } else {
        let value = parse_product(&fp, &tokens)?;
        let mut section = Section::new("normal form", &["key", "value"]);
        section.push(vec![Cell::text("value"), Cell::text(render_element(&fp, &value))]);
        section.push(vec![
            Cell::text("syllables"),
            Cell::text(match &value {
                FreeProductElement::Word(w) => w.len().to_string(),
                _ => "0".to_string(),
            }),
        ]);
        report.sections.push(section);
    }
    Ok(report)
}
