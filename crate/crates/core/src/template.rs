//! Integer templates in fixture strings: `a1^{p+1}`, `E3_{j-1}`, `a^{1-2q}`.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("template: {0}")]
pub struct TemplateError(pub String);

/// Replaces every `{expr}` by the value of a linear integer expression in
/// the given variables, e.g. `{p+1}`, `{1-2q}`, `{-q}`.
pub fn expand_template(s: &str, vars: &[(&str, i64)]) -> Result<String, TemplateError> {
    let mut out = String::new();
    let mut rest = s;
    while let Some(i) = rest.find('{') {
        out.push_str(&rest[..i]);
        let j = rest[i..]
            .find('}')
            .ok_or_else(|| TemplateError(format!("unclosed template in `{s}`")))?;
        out.push_str(&eval_linear(&rest[i + 1..i + j], vars)?.to_string());
        rest = &rest[i + j + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

fn eval_linear(e: &str, vars: &[(&str, i64)]) -> Result<i64, TemplateError> {
    let bad = || TemplateError(format!("bad template expression `{e}`"));
    let e: String = e.chars().filter(|c| !c.is_whitespace()).collect();
    if e.is_empty() {
        return Err(bad());
    }
    let mut total = 0i64;
    let mut chars = e.chars().peekable();
    while chars.peek().is_some() {
        let mut sign = 1;
        if let Some(&c) = chars.peek() {
            if c == '+' || c == '-' {
                sign = if c == '-' { -1 } else { 1 };
                chars.next();
            }
        }
        let mut digits = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                chars.next();
            } else {
                break;
            }
        }
        let mut name = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_alphabetic() {
                name.push(c);
                chars.next();
            } else {
                break;
            }
        }
        if digits.is_empty() && name.is_empty() {
            return Err(bad());
        }
        let coef: i64 = if digits.is_empty() {
            1
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let val = if name.is_empty() {
            1
        } else {
            vars.iter()
                .find(|(n, _)| *n == name)
                .map(|(_, v)| *v)
                .ok_or_else(bad)?
        };
        total += sign * coef * val;
    }
    Ok(total)
}
