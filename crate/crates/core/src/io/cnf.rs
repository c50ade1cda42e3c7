//! DIMACS CNF, restricted to clauses of exactly three literals.

use crate::cnf::CnfFormula;
use crate::error::{Error, Result};

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses,
/// which may span lines. A `%` line ends the input.
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(syntax(line, "duplicate problem line"));
            }
            let toks: Vec<&str> = trimmed.split_whitespace().collect();
            let ["p", "cnf", vars, count] = toks[..] else {
                return Err(syntax(line, "expected `p cnf <vars> <clauses>`"));
            };
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| syntax(line, format!("expected a count, found `{t}`")))
            };
            header = Some((parse(vars)?, parse(count)?));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(syntax(line, "clause before the problem line"));
        };
        for tok in trimmed.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| syntax(line, format!("expected a literal, found `{tok}`")))?;
            if lit == 0 {
                if current.len() != 3 {
                    return Err(syntax(
                        line,
                        format!("clause has {} literals, expected 3", current.len()),
                    ));
                }
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(syntax(line, format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, count)) = header else {
        return Err(syntax(last_line, "missing problem line"));
    };
    if !current.is_empty() {
        return Err(syntax(last_line, "unterminated clause"));
    }
    if clauses.len() != count {
        return Err(syntax(
            last_line,
            format!("header announces {count} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::from_clauses(vars, clauses)
}

pub fn serialize_cnf(f: &CnfFormula) -> String {
    f.to_string()
}
