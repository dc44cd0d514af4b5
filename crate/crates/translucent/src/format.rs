//! Line-oriented text format for automata, plus DOT export.
//!
//! ```text
//! alphabet: a b c d
//! states: q0 q qa qb qc qd
//! initial: q0
//! final: q
//! translucent q0: b c d
//! trans q0 a -> qa
//! ```
//!
//! `#` starts a comment, blank lines are ignored, repeated `trans` lines
//! with the same state and letter accumulate targets, and a state without a
//! `translucent` line has no translucent letters.

use thiserror::Error;

use crate::automaton::{Automaton, RawAutomaton, ValidationError};

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{}", format_validation_errors(.0))]
    Validation(Vec<ValidationError>),
}

fn format_validation_errors(errors: &[ValidationError]) -> String {
    let lines: Vec<String> = errors.iter().map(|e| e.to_string()).collect();
    lines.join("; ")
}

pub fn parse(text: &str) -> Result<Automaton, ParseError> {
    let syntax = |line: usize, message: String| ParseError::Syntax { line, message };
    let mut raw = RawAutomaton::default();
    let mut seen = [false; 4];
    const SECTIONS: [&str; 4] = ["alphabet:", "states:", "initial:", "final:"];
    let mut line_count = 0;
    for (idx, full_line) in text.lines().enumerate() {
        line_count = idx + 1;
        let uncommented = full_line.split('#').next().unwrap_or("");
        let mut tokens = uncommented.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        let rest: Vec<String> = tokens.map(str::to_string).collect();
        if let Some(section) = SECTIONS.iter().position(|s| *s == head) {
            if seen[section] {
                return Err(syntax(
                    line_count,
                    format!("duplicate section {head:?}"),
                ));
            }
            seen[section] = true;
            match section {
                0 => raw.alphabet = rest,
                1 => raw.states = rest,
                2 => raw.initial = rest,
                _ => raw.finals = rest,
            }
            continue;
        }
        match head {
            "translucent" => {
                let state = rest
                    .first()
                    .and_then(|s| s.strip_suffix(':'))
                    .filter(|s| !s.is_empty());
                let Some(state) = state else {
                    return Err(syntax(
                        line_count,
                        "expected `translucent <state>: <letters>`".to_string(),
                    ));
                };
                raw.translucent
                    .push((state.to_string(), rest[1..].to_vec()));
            }
            "trans" => {
                let parts: Result<[String; 4], _> = rest.try_into();
                match parts {
                    Ok([from, letter, arrow, to]) if arrow == "->" => {
                        raw.transitions.push((from, letter, to));
                    }
                    _ => {
                        return Err(syntax(
                            line_count,
                            "expected `trans <state> <letter> -> <state>`".to_string(),
                        ))
                    }
                }
            }
            other => {
                return Err(syntax(
                    line_count,
                    format!("unrecognized directive {other:?}"),
                ))
            }
        }
    }
    for (i, name) in SECTIONS.iter().enumerate() {
        if !seen[i] {
            return Err(syntax(
                line_count + 1,
                format!("missing required section {name:?}"),
            ));
        }
    }
    raw.validate().map_err(ParseError::Validation)
}

/// Canonical emission; `parse(serialize(a))` reproduces `a` exactly.
pub fn serialize(a: &Automaton) -> String {
    fn line(out: &mut String, head: &str, items: &[String]) {
        out.push_str(head);
        for item in items {
            out.push(' ');
            out.push_str(item);
        }
        out.push('\n');
    }
    let raw = a.to_raw();
    let mut out = String::new();
    line(&mut out, "alphabet:", &raw.alphabet);
    line(&mut out, "states:", &raw.states);
    line(&mut out, "initial:", &raw.initial);
    line(&mut out, "final:", &raw.finals);
    for (state, letters) in &raw.translucent {
        line(&mut out, &format!("translucent {state}:"), letters);
    }
    for (from, letter, to) in &raw.transitions {
        out.push_str(&format!("trans {from} {letter} -> {to}\n"));
    }
    out
}

/// DOT digraph: initial states get an incoming arrow from a point node,
/// final states are double circles, and each state label carries its set of
/// translucent letters when non-empty.
pub fn export_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for (i, q) in a.initial().iter().enumerate() {
        out.push_str(&format!("  \"__init{i}\" [shape=point];\n"));
        out.push_str(&format!("  \"__init{i}\" -> \"{}\";\n", a.state_name(*q)));
    }
    for q in a.state_ids() {
        let shape = if a.is_final(q) { "doublecircle" } else { "circle" };
        let tau = a.translucent(q);
        let label = if tau.is_empty() {
            a.state_name(q).to_string()
        } else {
            format!("{}\\n{}", a.state_name(q), a.alphabet().format_symbol_set(tau))
        };
        out.push_str(&format!(
            "  \"{}\" [shape={shape}, label=\"{label}\"];\n",
            a.state_name(q)
        ));
    }
    for q in a.state_ids() {
        for sym in a.alphabet().ids() {
            for &t in a.targets(q, sym) {
                out.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    a.state_name(q),
                    a.state_name(t),
                    a.alphabet().token(sym)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}
