//! Line-based text formats for circuits and rule catalogs.
//!
//! A circuit file starts with `wires <n>` and lists one gate per line,
//! top to bottom: `swap <k>`, `not <k>`, `t2 <k>` or `t3 <k>` with `k` the
//! 0-based offset of the gate's first wire. Blank lines and `#` comments are
//! ignored.
//!
//! A rule catalog is a sequence of blocks
//!
//! ```text
//! rule <name>
//! wires <n>
//! <gates>
//! =>
//! wires <n>
//! <gates>
//! ```
//!
//! where `⇒` is accepted in place of `=>`.

use std::fmt::Write as _;

use crate::diagram::{Diagram, GateKind, PositionedGate};
use crate::error::{Error, Result};
use crate::rewrite::Rule;

/// A content line: 1-based line number, column of its first token, and text.
#[derive(Debug, Clone, Copy)]
struct Line<'a> {
    number: usize,
    column: usize,
    text: &'a str,
}

fn content_lines(src: &str) -> Vec<Line<'_>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let text = raw.split('#').next().unwrap_or("");
            let trimmed = text.trim();
            (!trimmed.is_empty()).then(|| Line {
                number: i + 1,
                column: text.len() - text.trim_start().len() + 1,
                text: trimmed,
            })
        })
        .collect()
}

fn parse_error(line: &Line<'_>, column: usize, message: String) -> Error {
    Error::Parse {
        line: line.number,
        column,
        message,
    }
}

/// Column of the second whitespace-separated token.
fn second_column(line: &Line<'_>) -> usize {
    let first_len = line.text.split_whitespace().next().map_or(0, str::len);
    let rest = &line.text[first_len..];
    line.column + first_len + (rest.len() - rest.trim_start().len())
}

fn parse_number(line: &Line<'_>, token: Option<&str>, what: &str) -> Result<usize> {
    let col = second_column(line);
    let tok = token.ok_or_else(|| parse_error(line, col, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_error(line, col, format!("invalid {what} `{tok}`")))
}

fn parse_lines(lines: &[Line<'_>], eof_line: usize) -> Result<Diagram> {
    let Some((header, body)) = lines.split_first() else {
        return Err(Error::Parse {
            line: eof_line,
            column: 1,
            message: "missing `wires <n>` header".into(),
        });
    };
    let mut tokens = header.text.split_whitespace();
    if tokens.next() != Some("wires") {
        return Err(parse_error(
            header,
            header.column,
            format!("expected `wires <n>`, found `{}`", header.text),
        ));
    }
    let width = parse_number(header, tokens.next(), "wire count")?;
    if let Some(extra) = tokens.next() {
        return Err(parse_error(
            header,
            header.column,
            format!("unexpected token `{extra}`"),
        ));
    }

    let mut gates = Vec::with_capacity(body.len());
    for line in body {
        let mut tokens = line.text.split_whitespace();
        let kw = tokens.next().unwrap_or_default();
        let kind = GateKind::from_keyword(kw)
            .ok_or_else(|| parse_error(line, line.column, format!("unknown gate `{kw}`")))?;
        let offset = parse_number(line, tokens.next(), "offset")?;
        if let Some(extra) = tokens.next() {
            return Err(parse_error(
                line,
                line.column,
                format!("unexpected token `{extra}`"),
            ));
        }
        let gate = PositionedGate::new(kind, offset);
        if gate.end() > width {
            return Err(parse_error(
                line,
                second_column(line),
                format!(
                    "OutOfRange: {kind} at offset {offset} needs wires {offset}..{} but the width is {width}",
                    gate.end()
                ),
            ));
        }
        gates.push(gate);
    }
    Diagram::new(width, gates)
}

pub fn parse_circuit(src: &str) -> Result<Diagram> {
    parse_lines(&content_lines(src), src.lines().count().max(1))
}

pub fn print_circuit(d: &Diagram) -> String {
    let mut out = format!("wires {}\n", d.width());
    for g in d.gates() {
        let _ = writeln!(out, "{} {}", g.kind.keyword(), g.offset);
    }
    out
}

pub fn parse_rules(src: &str) -> Result<Vec<Rule>> {
    let lines = content_lines(src);
    let mut rules = Vec::new();
    let mut rest = lines.as_slice();
    while let Some((head, body)) = rest.split_first() {
        let name = match head.text.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["rule", name] => name.to_string(),
            _ => {
                return Err(parse_error(
                    head,
                    head.column,
                    format!("expected `rule <name>`, found `{}`", head.text),
                ))
            }
        };
        let end = body
            .iter()
            .position(|l| l.text.starts_with("rule ") || l.text == "rule")
            .unwrap_or(body.len());
        let block = &body[..end];
        let arrow = block
            .iter()
            .position(|l| l.text == "=>" || l.text == "⇒")
            .ok_or_else(|| parse_error(head, head.column, format!("rule {name}: missing `=>`")))?;
        let arrow_line = block[arrow].number;
        let lhs = parse_lines(&block[..arrow], arrow_line)?;
        let rhs = parse_lines(&block[arrow + 1..], arrow_line)?;
        rules.push(Rule::new(name, lhs, rhs)?);
        rest = &body[end..];
    }
    Ok(rules)
}

pub fn print_rules(rules: &[Rule]) -> String {
    let mut out = String::new();
    for r in rules {
        let _ = writeln!(out, "rule {}", r.name());
        out.push_str(&print_circuit(r.lhs()));
        out.push_str("=>\n");
        out.push_str(&print_circuit(r.rhs()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::builtin_rules;

    #[test]
    fn fig_one_file() {
        let src = "# figure 1b\nwires 4\nt3 0\nswap 2\nswap 1\nswap 0\n\nt3 1   # last\n";
        let d = parse_circuit(src).unwrap();
        assert_eq!(
            d,
            Diagram::from_compact(4, "t3@0 sw@2 sw@1 sw@0 t3@1").unwrap()
        );
        assert_eq!(
            print_circuit(&d),
            "wires 4\nt3 0\nswap 2\nswap 1\nswap 0\nt3 1\n"
        );
    }

    #[test]
    fn header_only() {
        assert_eq!(parse_circuit("wires 3\n").unwrap(), Diagram::identity(3));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_circuit("wires 2\nt3 0\n"),
            Err(Error::Parse {
                line: 2,
                column: 4,
                message: "OutOfRange: t3 at offset 0 needs wires 0..3 but the width is 2".into()
            })
        );
        assert!(matches!(
            parse_circuit("wires 2\n  cnot 0\n"),
            Err(Error::Parse {
                line: 2,
                column: 3,
                ..
            })
        ));
        assert!(matches!(
            parse_circuit("wires x\n"),
            Err(Error::Parse {
                line: 1,
                column: 7,
                ..
            })
        ));
        assert!(matches!(
            parse_circuit("# nothing\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_circuit("not 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_circuit("wires 2\nswap\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn rule_catalog_round_trip() {
        let text = print_rules(&builtin_rules());
        assert_eq!(parse_rules(&text).unwrap(), builtin_rules());
    }

    #[test]
    fn rule_file_with_unicode_arrow() {
        let src = "rule cancel\nwires 1\nnot 0\nnot 0\n⇒\nwires 1\n";
        let rules = parse_rules(src).unwrap();
        assert_eq!(rules.len(), 1);
        assert_eq!(rules[0].name(), "cancel");
        assert!(rules[0].rhs().is_identity());
    }

    #[test]
    fn rule_file_rejects_unsound_rules() {
        let src = "rule bogus\nwires 1\nnot 0\n=>\nwires 1\n";
        assert!(matches!(parse_rules(src), Err(Error::InvalidRule { .. })));
        let src = "rule noarrow\nwires 1\nnot 0\n";
        assert!(matches!(
            parse_rules(src),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
