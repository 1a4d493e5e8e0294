//! The `.fzw` block format.
//!
//! ```text
//! group z2
//! elements e a
//! table
//! e a
//! a e
//! end
//!
//! fuzzy mu1 on z2
//! values e=1 a=1/2
//! end
//! ```
//!
//! Also `monoid <name>` (with `elements`, `unit`, `table`, optional
//! `claims f-inverse clifford`) and `morphism <name> from <fuzzy> to <fuzzy>`
//! (with `f x=y ...` and `lambda u=v ...`). `#` starts a comment.

use std::collections::HashMap;
use std::sync::Arc;

use fuzzcover::{
    validate_fg_morphism, validate_fuzzy, validate_group, validate_inverse_monoid, ErrorKind,
    FGMorphism, FiniteGroup, FiniteInverseMonoid, FuzzySubgroup, MembershipValue,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unknown {kind} {name:?}")]
    UnknownReference {
        line: usize,
        col: usize,
        kind: &'static str,
        name: String,
    },
    #[error("{line}: {kind} {name}: {source}")]
    Validation {
        line: usize,
        kind: &'static str,
        name: String,
        source: Box<fuzzcover::Error>,
    },
}

impl ParseError {
    /// 1 for syntax and references, otherwise by the kind of the wrapped error.
    pub fn exit_code(&self) -> i32 {
        match self {
            ParseError::Syntax { .. } | ParseError::UnknownReference { .. } => 1,
            ParseError::Validation { source, .. } => match source.kind() {
                ErrorKind::Validation => 2,
                ErrorKind::Budget => 3,
                ErrorKind::Theorem => 4,
            },
        }
    }

    pub fn category(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::UnknownReference { .. } => "unknown-reference",
            ParseError::Validation { .. } => "validation",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    FInverse,
    Clifford,
}

impl Claim {
    pub fn keyword(self) -> &'static str {
        match self {
            Claim::FInverse => "f-inverse",
            Claim::Clifford => "clifford",
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupDecl {
    pub name: String,
    pub line: usize,
    pub group: FiniteGroup,
}

#[derive(Debug, Clone)]
pub struct FuzzyDecl {
    pub name: String,
    pub line: usize,
    pub group: String,
    pub fuzzy: Arc<FuzzySubgroup>,
}

#[derive(Debug, Clone)]
pub struct MonoidDecl {
    pub name: String,
    pub line: usize,
    pub monoid: FiniteInverseMonoid,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone)]
pub struct MorphismDecl {
    pub name: String,
    pub line: usize,
    pub source: String,
    pub target: String,
    pub morphism: FGMorphism,
}

/// Every block of a file, in declaration order.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub groups: Vec<GroupDecl>,
    pub fuzzy: Vec<FuzzyDecl>,
    pub monoids: Vec<MonoidDecl>,
    pub morphisms: Vec<MorphismDecl>,
}

impl Workspace {
    pub fn group(&self, name: &str) -> Option<&GroupDecl> {
        self.groups.iter().find(|g| g.name == name)
    }

    pub fn fuzzy(&self, name: &str) -> Option<&FuzzyDecl> {
        self.fuzzy.iter().find(|f| f.name == name)
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    line: usize,
    col: usize,
    text: &'a str,
}

fn tokenize(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in code
        .char_indices()
        .chain(std::iter::once((code.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    line: line_no,
                    col: code[..s].chars().count() + 1,
                    text: &code[s..i],
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn syntax(t: Token<'_>, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line: t.line,
        col: t.col,
        message: message.into(),
    }
}

struct Lines<'a> {
    lines: Vec<Vec<Token<'a>>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<Vec<Token<'a>>> {
        let line = self.lines.get(self.pos).cloned();
        self.pos += 1;
        line
    }

    /// The next line of the block that opened at `opener`.
    fn body(&mut self, opener: Token<'a>) -> Result<Vec<Token<'a>>, ParseError> {
        self.next().ok_or_else(|| ParseError::Syntax {
            line: self.last_line + 1,
            col: 1,
            message: format!("block opened at line {} is missing `end`", opener.line),
        })
    }
}

fn expect_arity(line: &[Token<'_>], n: usize, usage: &str) -> Result<(), ParseError> {
    if line.len() == n {
        Ok(())
    } else if line.len() > n {
        Err(syntax(
            line[n],
            format!("unexpected token {:?}, usage: {usage}", line[n].text),
        ))
    } else {
        let last = line[line.len() - 1];
        Err(ParseError::Syntax {
            line: last.line,
            col: last.col + last.text.chars().count(),
            message: format!("incomplete line, usage: {usage}"),
        })
    }
}

fn parse_value(t: Token<'_>, text: &str, col_offset: usize) -> Result<MembershipValue, ParseError> {
    text.parse::<MembershipValue>()
        .map_err(|e| ParseError::Syntax {
            line: t.line,
            col: t.col + col_offset,
            message: e.to_string(),
        })
}

/// `key=value` pairs from the tokens after the keyword.
fn assignments<'a>(tokens: &[Token<'a>]) -> Result<Vec<(Token<'a>, &'a str, &'a str)>, ParseError> {
    tokens
        .iter()
        .map(|&t| match t.text.split_once('=') {
            Some((k, v)) if !k.is_empty() && !v.is_empty() => Ok((t, k, v)),
            _ => Err(syntax(
                t,
                format!("expected name=value, found {:?}", t.text),
            )),
        })
        .collect()
}

fn element_index(
    names: &HashMap<&str, usize>,
    t: Token<'_>,
    name: &str,
    col_offset: usize,
) -> Result<usize, ParseError> {
    names
        .get(name)
        .copied()
        .ok_or_else(|| ParseError::UnknownReference {
            line: t.line,
            col: t.col + col_offset,
            kind: "element",
            name: name.to_string(),
        })
}

/// `elements` then `table` with one row per element.
struct TableBlock<'a> {
    names: Vec<String>,
    rows: Vec<Vec<usize>>,
    unit: Option<Token<'a>>,
    claims: Vec<Claim>,
}

fn parse_table_block<'a>(
    lines: &mut Lines<'a>,
    opener: Token<'a>,
    monoid: bool,
) -> Result<TableBlock<'a>, ParseError> {
    let first = lines.body(opener)?;
    if first[0].text != "elements" {
        return Err(syntax(
            first[0],
            format!("expected `elements`, found {:?}", first[0].text),
        ));
    }
    if first.len() < 2 {
        return Err(syntax(first[0], "`elements` needs at least one name"));
    }
    let names: Vec<String> = first[1..].iter().map(|t| t.text.to_string()).collect();
    let mut index = HashMap::new();
    for t in &first[1..] {
        if index.insert(t.text, index.len()).is_some() {
            return Err(syntax(*t, format!("duplicate element name {:?}", t.text)));
        }
    }
    let mut block = TableBlock {
        names,
        rows: Vec::new(),
        unit: None,
        claims: Vec::new(),
    };
    let mut seen_table = false;
    loop {
        let line = lines.body(opener)?;
        let head = line[0];
        match head.text {
            "end" => {
                expect_arity(&line, 1, "end")?;
                if !seen_table {
                    return Err(syntax(head, "block has no `table`"));
                }
                if monoid && block.unit.is_none() {
                    return Err(syntax(head, "monoid block has no `unit`"));
                }
                return Ok(block);
            }
            "table" if !seen_table => {
                expect_arity(&line, 1, "table")?;
                seen_table = true;
                for _ in 0..index.len() {
                    let row = lines.body(opener)?;
                    let parsed = row
                        .iter()
                        .map(|&t| element_index(&index, t, t.text, 0))
                        .collect::<Result<Vec<_>, _>>()?;
                    if parsed.len() != index.len() {
                        let at = row.get(index.len()).copied().unwrap_or(row[row.len() - 1]);
                        return Err(syntax(
                            at,
                            format!(
                                "table row needs {} entries, found {}",
                                index.len(),
                                parsed.len()
                            ),
                        ));
                    }
                    block.rows.push(parsed);
                }
            }
            "unit" if monoid && block.unit.is_none() => {
                expect_arity(&line, 2, "unit <element>")?;
                element_index(&index, line[1], line[1].text, 0)?;
                block.unit = Some(line[1]);
            }
            "claims" if monoid && block.claims.is_empty() => {
                if line.len() < 2 {
                    return Err(syntax(
                        head,
                        "`claims` needs at least one of f-inverse, clifford",
                    ));
                }
                for &t in &line[1..] {
                    let claim = match t.text {
                        "f-inverse" => Claim::FInverse,
                        "clifford" => Claim::Clifford,
                        other => return Err(syntax(t, format!("unknown claim {other:?}"))),
                    };
                    if !block.claims.contains(&claim) {
                        block.claims.push(claim);
                    }
                }
            }
            other => return Err(syntax(head, format!("unexpected {other:?} inside block"))),
        }
    }
}

fn validation(
    line: usize,
    kind: &'static str,
    name: &str,
    source: impl Into<fuzzcover::Error>,
) -> ParseError {
    ParseError::Validation {
        line,
        kind,
        name: name.to_string(),
        source: Box::new(source.into()),
    }
}

pub fn parse_workspace(text: &str) -> Result<Workspace, ParseError> {
    let raw: Vec<Vec<Token<'_>>> = text
        .lines()
        .enumerate()
        .map(|(i, l)| tokenize(i + 1, l))
        .collect();
    let last_line = raw.len();
    let mut lines = Lines {
        lines: raw.into_iter().filter(|l| !l.is_empty()).collect(),
        pos: 0,
        last_line,
    };
    let mut ws = Workspace::default();
    while let Some(header) = lines.next() {
        let head = header[0];
        match head.text {
            "group" => {
                expect_arity(&header, 2, "group <name>")?;
                let name = header[1];
                if ws.group(name.text).is_some() {
                    return Err(syntax(
                        name,
                        format!("duplicate group name {:?}", name.text),
                    ));
                }
                let block = parse_table_block(&mut lines, head, false)?;
                let group = validate_group(block.names, &block.rows)
                    .map_err(|e| validation(head.line, "group", name.text, e))?;
                ws.groups.push(GroupDecl {
                    name: name.text.to_string(),
                    line: head.line,
                    group,
                });
            }
            "monoid" => {
                expect_arity(&header, 2, "monoid <name>")?;
                let name = header[1];
                if ws.monoids.iter().any(|m| m.name == name.text) {
                    return Err(syntax(
                        name,
                        format!("duplicate monoid name {:?}", name.text),
                    ));
                }
                let block = parse_table_block(&mut lines, head, true)?;
                let unit = block
                    .names
                    .iter()
                    .position(|n| n == block.unit.unwrap().text)
                    .unwrap();
                let monoid = validate_inverse_monoid(block.names, &block.rows, unit)
                    .map_err(|e| validation(head.line, "monoid", name.text, e))?;
                ws.monoids.push(MonoidDecl {
                    name: name.text.to_string(),
                    line: head.line,
                    monoid,
                    claims: block.claims,
                });
            }
            "fuzzy" => {
                expect_arity(&header, 4, "fuzzy <name> on <group>")?;
                let (name, on, group_name) = (header[1], header[2], header[3]);
                if on.text != "on" {
                    return Err(syntax(on, format!("expected `on`, found {:?}", on.text)));
                }
                if ws.fuzzy(name.text).is_some() {
                    return Err(syntax(
                        name,
                        format!("duplicate fuzzy subgroup name {:?}", name.text),
                    ));
                }
                let group = ws
                    .group(group_name.text)
                    .ok_or_else(|| ParseError::UnknownReference {
                        line: group_name.line,
                        col: group_name.col,
                        kind: "group",
                        name: group_name.text.to_string(),
                    })?
                    .group
                    .clone();
                let values = lines.body(head)?;
                if values[0].text != "values" {
                    return Err(syntax(
                        values[0],
                        format!("expected `values`, found {:?}", values[0].text),
                    ));
                }
                let index: HashMap<&str, usize> = group
                    .names()
                    .iter()
                    .enumerate()
                    .map(|(i, n)| (n.as_str(), i))
                    .collect();
                let mut mu: Vec<Option<MembershipValue>> = vec![None; group.order()];
                for (t, k, v) in assignments(&values[1..])? {
                    let x = element_index(&index, t, k, 0)?;
                    if mu[x].is_some() {
                        return Err(syntax(t, format!("second value for {k:?}")));
                    }
                    mu[x] = Some(parse_value(t, v, k.chars().count() + 1)?);
                }
                if let Some(x) = mu.iter().position(Option::is_none) {
                    return Err(syntax(
                        values[0],
                        format!("no value for element {:?}", group.name(x)),
                    ));
                }
                let end = lines.body(head)?;
                if end[0].text != "end" {
                    return Err(syntax(
                        end[0],
                        format!("expected `end`, found {:?}", end[0].text),
                    ));
                }
                expect_arity(&end, 1, "end")?;
                let fuzzy = validate_fuzzy(group, mu.into_iter().map(Option::unwrap).collect())
                    .map_err(|e| validation(head.line, "fuzzy", name.text, e))?;
                ws.fuzzy.push(FuzzyDecl {
                    name: name.text.to_string(),
                    line: head.line,
                    group: group_name.text.to_string(),
                    fuzzy: Arc::new(fuzzy),
                });
            }
            "morphism" => {
                ws.morphisms.push(parse_morphism(&ws, &header, &mut lines)?);
            }
            other => {
                return Err(syntax(
                    head,
                    format!("expected `group`, `fuzzy`, `monoid` or `morphism`, found {other:?}"),
                ))
            }
        }
    }
    Ok(ws)
}

fn parse_morphism<'a>(
    ws: &Workspace,
    header: &[Token<'a>],
    lines: &mut Lines<'a>,
) -> Result<MorphismDecl, ParseError> {
    expect_arity(header, 6, "morphism <name> from <fuzzy> to <fuzzy>")?;
    let head = header[0];
    let name = header[1];
    for (t, word) in [(header[2], "from"), (header[4], "to")] {
        if t.text != word {
            return Err(syntax(t, format!("expected `{word}`, found {:?}", t.text)));
        }
    }
    if ws.morphisms.iter().any(|m| m.name == name.text) {
        return Err(syntax(
            name,
            format!("duplicate morphism name {:?}", name.text),
        ));
    }
    let lookup = |t: Token<'_>| {
        ws.fuzzy(t.text)
            .ok_or_else(|| ParseError::UnknownReference {
                line: t.line,
                col: t.col,
                kind: "fuzzy subgroup",
                name: t.text.to_string(),
            })
    };
    let (source, target) = (lookup(header[3])?, lookup(header[5])?);
    let (g, h) = (source.fuzzy.group(), target.fuzzy.group());
    let g_names: HashMap<&str, usize> = g
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let h_names: HashMap<&str, usize> = h
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let mut f: Option<Vec<usize>> = None;
    let mut lambda: Option<Vec<usize>> = None;
    loop {
        let line = lines.body(head)?;
        let key = line[0];
        match key.text {
            "end" => {
                expect_arity(&line, 1, "end")?;
                break;
            }
            "f" if f.is_none() => {
                let mut map = vec![None; g.order()];
                for (t, k, v) in assignments(&line[1..])? {
                    let x = element_index(&g_names, t, k, 0)?;
                    if map[x].is_some() {
                        return Err(syntax(t, format!("second image for {k:?}")));
                    }
                    map[x] = Some(element_index(&h_names, t, v, k.chars().count() + 1)?);
                }
                if let Some(x) = map.iter().position(Option::is_none) {
                    return Err(syntax(key, format!("no image for element {:?}", g.name(x))));
                }
                f = Some(map.into_iter().map(Option::unwrap).collect());
            }
            "lambda" if lambda.is_none() => {
                let (u, v) = (source.fuzzy.chain(), target.fuzzy.chain());
                let mut map = vec![None; u.len()];
                for (t, k, val) in assignments(&line[1..])? {
                    let a = parse_value(t, k, 0)?;
                    let b = parse_value(t, val, k.chars().count() + 1)?;
                    let i = u.binary_search(&a).map_err(|_| {
                        syntax(
                            t,
                            format!("{a} is not a membership value of {}", source.name),
                        )
                    })?;
                    let j = v.binary_search(&b).map_err(|_| {
                        let col = k.chars().count() + 1;
                        ParseError::Syntax {
                            line: t.line,
                            col: t.col + col,
                            message: format!("{b} is not a membership value of {}", target.name),
                        }
                    })?;
                    if map[i].is_some() {
                        return Err(syntax(t, format!("second image for {a}")));
                    }
                    map[i] = Some(j);
                }
                if let Some(i) = map.iter().position(Option::is_none) {
                    return Err(syntax(key, format!("no image for value {}", u[i])));
                }
                lambda = Some(map.into_iter().map(Option::unwrap).collect());
            }
            other => {
                return Err(syntax(
                    key,
                    format!("unexpected {other:?} inside morphism block"),
                ))
            }
        }
    }
    let (Some(f), Some(lambda)) = (f, lambda) else {
        return Err(syntax(head, "morphism block needs both `f` and `lambda`"));
    };
    let morphism = validate_fg_morphism(&source.fuzzy, &target.fuzzy, f, lambda)
        .map_err(|e| validation(head.line, "morphism", name.text, e))?;
    Ok(MorphismDecl {
        name: name.text.to_string(),
        line: head.line,
        source: source.name.clone(),
        target: target.name.clone(),
        morphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = "group z2\nelements e a\ntable\ne a\na e\nend\n";

    #[test]
    fn well_formed_group_and_fuzzy_block() {
        let ws = parse_workspace(&format!(
            "{Z2}# membership\nfuzzy mu1 on z2\nvalues e=1 a=1/2\nend\n"
        ))
        .unwrap();
        assert_eq!(ws.groups.len(), 1);
        assert_eq!(ws.fuzzy.len(), 1);
        assert_eq!(ws.fuzzy[0].fuzzy.format_values(), "e=1 a=1/2");
    }

    #[test]
    fn unknown_group() {
        let err = parse_workspace("fuzzy mu on z9\nvalues e=1\nend\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownReference {
                line: 1,
                col: 13,
                kind: "group",
                name: "z9".into()
            }
        );
        assert_eq!(err.exit_code(), 1);
    }

    #[test]
    fn axiom_violation_names_elements() {
        let text = "group z3\nelements e a b\ntable\ne a b\na b e\nb e a\nend\nfuzzy bad on z3\nvalues e=1 a=1 b=1/2\nend\n";
        let err = parse_workspace(text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert_eq!(
            err.to_string(),
            "8: fuzzy bad: axiom (2) fails at a: μ(x⁻¹) != μ(x)"
        );
        let v4 = "group v4\nelements e a b c\ntable\ne a b c\na e c b\nb c e a\nc b a e\nend\n";
        let err = parse_workspace(&format!(
            "{v4}fuzzy bad on v4\nvalues e=1 a=1 b=1 c=1/2\nend\n"
        ))
        .unwrap_err();
        assert_eq!(
            err.to_string(),
            "9: fuzzy bad: axiom (1) fails at (a, b): μ(xy) < min(μ(x), μ(y))"
        );
    }

    #[test]
    fn syntax_positions() {
        let err = parse_workspace("group z2\nelements e a\ntable\ne a\na\nend\n").unwrap_err();
        assert!(
            matches!(
                err,
                ParseError::Syntax {
                    line: 5,
                    col: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err =
            parse_workspace(&format!("{Z2}fuzzy m on z2\nvalues e=1 a=x\nend\n")).unwrap_err();
        assert!(
            matches!(
                err,
                ParseError::Syntax {
                    line: 8,
                    col: 14,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_workspace("group z2\nelements e a\n").unwrap_err();
        assert!(
            matches!(
                err,
                ParseError::Syntax {
                    line: 3,
                    col: 1,
                    ..
                }
            ),
            "{err}"
        );
        let err = parse_workspace("banana\n").unwrap_err();
        assert_eq!(err.category(), "syntax");
    }

    #[test]
    fn monoid_blocks_and_claims() {
        let text =
            "monoid two\nelements 0 1\nunit 1\ntable\n0 0\n0 1\nclaims clifford f-inverse\nend\n";
        let ws = parse_workspace(text).unwrap();
        assert_eq!(ws.monoids[0].claims, vec![Claim::Clifford, Claim::FInverse]);
        assert_eq!(ws.monoids[0].monoid.unit(), 1);
        let err = parse_workspace(&text.replace("unit 1\n", "")).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { .. }));
    }

    #[test]
    fn morphism_blocks() {
        let text = format!(
            "{Z2}fuzzy mu1 on z2\nvalues e=1 a=1/2\nend\nfuzzy one on z2\nvalues e=1 a=1\nend\n\
             morphism m from mu1 to one\nf e=e a=e\nlambda 1/2=1 1=1\nend\n"
        );
        let ws = parse_workspace(&text).unwrap();
        assert_eq!(ws.morphisms[0].morphism.f(), &[0, 0]);
        assert_eq!(ws.morphisms[0].morphism.lambda(), &[0, 0]);
        let bad = text.replace("f e=e a=e", "f e=a a=e");
        let err = parse_workspace(&bad).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let missing = text.replace("from mu1", "from mu7");
        assert!(matches!(
            parse_workspace(&missing),
            Err(ParseError::UnknownReference {
                kind: "fuzzy subgroup",
                ..
            })
        ));
    }
}
