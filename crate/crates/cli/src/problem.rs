//! Problem-file grammar.
//!
//! ```text
//! variety lie|assoc
//! mode plain|di|tri
//! gens x > y > z
//! rels
//!   (x -| y) + (y -| x) + y;
//! table
//!   dim 2
//!   basis x y
//!   bracket(1,2) = 1*y
//! end
//! ```
//!
//! Statements are processed in order; `gens` (and for `rels` also `mode`
//! and `variety`) must appear before the blocks that use them. Relation
//! expressions use the shared grammar: parenthesized infix `|-`, `-|`,
//! `<>` in di/tri mode, `*` in plain mode, rational coefficients. Dotted
//! generators are internal and never accepted in relations. Table indices
//! are 1-based into the basis list.

use trigsb::envelopes::{MultTable, TableOp};
use trigsb::gsb::Flavor;
use trigsb::replication::{Mode, TriPoly};
use trigsb::symbols::Alphabet;
use trigsb::text::{self, Cursor, ExprLang, ParseError, Token};
use trigsb::{Rat, TermMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProblemMode {
    Plain,
    Di,
    Tri,
}

impl ProblemMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ProblemMode::Plain => "plain",
            ProblemMode::Di => "di",
            ProblemMode::Tri => "tri",
        }
    }

    pub fn replication(self) -> Option<Mode> {
        match self {
            ProblemMode::Plain => None,
            ProblemMode::Di => Some(Mode::Di),
            ProblemMode::Tri => Some(Mode::Tri),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Relations {
    Plain(Vec<TermMap>),
    Replicated(Vec<TriPoly>),
}

impl Relations {
    pub fn is_empty(&self) -> bool {
        match self {
            Relations::Plain(v) => v.is_empty(),
            Relations::Replicated(v) => v.is_empty(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Relations::Plain(v) => v.len(),
            Relations::Replicated(v) => v.len(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub variety: Flavor,
    pub mode: ProblemMode,
    pub alphabet: Option<Alphabet>,
    pub relations: Relations,
    pub table: Option<MultTable>,
}

const KEYWORDS: &[&str] = &[
    "variety", "mode", "gens", "rels", "table", "end", "dim", "basis", "bracket", "vdash",
    "dashv", "perp", "lie", "assoc", "plain", "di", "tri",
];

fn is_keyword(name: &str) -> bool {
    KEYWORDS.contains(&name)
}

fn ident(cur: &mut Cursor) -> Result<String, ParseError> {
    match cur.peek().cloned() {
        Some(Token::Ident(s)) => {
            cur.next_tok();
            Ok(s)
        }
        Some(t) => Err(cur.error(format!("expected an identifier, found {t}"))),
        None => Err(cur.error("expected an identifier, found end of input")),
    }
}

fn integer(cur: &mut Cursor) -> Result<usize, ParseError> {
    match cur.peek().cloned() {
        Some(Token::Int(n)) => {
            cur.next_tok();
            n.try_into()
                .map_err(|_| cur.error("integer out of range"))
        }
        Some(t) => Err(cur.error(format!("expected an integer, found {t}"))),
        None => Err(cur.error("expected an integer, found end of input")),
    }
}

fn at_keyword(cur: &Cursor) -> bool {
    matches!(cur.peek(), Some(Token::Ident(s)) if is_keyword(s))
}

pub fn parse_problem(input: &str) -> Result<ProblemFile, ParseError> {
    let toks = text::lex(input)?;
    let mut cur = Cursor::new(&toks);
    let mut variety = Flavor::Lie;
    let mut mode = ProblemMode::Plain;
    let mut alphabet: Option<Alphabet> = None;
    let mut relations: Option<Relations> = None;
    let mut table: Option<MultTable> = None;

    while !cur.at_end() {
        let word = ident(&mut cur)?;
        match word.as_str() {
            "variety" => {
                variety = match ident(&mut cur)?.as_str() {
                    "lie" => Flavor::Lie,
                    "assoc" => Flavor::Assoc,
                    other => return Err(cur.error(format!("unknown variety `{other}`"))),
                };
            }
            "mode" => {
                mode = match ident(&mut cur)?.as_str() {
                    "plain" => ProblemMode::Plain,
                    "di" => ProblemMode::Di,
                    "tri" => ProblemMode::Tri,
                    other => return Err(cur.error(format!("unknown mode `{other}`"))),
                };
            }
            "gens" => {
                let mut names = vec![ident(&mut cur)?];
                while cur.peek() == Some(&Token::Gt) {
                    cur.next_tok();
                    names.push(ident(&mut cur)?);
                }
                for n in &names {
                    if is_keyword(n) {
                        return Err(cur.error(format!("`{n}` is a reserved word")));
                    }
                }
                alphabet =
                    Some(Alphabet::double(names).map_err(|e| cur.error(e.to_string()))?);
            }
            "rels" => {
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| cur.error("`rels` requires a preceding `gens` line"))?;
                let mut rels = relations.take().unwrap_or(match mode {
                    ProblemMode::Plain => Relations::Plain(Vec::new()),
                    _ => Relations::Replicated(Vec::new()),
                });
                while !cur.at_end() && !at_keyword(&cur) {
                    let lang = match mode {
                        ProblemMode::Plain => ExprLang::Plain,
                        ProblemMode::Di => ExprLang::Di,
                        ProblemMode::Tri => ExprLang::Tri,
                    };
                    let expr = text::parse_expr(&mut cur, a, lang)?;
                    cur.expect(&Token::Semi)?;
                    match (&mut rels, mode) {
                        (Relations::Plain(v), ProblemMode::Plain) => {
                            let terms = text::lower_plain(&expr, variety)
                                .map_err(|m| cur.error(m))?;
                            v.push(terms);
                        }
                        (Relations::Replicated(v), _) => {
                            let p = text::lower_tri(&expr).map_err(|m| cur.error(m))?;
                            v.push(p);
                        }
                        _ => {
                            return Err(
                                cur.error("`mode` changed between `rels` blocks".to_string())
                            )
                        }
                    }
                }
                relations = Some(rels);
            }
            "table" => {
                table = Some(parse_table(&mut cur)?);
            }
            other => {
                return Err(cur.error(format!("unknown statement `{other}`")));
            }
        }
    }

    let relations = relations.unwrap_or(match mode {
        ProblemMode::Plain => Relations::Plain(Vec::new()),
        _ => Relations::Replicated(Vec::new()),
    });
    Ok(ProblemFile {
        variety,
        mode,
        alphabet,
        relations,
        table,
    })
}

fn parse_table(cur: &mut Cursor) -> Result<MultTable, ParseError> {
    let kw = ident(cur)?;
    if kw != "dim" {
        return Err(cur.error("table block starts with `dim`"));
    }
    let dim = integer(cur)?;
    let kw = ident(cur)?;
    if kw != "basis" {
        return Err(cur.error("expected `basis` after the dimension"));
    }
    let mut labels = Vec::with_capacity(dim);
    for _ in 0..dim {
        let name = ident(cur)?;
        if is_keyword(&name) {
            return Err(cur.error(format!("`{name}` is a reserved word")));
        }
        labels.push(name);
    }
    let mut t = MultTable::new(labels.clone());
    loop {
        let word = ident(cur)?;
        let op = match word.as_str() {
            "end" => break,
            "bracket" => TableOp::Bracket,
            "vdash" => TableOp::Vdash,
            "dashv" => TableOp::Dashv,
            "perp" => TableOp::Perp,
            other => {
                return Err(cur.error(format!(
                    "expected a table operation or `end`, found `{other}`"
                )))
            }
        };
        cur.expect(&Token::LParen)?;
        let i = integer(cur)?;
        cur.expect(&Token::Comma)?;
        let j = integer(cur)?;
        cur.expect(&Token::RParen)?;
        cur.expect(&Token::Eq)?;
        if i == 0 || j == 0 || i > dim || j > dim {
            return Err(cur.error(format!("index ({i},{j}) out of range 1..={dim}")));
        }
        let value = parse_linear(cur, &labels)?;
        t.set(op, i - 1, j - 1, value)
            .map_err(|e| cur.error(e.to_string()))?;
    }
    Ok(t)
}

fn parse_linear(cur: &mut Cursor, labels: &[String]) -> Result<Vec<Rat>, ParseError> {
    use num_traits::Zero;
    let mut out = vec![Rat::zero(); labels.len()];
    // bare zero
    if let Some(Token::Int(n)) = cur.peek() {
        if n.is_zero() {
            cur.next_tok();
            return Ok(out);
        }
    }
    let mut sign = Rat::from_integer(1.into());
    if cur.peek() == Some(&Token::Minus) {
        cur.next_tok();
        sign = -sign;
    }
    loop {
        let coeff = match cur.peek().cloned() {
            Some(Token::Int(n)) => {
                cur.next_tok();
                let c = if cur.peek() == Some(&Token::Slash) {
                    cur.next_tok();
                    match cur.peek().cloned() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            cur.next_tok();
                            Rat::new(n, d)
                        }
                        _ => return Err(cur.error("expected a nonzero denominator")),
                    }
                } else {
                    Rat::from_integer(n)
                };
                if cur.peek() == Some(&Token::Star) {
                    cur.next_tok();
                }
                c
            }
            _ => Rat::from_integer(1.into()),
        };
        let name = ident(cur)?;
        let idx = labels
            .iter()
            .position(|l| *l == name)
            .ok_or_else(|| cur.error(format!("unknown basis label `{name}`")))?;
        out[idx] += coeff * &sign;
        match cur.peek() {
            Some(Token::Plus) => {
                cur.next_tok();
                sign = Rat::from_integer(1.into());
            }
            Some(Token::Minus) => {
                cur.next_tok();
                sign = -Rat::from_integer(1.into());
            }
            _ => break,
        }
    }
    Ok(out)
}
