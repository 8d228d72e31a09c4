//! Canonical printing and parsing.
//!
//! One grammar is shared by reports, the Gröbner–Shirshov cache format and
//! the CLI: rational coefficients `p/q`, `+`/`-` between terms, bracketed
//! monomials `[a [a b]]` for the Lie flavor, space-separated words for the
//! associative flavor, and parenthesized infix operations `|-`, `-|`, `<>`,
//! `*` for relation expressions. Dotted letters print with a trailing dot
//! (`x.`); they are accepted only where canonical polynomials are read back
//! (cache files), never in user relation expressions.

use crate::gsb::Flavor;
use crate::lie_poly::{BracketTree, LiePoly};
use crate::lyndon::NlsWord;
use crate::poly::{self, TermMap};
use crate::replication::{Mode, TriOp, TriPoly, TriTerm};
use crate::symbols::{Alphabet, Gen};
use crate::words::Word;
use crate::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

// ---------------------------------------------------------------- printing

pub fn word_string(alphabet: &Alphabet, w: &Word) -> String {
    w.letters()
        .iter()
        .map(|&g| alphabet.display_gen(g))
        .collect::<Vec<_>>()
        .join(" ")
}

fn tree_string(alphabet: &Alphabet, t: &BracketTree) -> String {
    match t {
        BracketTree::Leaf(g) => alphabet.display_gen(*g),
        BracketTree::Node(l, r) => format!(
            "[{} {}]",
            tree_string(alphabet, l),
            tree_string(alphabet, r)
        ),
    }
}

/// Standard bracketing of an LS word, printed with square brackets.
pub fn nls_string(alphabet: &Alphabet, w: &Word) -> String {
    let nls = NlsWord::new(w.clone()).expect("Lie monomials are LS words");
    tree_string(alphabet, &crate::lie_poly::tree_of(&nls))
}

pub fn monomial_string(alphabet: &Alphabet, flavor: Flavor, w: &Word) -> String {
    match flavor {
        Flavor::Lie => nls_string(alphabet, w),
        Flavor::Assoc => word_string(alphabet, w),
    }
}

/// Canonical polynomial text: monomials in descending deg-lex order, leading
/// term first, coefficients in lowest terms, `1` left implicit.
pub fn poly_string(alphabet: &Alphabet, flavor: Flavor, terms: &TermMap) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in terms.iter().rev().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push_str("- ");
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&monomial_string(alphabet, flavor, w));
    }
    out
}

pub fn tri_term_string(alphabet: &Alphabet, t: &TriTerm) -> String {
    match t {
        TriTerm::Leaf(g) => alphabet.display_gen(*g),
        TriTerm::Node(op, l, r) => {
            let sym = match op {
                TriOp::Vdash => "|-",
                TriOp::Dashv => "-|",
                TriOp::Perp => "<>",
            };
            format!(
                "({} {} {})",
                tri_term_string(alphabet, l),
                sym,
                tri_term_string(alphabet, r)
            )
        }
    }
}

pub fn tri_poly_string(alphabet: &Alphabet, p: &TriPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (t, c)) in p.terms().iter().rev().enumerate() {
        let mag = c.abs();
        if k == 0 {
            if c.is_negative() {
                out.push_str("- ");
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&tri_term_string(alphabet, t));
    }
    out
}

// ----------------------------------------------------------------- lexing

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Gt,
    Semi,
    Comma,
    Eq,
    Vdash,
    Dashv,
    Perp,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Int(n) => write!(f, "`{n}`"),
            Token::Plus => write!(f, "`+`"),
            Token::Minus => write!(f, "`-`"),
            Token::Star => write!(f, "`*`"),
            Token::Slash => write!(f, "`/`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::LBracket => write!(f, "`[`"),
            Token::RBracket => write!(f, "`]`"),
            Token::Gt => write!(f, "`>`"),
            Token::Semi => write!(f, "`;`"),
            Token::Comma => write!(f, "`,`"),
            Token::Eq => write!(f, "`=`"),
            Token::Vdash => write!(f, "`|-`"),
            Token::Dashv => write!(f, "`-|`"),
            Token::Perp => write!(f, "`<>`"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Token,
    pub line: usize,
    pub col: usize,
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> char {
        let c = self.chars.next().expect("bump past end");
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }
}

pub fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut sc = Scanner {
        chars: input.chars().peekable(),
        line: 1,
        col: 1,
    };
    let mut out = Vec::new();
    while let Some(c) = sc.peek() {
        let (tline, tcol) = (sc.line, sc.col);
        if c.is_whitespace() {
            sc.bump();
            continue;
        }
        if c == '#' {
            while let Some(c) = sc.peek() {
                sc.bump();
                if c == '\n' {
                    break;
                }
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(c) = sc.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(sc.bump());
                } else {
                    break;
                }
            }
            if sc.peek() == Some('.') {
                sc.bump();
                s.push('.');
            }
            Token::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(c) = sc.peek() {
                if c.is_ascii_digit() {
                    s.push(sc.bump());
                } else {
                    break;
                }
            }
            Token::Int(s.parse().expect("digits parse"))
        } else {
            match sc.bump() {
                '+' => Token::Plus,
                '-' => {
                    if sc.peek() == Some('|') {
                        sc.bump();
                        Token::Dashv
                    } else {
                        Token::Minus
                    }
                }
                '|' => {
                    if sc.peek() == Some('-') {
                        sc.bump();
                        Token::Vdash
                    } else {
                        return Err(ParseError {
                            line: tline,
                            col: tcol,
                            msg: "expected `|-`".into(),
                        });
                    }
                }
                '<' => {
                    if sc.peek() == Some('>') {
                        sc.bump();
                        Token::Perp
                    } else {
                        return Err(ParseError {
                            line: tline,
                            col: tcol,
                            msg: "expected `<>`".into(),
                        });
                    }
                }
                '*' => Token::Star,
                '/' => Token::Slash,
                '(' => Token::LParen,
                ')' => Token::RParen,
                '[' => Token::LBracket,
                ']' => Token::RBracket,
                '>' => Token::Gt,
                ';' => Token::Semi,
                ',' => Token::Comma,
                '=' => Token::Eq,
                other => {
                    return Err(ParseError {
                        line: tline,
                        col: tcol,
                        msg: format!("unexpected character `{other}`"),
                    })
                }
            }
        };
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------- parsing

/// Cursor over a token stream.
pub struct Cursor<'a> {
    toks: &'a [Spanned],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(toks: &'a [Spanned]) -> Cursor<'a> {
        Cursor { toks, pos: 0 }
    }

    pub fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    pub fn peek2(&self) -> Option<&Token> {
        self.toks.get(self.pos + 1).map(|s| &s.tok)
    }

    pub fn next_tok(&mut self) -> Option<&Spanned> {
        let s = self.toks.get(self.pos);
        if s.is_some() {
            self.pos += 1;
        }
        s
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .or_else(|| self.toks.last())
            .map(|s| (s.line, s.col))
            .unwrap_or((1, 1))
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }

    pub fn expect(&mut self, tok: &Token) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == tok => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let t = t.clone();
                Err(self.error(format!("expected {tok}, found {t}")))
            }
            None => Err(self.error(format!("expected {tok}, found end of input"))),
        }
    }
}

/// Which operations an expression grammar admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExprLang {
    Plain,
    Di,
    Tri,
}

impl ExprLang {
    pub fn for_mode(mode: Mode) -> ExprLang {
        match mode {
            Mode::Di => ExprLang::Di,
            Mode::Tri => ExprLang::Tri,
        }
    }
}

/// Operation tree produced by the expression parser.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OpTree {
    Leaf(Gen),
    Star(Box<OpTree>, Box<OpTree>),
    Tri(TriOp, Box<OpTree>, Box<OpTree>),
}

/// A relation expression as a combination of operation trees.
pub type OpPoly = Vec<(Rat, OpTree)>;

fn op_of_token(tok: &Token) -> Option<TriOp> {
    match tok {
        Token::Vdash => Some(TriOp::Vdash),
        Token::Dashv => Some(TriOp::Dashv),
        Token::Perp => Some(TriOp::Perp),
        _ => None,
    }
}

/// Parse `expr := ['-'] term (('+'|'-') term)*` where `term := [coeff]
/// factor` and `factor := gen | '(' expr [op expr] ')'`. Operations require
/// parentheses; there is no implicit precedence.
pub fn parse_expr(
    cur: &mut Cursor,
    alphabet: &Alphabet,
    lang: ExprLang,
) -> Result<OpPoly, ParseError> {
    let mut acc: OpPoly = Vec::new();
    let mut sign = Rat::one();
    if cur.peek() == Some(&Token::Minus) {
        cur.next_tok();
        sign = -sign;
    }
    loop {
        let term = parse_term(cur, alphabet, lang)?;
        for (c, t) in term {
            push_term(&mut acc, c * &sign, t);
        }
        match cur.peek() {
            Some(Token::Plus) => {
                cur.next_tok();
                sign = Rat::one();
            }
            Some(Token::Minus) => {
                cur.next_tok();
                sign = -Rat::one();
            }
            _ => break,
        }
    }
    Ok(acc)
}

fn push_term(acc: &mut OpPoly, c: Rat, t: OpTree) {
    if c.is_zero() {
        return;
    }
    if let Some((coeff, _)) = acc.iter_mut().find(|(_, tree)| *tree == t) {
        *coeff += c;
        acc.retain(|(cc, _)| !cc.is_zero());
        return;
    }
    acc.push((c, t));
}

fn parse_coeff(cur: &mut Cursor) -> Result<Option<Rat>, ParseError> {
    if let Some(Token::Int(n)) = cur.peek().cloned() {
        cur.next_tok();
        if cur.peek() == Some(&Token::Slash) {
            cur.next_tok();
            match cur.peek().cloned() {
                Some(Token::Int(d)) => {
                    cur.next_tok();
                    if d.is_zero() {
                        return Err(cur.error("zero denominator"));
                    }
                    return Ok(Some(Rat::new(n, d)));
                }
                _ => return Err(cur.error("expected denominator after `/`")),
            }
        }
        return Ok(Some(Rat::from_integer(n)));
    }
    Ok(None)
}

fn parse_term(cur: &mut Cursor, alphabet: &Alphabet, lang: ExprLang) -> Result<OpPoly, ParseError> {
    let coeff = parse_coeff(cur)?.unwrap_or_else(Rat::one);
    let factor = parse_factor(cur, alphabet, lang)?;
    Ok(factor.into_iter().map(|(c, t)| (c * &coeff, t)).collect())
}

fn parse_factor(
    cur: &mut Cursor,
    alphabet: &Alphabet,
    lang: ExprLang,
) -> Result<OpPoly, ParseError> {
    match cur.peek().cloned() {
        Some(Token::Ident(name)) => {
            if name.ends_with('.') {
                return Err(
                    cur.error("dotted generators are internal and cannot appear in relations")
                );
            }
            let err = cur.error(format!("unknown generator `{name}`"));
            cur.next_tok();
            let g = alphabet.lookup(&name).map_err(|_| err)?;
            Ok(vec![(Rat::one(), OpTree::Leaf(g))])
        }
        Some(Token::LParen) => {
            cur.next_tok();
            let left = parse_expr(cur, alphabet, lang)?;
            let op = match cur.peek() {
                Some(Token::Star) => {
                    if lang != ExprLang::Plain {
                        return Err(cur.error("`*` is only available in plain mode"));
                    }
                    cur.next_tok();
                    Some(None)
                }
                Some(t) if op_of_token(t).is_some() => {
                    let op = op_of_token(t).unwrap();
                    if lang == ExprLang::Plain {
                        return Err(cur.error("di/tri operations are not available in plain mode"));
                    }
                    if lang == ExprLang::Di && op == TriOp::Perp {
                        return Err(cur.error("`<>` is not available in di mode"));
                    }
                    cur.next_tok();
                    Some(Some(op))
                }
                _ => None,
            };
            match op {
                None => {
                    cur.expect(&Token::RParen)?;
                    Ok(left)
                }
                Some(op) => {
                    let right = parse_expr(cur, alphabet, lang)?;
                    cur.expect(&Token::RParen)?;
                    let mut out: OpPoly = Vec::new();
                    for (cl, tl) in &left {
                        for (cr, tr) in &right {
                            let tree = match op {
                                None => OpTree::Star(Box::new(tl.clone()), Box::new(tr.clone())),
                                Some(o) => {
                                    OpTree::Tri(o, Box::new(tl.clone()), Box::new(tr.clone()))
                                }
                            };
                            push_term(&mut out, cl * cr, tree);
                        }
                    }
                    Ok(out)
                }
            }
        }
        Some(t) => Err(cur.error(format!("expected a generator or `(`, found {t}"))),
        None => Err(cur.error("expected a generator or `(`, found end of input")),
    }
}

/// Lower an operation polynomial to di/tri terms. `*` is rejected.
pub fn lower_tri(p: &OpPoly) -> Result<TriPoly, String> {
    let mut out = TriPoly::zero();
    for (c, t) in p {
        out.add_term(c.clone(), lower_tri_tree(t)?);
    }
    Ok(out)
}

fn lower_tri_tree(t: &OpTree) -> Result<TriTerm, String> {
    match t {
        OpTree::Leaf(g) => Ok(TriTerm::Leaf(*g)),
        OpTree::Star(..) => Err("`*` cannot appear in a di/tri relation".into()),
        OpTree::Tri(op, l, r) => Ok(TriTerm::node(*op, lower_tri_tree(l)?, lower_tri_tree(r)?)),
    }
}

/// Lower an operation polynomial to a plain polynomial: `*` is the Lie
/// bracket or the concatenation product depending on the flavor.
pub fn lower_plain(p: &OpPoly, flavor: Flavor) -> Result<TermMap, String> {
    let mut out = TermMap::new();
    for (c, t) in p {
        match flavor {
            Flavor::Lie => {
                let tree = plain_tree(t)?;
                let lp = LiePoly::from_tree(&tree);
                poly::add_scaled(&mut out, lp.terms(), c);
            }
            Flavor::Assoc => {
                let w = plain_word(t)?;
                poly::add_term(&mut out, w, c.clone());
            }
        }
    }
    Ok(out)
}

fn plain_tree(t: &OpTree) -> Result<BracketTree, String> {
    match t {
        OpTree::Leaf(g) => Ok(BracketTree::leaf(*g)),
        OpTree::Star(l, r) => Ok(BracketTree::node(plain_tree(l)?, plain_tree(r)?)),
        OpTree::Tri(..) => Err("di/tri operations cannot appear in a plain relation".into()),
    }
}

fn plain_word(t: &OpTree) -> Result<Word, String> {
    match t {
        OpTree::Leaf(g) => Ok(Word::single(*g)),
        OpTree::Star(l, r) => Ok(plain_word(l)?.concat(&plain_word(r)?)),
        OpTree::Tri(..) => Err("di/tri operations cannot appear in a plain relation".into()),
    }
}

// ------------------------------------------- canonical polynomial parsing

/// Parse the canonical polynomial text written by [`poly_string`]. Dotted
/// letters are accepted; Lie monomials must be standard bracketings.
pub fn parse_canonical_poly(
    alphabet: &Alphabet,
    flavor: Flavor,
    input: &str,
) -> Result<TermMap, ParseError> {
    let toks = lex(input)?;
    let mut cur = Cursor::new(&toks);
    if cur.peek() == Some(&Token::Int(BigInt::zero())) && cur.peek2().is_none() {
        return Ok(TermMap::new());
    }
    let mut out = TermMap::new();
    let mut sign = Rat::one();
    if cur.peek() == Some(&Token::Minus) {
        cur.next_tok();
        sign = -sign;
    }
    loop {
        let coeff = parse_coeff(&mut cur)?.unwrap_or_else(Rat::one);
        let word = parse_canonical_monomial(&mut cur, alphabet, flavor)?;
        poly::add_term(&mut out, word, coeff * &sign);
        match cur.peek() {
            Some(Token::Plus) => {
                cur.next_tok();
                sign = Rat::one();
            }
            Some(Token::Minus) => {
                cur.next_tok();
                sign = -Rat::one();
            }
            None => break,
            Some(t) => {
                let t = t.clone();
                return Err(cur.error(format!("unexpected {t}")));
            }
        }
    }
    Ok(out)
}

fn parse_gen(cur: &mut Cursor, alphabet: &Alphabet) -> Result<Gen, ParseError> {
    match cur.peek().cloned() {
        Some(Token::Ident(name)) => {
            let err = cur.error(format!("unknown generator `{name}`"));
            cur.next_tok();
            alphabet.lookup(&name).map_err(|_| err)
        }
        Some(t) => Err(cur.error(format!("expected a generator, found {t}"))),
        None => Err(cur.error("expected a generator, found end of input")),
    }
}

fn parse_bracket_tree(cur: &mut Cursor, alphabet: &Alphabet) -> Result<BracketTree, ParseError> {
    match cur.peek() {
        Some(Token::LBracket) => {
            cur.next_tok();
            let l = parse_bracket_tree(cur, alphabet)?;
            let r = parse_bracket_tree(cur, alphabet)?;
            cur.expect(&Token::RBracket)?;
            Ok(BracketTree::node(l, r))
        }
        _ => Ok(BracketTree::leaf(parse_gen(cur, alphabet)?)),
    }
}

fn parse_canonical_monomial(
    cur: &mut Cursor,
    alphabet: &Alphabet,
    flavor: Flavor,
) -> Result<Word, ParseError> {
    match flavor {
        Flavor::Lie => {
            let start = cur.here();
            let tree = parse_bracket_tree(cur, alphabet)?;
            let frontier = tree.frontier();
            let ok = NlsWord::new(frontier.clone())
                .map(|nls| crate::lie_poly::tree_of(&nls) == tree)
                .unwrap_or(false);
            if !ok {
                return Err(ParseError {
                    line: start.0,
                    col: start.1,
                    msg: "not a standard Lyndon-Shirshov bracketing".into(),
                });
            }
            Ok(frontier)
        }
        Flavor::Assoc => {
            let mut letters = vec![parse_gen(cur, alphabet)?];
            while let Some(Token::Ident(_)) = cur.peek() {
                letters.push(parse_gen(cur, alphabet)?);
            }
            Ok(Word::new(letters))
        }
    }
}

/// Parse a relation or target expression in the user grammar.
pub fn parse_tri_poly(alphabet: &Alphabet, mode: Mode, input: &str) -> Result<TriPoly, ParseError> {
    let toks = lex(input)?;
    let mut cur = Cursor::new(&toks);
    let p = parse_expr(&mut cur, alphabet, ExprLang::for_mode(mode))?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after expression"));
    }
    lower_tri(&p).map_err(|msg| ParseError {
        line: 1,
        col: 1,
        msg,
    })
}

/// Parse a plain-mode expression (`*` products) into the given flavor.
pub fn parse_plain_poly(
    alphabet: &Alphabet,
    flavor: Flavor,
    input: &str,
) -> Result<TermMap, ParseError> {
    let toks = lex(input)?;
    let mut cur = Cursor::new(&toks);
    let p = parse_expr(&mut cur, alphabet, ExprLang::Plain)?;
    if !cur.at_end() {
        return Err(cur.error("trailing input after expression"));
    }
    lower_plain(&p, flavor).map_err(|msg| ParseError {
        line: 1,
        col: 1,
        msg,
    })
}
