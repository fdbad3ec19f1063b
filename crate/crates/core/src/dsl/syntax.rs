//! Line-oriented lexer and recursive-descent parser for `.alg` documents.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Num(BigRational),
    /// Identifier, possibly containing `{var}` template holes.
    Ident(String),
    Sym(&'static str),
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub col: usize,
}

const SYMBOLS: [&str; 19] = [
    "..", "<=", ">=", "!=", "==", "+", "-", "*", "^", "(", ")", "[", "]", ",", "=", ":", "<", ">", "/",
];

pub(crate) fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

fn lex(text: &str, line: usize, offset: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: BigInt = chars[start..i].iter().collect::<String>().parse().unwrap();
            // `p/q` is a single literal when the slash is followed by digits
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let s = i + 1;
                i = s;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let den: BigInt = chars[s..i].iter().collect::<String>().parse().unwrap();
                if den == BigInt::from(0) {
                    return Err(syntax(line, col, "zero denominator"));
                }
                out.push(Token {
                    tok: Tok::Num(BigRational::new(num, den)),
                    col,
                });
            } else {
                out.push(Token {
                    tok: Tok::Num(BigRational::from_integer(num)),
                    col,
                });
            }
        } else if c.is_alphabetic() || c == '_' || c == '{' {
            let start = i;
            while i < chars.len() {
                let d = chars[i];
                if d.is_alphanumeric() || d == '_' {
                    i += 1;
                } else if d == '{' {
                    let close = chars[i..]
                        .iter()
                        .position(|&x| x == '}')
                        .ok_or_else(|| syntax(line, offset + i + 1, "unclosed `{` in name"))?;
                    i += close + 1;
                } else {
                    break;
                }
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                col,
            });
        } else {
            let rest: String = chars[i..].iter().take(2).collect();
            let sym = SYMBOLS
                .iter()
                .find(|s| rest.starts_with(**s))
                .ok_or_else(|| syntax(line, col, format!("unexpected character `{c}`")))?;
            out.push(Token { tok: Tok::Sym(sym), col });
            i += sym.len();
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Expr {
    Num(BigRational),
    Name { text: String, col: usize },
    Call { name: String, args: Vec<Expr>, col: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// A possibly templated name and where it starts.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct NameRef {
    pub text: String,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum CmpOp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Cond {
    pub lhs: Expr,
    pub op: CmpOp,
    pub rhs: Expr,
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Stmt {
    Algebra(String),
    Generators(Vec<NameRef>),
    Antisymmetric(Vec<NameRef>),
    Star(NameRef, Expr),
    Relation(NameRef, NameRef, Expr),
    Invariant(Vec<NameRef>),
    Translations(Vec<NameRef>),
    Tau(NameRef, Expr),
    Lorentz(NameRef, Expr),
    Gamma(Expr),
    Lambda(NameRef, Expr),
    Cinv(NameRef, NameRef, Expr),
    Mixed(NameRef, Expr),
    Central(NameRef, Expr),
    Casimir(NameRef, Expr),
    CenterCandidate(Expr),
    CenterProbe(Expr),
    ExpectBracket(Expr, Expr, Expr),
    ContractionSpan(Vec<NameRef>),
    ContractionAbelian(Vec<NameRef>),
    For {
        vars: Vec<String>,
        lo: i64,
        hi: i64,
        conds: Vec<Cond>,
        body: Vec<Line>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Line {
    pub line: usize,
    pub stmt: Stmt,
}

struct Cursor<'t> {
    toks: &'t [Token],
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'t> Cursor<'t> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.col).unwrap_or(self.end_col)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        syntax(self.line, self.col(), msg)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn at_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        if self.at_sym(s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    fn name(&mut self) -> Result<NameRef> {
        match self.toks.get(self.pos) {
            Some(Token {
                tok: Tok::Ident(s),
                col,
            }) => {
                self.pos += 1;
                Ok(NameRef {
                    text: s.clone(),
                    col: *col,
                })
            }
            _ => Err(self.err("expected a name")),
        }
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat_sym("-");
        match self.peek() {
            Some(Tok::Num(n)) if n.is_integer() => {
                let v: i64 = n.to_integer().try_into().map_err(|_| self.err("integer out of range"))?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn done(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            Err(self.err("unexpected trailing input"))
        } else {
            Ok(())
        }
    }

    fn names_to_end(&mut self) -> Result<Vec<NameRef>> {
        let mut out = Vec::new();
        while self.pos < self.toks.len() {
            out.push(self.name()?);
            self.eat_sym(",");
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat_sym("*") {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        if self.at_sym("/") {
            return Err(self.err("division is only allowed inside rational literals `p/q`"));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_sym("^") {
            let n = self.int()?;
            let n = u32::try_from(n).map_err(|_| self.err("exponent must be a nonnegative integer"))?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(text)) => {
                self.pos += 1;
                if self.eat_sym("(") {
                    let mut args = Vec::new();
                    if !self.eat_sym(")") {
                        loop {
                            args.push(self.expr()?);
                            if self.eat_sym(")") {
                                break;
                            }
                            self.expect_sym(",")?;
                        }
                    }
                    Ok(Expr::Call { name: text, args, col })
                } else {
                    Ok(Expr::Name { text, col })
                }
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            _ => Err(self.err("expected an expression")),
        }
    }

    fn bracket_pair(&mut self) -> Result<(NameRef, NameRef)> {
        self.expect_sym("[")?;
        let a = self.name()?;
        self.expect_sym(",")?;
        let b = self.name()?;
        self.expect_sym("]")?;
        Ok((a, b))
    }

    fn cond(&mut self) -> Result<Cond> {
        let lhs = self.expr()?;
        let op = match self.peek() {
            Some(Tok::Sym("<")) => CmpOp::Lt,
            Some(Tok::Sym("<=")) => CmpOp::Le,
            Some(Tok::Sym(">")) => CmpOp::Gt,
            Some(Tok::Sym(">=")) => CmpOp::Ge,
            Some(Tok::Sym("==")) => CmpOp::Eq,
            Some(Tok::Sym("!=")) => CmpOp::Ne,
            _ => return Err(self.err("expected a comparison")),
        };
        self.pos += 1;
        Ok(Cond {
            lhs,
            op,
            rhs: self.expr()?,
        })
    }
}

fn strip_comment(text: &str) -> &str {
    match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    }
}

/// Parses one statement line; `for` headers return an empty body to be
/// filled by the caller.
fn parse_line(text: &str, line: usize) -> Result<Option<Stmt>> {
    let trimmed = text.trim_start();
    if trimmed.trim().is_empty() {
        return Ok(None);
    }
    let indent = text.len() - trimmed.len();
    let kw_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
    let keyword = &trimmed[..kw_len];
    let rest = &trimmed[kw_len..];
    let rest_offset = text[..indent + kw_len].chars().count();

    // Central/casimir names may contain any non-blank characters.
    if keyword == "central" || keyword == "casimir" {
        let r = rest.trim_start();
        let skip = rest.len() - r.len();
        let name_len = r.find(char::is_whitespace).unwrap_or(r.len());
        let name = NameRef {
            text: r[..name_len].to_string(),
            col: rest_offset + rest[..skip].chars().count() + 1,
        };
        if name.text.is_empty() {
            return Err(syntax(line, name.col, "expected a name"));
        }
        let tail = &r[name_len..];
        let tail_offset = rest_offset + rest[..skip].chars().count() + r[..name_len].chars().count();
        let toks = lex(tail, line, tail_offset)?;
        let mut c = Cursor {
            toks: &toks,
            pos: 0,
            line,
            end_col: tail_offset + tail.chars().count() + 1,
        };
        c.expect_sym("=")?;
        let e = c.expr()?;
        c.done()?;
        return Ok(Some(if keyword == "central" {
            Stmt::Central(name, e)
        } else {
            Stmt::Casimir(name, e)
        }));
    }

    let toks = lex(rest, line, rest_offset)?;
    let mut c = Cursor {
        toks: &toks,
        pos: 0,
        line,
        end_col: rest_offset + rest.chars().count() + 1,
    };
    let stmt = match keyword {
        "algebra" => {
            let r = rest.trim();
            if r.is_empty() || r.contains(char::is_whitespace) {
                return Err(syntax(line, rest_offset + 1, "expected a single algebra name"));
            }
            return Ok(Some(Stmt::Algebra(r.to_string())));
        }
        "generators" => Stmt::Generators(c.names_to_end()?),
        "antisymmetric" => Stmt::Antisymmetric(c.names_to_end()?),
        "invariant" => Stmt::Invariant(c.names_to_end()?),
        "translations" => Stmt::Translations(c.names_to_end()?),
        "star" | "tau" | "lorentz" | "lambda" | "mixed" => {
            let n = c.name()?;
            c.expect_sym("=")?;
            let e = c.expr()?;
            match keyword {
                "star" => Stmt::Star(n, e),
                "tau" => Stmt::Tau(n, e),
                "lorentz" => Stmt::Lorentz(n, e),
                "lambda" => Stmt::Lambda(n, e),
                _ => Stmt::Mixed(n, e),
            }
        }
        "relation" | "cinv" => {
            let (a, b) = c.bracket_pair()?;
            c.expect_sym("=")?;
            let e = c.expr()?;
            if keyword == "relation" {
                Stmt::Relation(a, b, e)
            } else {
                Stmt::Cinv(a, b, e)
            }
        }
        "gamma" => {
            c.expect_sym("=")?;
            Stmt::Gamma(c.expr()?)
        }
        "center-candidate" => Stmt::CenterCandidate(c.expr()?),
        "center-probe" => Stmt::CenterProbe(c.expr()?),
        "expect" => {
            let what = c.name()?;
            if what.text != "bracket" {
                return Err(syntax(line, what.col, "expected `bracket`"));
            }
            c.expect_sym("[")?;
            let f = c.expr()?;
            c.expect_sym(",")?;
            let g = c.expr()?;
            c.expect_sym("]")?;
            c.expect_sym("=")?;
            Stmt::ExpectBracket(f, g, c.expr()?)
        }
        "contraction" => {
            let what = c.name()?;
            match what.text.as_str() {
                "span" => Stmt::ContractionSpan(c.names_to_end()?),
                "abelian" => Stmt::ContractionAbelian(c.names_to_end()?),
                _ => return Err(syntax(line, what.col, "expected `span` or `abelian`")),
            }
        }
        "for" => {
            let mut vars = vec![c.name()?.text];
            while c.eat_sym(",") {
                vars.push(c.name()?.text);
            }
            let kw = c.name()?;
            if kw.text != "in" {
                return Err(syntax(line, kw.col, "expected `in`"));
            }
            let lo = c.int()?;
            c.expect_sym("..")?;
            let hi = c.int()?;
            let mut conds = Vec::new();
            if matches!(c.peek(), Some(Tok::Ident(s)) if s == "if") {
                c.pos += 1;
                conds.push(c.cond()?);
                while matches!(c.peek(), Some(Tok::Ident(s)) if s == "and") {
                    c.pos += 1;
                    conds.push(c.cond()?);
                }
            }
            c.expect_sym(":")?;
            Stmt::For {
                vars,
                lo,
                hi,
                conds,
                body: Vec::new(),
            }
        }
        other => return Err(syntax(line, indent + 1, format!("unknown statement `{other}`"))),
    };
    c.done()?;
    Ok(Some(stmt))
}

/// Parses a whole document into statements, nesting `for ... end` blocks.
pub(crate) fn parse_lines(text: &str) -> Result<Vec<Line>> {
    let mut stack: Vec<(Line, Vec<Line>)> = Vec::new();
    let mut top = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = strip_comment(raw);
        if body.trim() == "end" {
            let (mut head, inner) = stack
                .pop()
                .ok_or_else(|| syntax(line, raw.find("end").unwrap() + 1, "`end` without `for`"))?;
            if let Stmt::For { body, .. } = &mut head.stmt {
                *body = inner;
            }
            match stack.last_mut() {
                Some((_, b)) => b.push(head),
                None => top.push(head),
            }
            continue;
        }
        let Some(stmt) = parse_line(body, line)? else { continue };
        let l = Line { line, stmt };
        if matches!(l.stmt, Stmt::For { .. }) {
            stack.push((l, Vec::new()));
        } else {
            match stack.last_mut() {
                Some((_, b)) => b.push(l),
                None => top.push(l),
            }
        }
    }
    if let Some((head, _)) = stack.last() {
        return Err(syntax(head.line, 1, "`for` block is not closed with `end`"));
    }
    Ok(top)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_rationals_and_templates() {
        let t = lex("1/2*I{mu}{nu} - k0^2", 1, 0).unwrap();
        assert_eq!(t[0].tok, Tok::Num(BigRational::new(1.into(), 2.into())));
        assert_eq!(t[2].tok, Tok::Ident("I{mu}{nu}".into()));
        assert_eq!(t[4].col, 17);
    }

    #[test]
    fn nested_for_blocks() {
        let doc = "for mu in 0..3:\n  for nu in 0..3 if mu < nu:\n    gamma = 0\n  end\nend\n";
        let lines = parse_lines(doc).unwrap();
        assert_eq!(lines.len(), 1);
        let Stmt::For { body, .. } = &lines[0].stmt else { panic!() };
        let Stmt::For { body, conds, .. } = &body[0].stmt else { panic!() };
        assert_eq!(conds.len(), 1);
        assert_eq!(body[0].line, 3);
    }

    #[test]
    fn reports_positions() {
        let err = parse_lines("generators a b\nrelation [b, a] = 2 +* a").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                col: 22,
                msg: "expected an expression".into()
            }
        );
        assert!(matches!(parse_lines("for mu in 0..3:\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_lines("bogus x"), Err(Error::Syntax { line: 1, col: 1, .. })));
    }
}
