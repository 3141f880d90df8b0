//! Bit-exact text format for variable tables, polynomials and named systems.
//!
//! Polynomial grammar (whitespace insignificant, no parentheses, no implicit
//! multiplication):
//!
//! ```text
//! poly    := [sign] term (sign term)*
//! term    := coeff | coeff '*' factors | factors
//! factors := var ('^' nat)? ('*' var ('^' nat)?)*
//! coeff   := nat | nat '/' nat
//! ```
//!
//! A system file is a header followed by named entries:
//!
//! ```text
//! # comment (whole-line only)
//! vars x1 xc1 x2 xc2
//! conj x1 xc1
//! conj x2 xc2
//! weight x1 1 0              # optional bidegree weights
//! dehom x1 y1                # optional dehomogenization targets
//! dehom p !                  # '!' marks a divided-out degree carrier
//!
//! poly p1
//! cite "eq 4.144"
//! scale -1/5                 # optional: entry value = scale * body
//! suspect "why this entry is transcription-fragile"
//! flag x1*x2 "why this one monomial is fragile"
//!   12*x2*xc2 + 6 + 2*x1
//!   + 2*xc1
//! end
//! ```
//!
//! The canonical printer is [`print_poly`]; `parse(print(f)) == f` exactly,
//! and printing is idempotent on parsed input.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{DehomTarget, Monomial, PolyError, Polynomial, QPoly, VariableTable};
use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: unknown variable {name:?}")]
    UnknownVariable { name: String, line: usize, col: usize },
    #[error("{line}:{col}: zero denominator")]
    ZeroDenominator { line: usize, col: usize },
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("io error on {path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

const KEYWORDS: &[&str] = &[
    "vars", "conj", "weight", "dehom", "poly", "cite", "scale", "suspect", "flag", "end",
];

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Nat(BigInt),
    Ident(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str, first_line: usize) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut line = first_line;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '+' | '-' | '*' | '^' | '/' => {
                chars.next();
                col += 1;
                let tok = match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    _ => Tok::Slash,
                };
                out.push(Token {
                    tok,
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Nat(s.parse().expect("digits")),
                    line: tline,
                    col: tcol,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                out.push(Token {
                    tok: Tok::Ident(s),
                    line: tline,
                    col: tcol,
                });
            }
            other => {
                return Err(syntax(tline, tcol, format!("unexpected character {other:?}")));
            }
        }
    }
    Ok(out)
}

struct PolyParser<'a> {
    toks: Vec<Token>,
    pos: usize,
    table: &'a Arc<VariableTable>,
    end: (usize, usize),
}

impl<'a> PolyParser<'a> {
    fn new(text: &str, first_line: usize, table: &'a Arc<VariableTable>) -> Result<Self, ParseError> {
        let toks = tokenize(text, first_line)?;
        let last_line = first_line + text.matches('\n').count();
        Ok(PolyParser {
            toks,
            pos: 0,
            table,
            end: (last_line, 1),
        })
    }

    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.col))
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_poly(&mut self) -> Result<QPoly, ParseError> {
        let mut terms: Vec<(Rational, Monomial)> = Vec::new();
        let (l, c) = self.here();
        if self.peek().is_none() {
            return Err(syntax(l, c, "expected a polynomial, found nothing"));
        }
        // optional leading sign
        let mut negative = match self.peek().map(|t| &t.tok) {
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            _ => false,
        };
        loop {
            let (coeff, mono) = self.parse_term()?;
            let coeff = if negative { -coeff } else { coeff };
            terms.push((coeff, mono));
            match self.peek().map(|t| &t.tok) {
                None => break,
                Some(Tok::Plus) => {
                    self.bump();
                    negative = false;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    negative = true;
                }
                Some(other) => {
                    let (l, c) = self.here();
                    return Err(syntax(
                        l,
                        c,
                        format!("expected '+' or '-' between terms, found {other:?}"),
                    ));
                }
            }
        }
        Ok(Polynomial::from_terms(self.table.clone(), terms))
    }

    fn parse_term(&mut self) -> Result<(Rational, Monomial), ParseError> {
        let (l, c) = self.here();
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Nat(n)) => {
                self.bump();
                let coeff = if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.bump();
                    let (dl, dc) = self.here();
                    match self.bump().map(|t| t.tok) {
                        Some(Tok::Nat(d)) => {
                            if d.is_zero() {
                                return Err(ParseError::ZeroDenominator { line: dl, col: dc });
                            }
                            Rational::new(n, d).expect("nonzero denominator")
                        }
                        _ => return Err(syntax(dl, dc, "expected denominator after '/'")),
                    }
                } else {
                    Rational::from_int(n)
                };
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
                    self.bump();
                    let mono = self.parse_factors()?;
                    Ok((coeff, mono))
                } else {
                    Ok((coeff, Monomial::one(self.table.len())))
                }
            }
            Some(Tok::Ident(_)) => {
                let mono = self.parse_factors()?;
                Ok((Rational::one(), mono))
            }
            _ => Err(syntax(l, c, "expected a coefficient or a variable")),
        }
    }

    fn parse_factors(&mut self) -> Result<Monomial, ParseError> {
        let mut exps = vec![0u16; self.table.len()];
        loop {
            let (l, c) = self.here();
            let name = match self.bump().map(|t| t.tok) {
                Some(Tok::Ident(s)) => s,
                _ => return Err(syntax(l, c, "expected a variable")),
            };
            let idx = self.table.index_of(&name).ok_or(ParseError::UnknownVariable {
                name,
                line: l,
                col: c,
            })?;
            let mut e: u16 = 1;
            if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
                self.bump();
                let (el, ec) = self.here();
                match self.bump().map(|t| t.tok) {
                    Some(Tok::Nat(n)) => {
                        e = u16::try_from(&n)
                            .map_err(|_| syntax(el, ec, format!("exponent {n} too large")))?;
                    }
                    _ => return Err(syntax(el, ec, "expected an exponent after '^'")),
                }
            }
            exps[idx] = exps[idx]
                .checked_add(e)
                .ok_or_else(|| syntax(l, c, "exponent overflow"))?;
            // a '*' may continue the monomial; anything else ends it
            if matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
                // only if followed by a variable; "2*x*3" is rejected here
                self.bump();
            } else {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }
}

/// Parse one polynomial from `text` onto the given table.
pub fn parse_poly(text: &str, table: &Arc<VariableTable>) -> Result<QPoly, ParseError> {
    parse_poly_at(text, 1, table)
}

fn parse_poly_at(text: &str, first_line: usize, table: &Arc<VariableTable>) -> Result<QPoly, ParseError> {
    let mut p = PolyParser::new(text, first_line, table)?;
    p.parse_poly()
}

/// Canonical printed form of a polynomial; inverse of [`parse_poly`].
pub fn print_poly<C: crate::poly::Coefficient>(f: &Polynomial<C>) -> String {
    f.to_string()
}

/// One named polynomial from a system file.
#[derive(Debug, Clone)]
pub struct SystemEntry {
    pub name: String,
    pub poly: QPoly,
    /// Free-text source tag, surfaced verbatim in reports.
    pub citation: Option<String>,
    /// Prefactor that was applied to the printed body, when the source
    /// carries one.
    pub scale: Option<Rational>,
    /// Set when the source printing of this entry is damaged or conflicted;
    /// cases treat such entries as diff-reporting targets, not ground truth.
    pub suspect: Option<String>,
    /// Specific monomials whose printed coefficient is in doubt, with the
    /// reason.
    pub flags: Vec<(Monomial, String)>,
}

impl SystemEntry {
    pub fn is_suspect(&self) -> bool {
        self.suspect.is_some() || !self.flags.is_empty()
    }
}

/// A parsed fixture file: a declared alphabet and an ordered list of named
/// polynomials on it.
#[derive(Debug, Clone)]
pub struct SystemFile {
    pub table: Arc<VariableTable>,
    pub entries: Vec<SystemEntry>,
    index: BTreeMap<String, usize>,
}

impl SystemFile {
    pub fn get(&self, name: &str) -> Option<&SystemEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    pub fn poly(&self, name: &str) -> Option<&QPoly> {
        self.get(name).map(|e| &e.poly)
    }

    /// All entries whose name starts with `prefix`, in file order.
    pub fn with_prefix(&self, prefix: &str) -> Vec<&SystemEntry> {
        self.entries
            .iter()
            .filter(|e| e.name.starts_with(prefix))
            .collect()
    }
}

fn quoted(rest: &str, line: usize) -> Result<String, ParseError> {
    let rest = rest.trim();
    if rest.len() >= 2 && rest.starts_with('"') && rest.ends_with('"') {
        Ok(rest[1..rest.len() - 1].to_string())
    } else {
        Err(syntax(line, 1, "expected a double-quoted string"))
    }
}

fn parse_scale(rest: &str, line: usize) -> Result<Rational, ParseError> {
    let toks = tokenize(rest, line)?;
    let mut i = 0;
    let mut neg = false;
    if matches!(toks.get(i).map(|t| &t.tok), Some(Tok::Minus)) {
        neg = true;
        i += 1;
    }
    let num = match toks.get(i).map(|t| t.tok.clone()) {
        Some(Tok::Nat(n)) => n,
        _ => return Err(syntax(line, 1, "expected a rational scale")),
    };
    i += 1;
    let den = if matches!(toks.get(i).map(|t| &t.tok), Some(Tok::Slash)) {
        i += 1;
        match toks.get(i).map(|t| t.tok.clone()) {
            Some(Tok::Nat(d)) if !d.is_zero() => {
                i += 1;
                d
            }
            _ => return Err(ParseError::ZeroDenominator { line, col: 1 }),
        }
    } else {
        BigInt::from(1)
    };
    if i != toks.len() {
        return Err(syntax(line, 1, "trailing input after scale"));
    }
    let r = Rational::new(num, den).expect("nonzero denominator");
    Ok(if neg { -r } else { r })
}

fn parse_monomial(text: &str, line: usize, table: &Arc<VariableTable>) -> Result<Monomial, ParseError> {
    let mut p = PolyParser::new(text, line, table)?;
    let mono = p.parse_factors()?;
    if p.peek().is_some() {
        return Err(syntax(line, 1, "trailing input after monomial"));
    }
    Ok(mono)
}

/// Parse the system-file format from a string. `origin` is used in error
/// messages only.
pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut conj_pairs: Vec<(String, String)> = Vec::new();
    let mut weights: BTreeMap<String, (u32, u32)> = BTreeMap::new();
    let mut dehoms: BTreeMap<String, DehomTarget> = BTreeMap::new();
    let mut table: Option<Arc<VariableTable>> = None;

    let mut entries: Vec<SystemEntry> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();

    // in-progress entry state
    struct Pending {
        name: String,
        name_line: usize,
        citation: Option<String>,
        scale: Option<Rational>,
        suspect: Option<String>,
        flags: Vec<(Monomial, String)>,
        body: String,
        body_line: usize,
        body_started: bool,
    }
    let mut pending: Option<Pending> = None;

    let finish_table = |names: &Option<Vec<String>>,
                        conj_pairs: &[(String, String)],
                        weights: &BTreeMap<String, (u32, u32)>,
                        dehoms: &BTreeMap<String, DehomTarget>|
     -> Result<Arc<VariableTable>, ParseError> {
        let names = names
            .clone()
            .ok_or_else(|| syntax(1, 1, "missing header: a 'vars' line must precede entries"))?;
        let mut t = VariableTable::new(names.clone())?;
        if !conj_pairs.is_empty() {
            t = t.with_conj_pairs(conj_pairs)?;
        }
        if !weights.is_empty() {
            let w = names
                .iter()
                .map(|n| {
                    weights
                        .get(n)
                        .copied()
                        .ok_or_else(|| PolyError::BadTable(format!("no weight for {n}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            t = t.with_weights(w)?;
        }
        if !dehoms.is_empty() {
            let d = names
                .iter()
                .map(|n| {
                    dehoms
                        .get(n)
                        .cloned()
                        .ok_or_else(|| PolyError::BadTable(format!("no dehom target for {n}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            t = t.with_dehom(d)?;
        }
        Ok(t)
    };

    for (lineno0, raw) in text.lines().enumerate() {
        let lineno = lineno0 + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let first = line.split_whitespace().next().unwrap_or("");
        let rest = line[first.len()..].trim_start();

        if let Some(p) = pending.as_mut() {
            let is_attr = !p.body_started && KEYWORDS.contains(&first) && first != "poly";
            match (is_attr, first) {
                (_, "end") if line == "end" => {
                    let p = pending.take().unwrap();
                    let t = table.as_ref().expect("table set before entries");
                    if p.body.trim().is_empty() {
                        return Err(syntax(p.name_line, 1, format!("entry {:?} has no body", p.name)));
                    }
                    let mut poly = parse_poly_at(&p.body, p.body_line, t)?;
                    if let Some(s) = &p.scale {
                        poly = poly.scale(s);
                    }
                    if index.contains_key(&p.name) {
                        return Err(ParseError::DuplicateName(p.name));
                    }
                    index.insert(p.name.clone(), entries.len());
                    entries.push(SystemEntry {
                        name: p.name,
                        poly,
                        citation: p.citation,
                        scale: p.scale,
                        suspect: p.suspect,
                        flags: p.flags,
                    });
                }
                (true, "cite") => p.citation = Some(quoted(rest, lineno)?),
                (true, "scale") => p.scale = Some(parse_scale(rest, lineno)?),
                (true, "suspect") => p.suspect = Some(quoted(rest, lineno)?),
                (true, "flag") => {
                    let t = table.as_ref().expect("table set before entries");
                    let quote_at = rest.find('"').ok_or_else(|| {
                        syntax(lineno, 1, "flag needs a monomial and a quoted note")
                    })?;
                    let mono = parse_monomial(&rest[..quote_at], lineno, t)?;
                    let note = quoted(&rest[quote_at..], lineno)?;
                    p.flags.push((mono, note));
                }
                _ => {
                    // body line; preserve original line breaks for positions
                    if !p.body_started {
                        p.body_started = true;
                        p.body_line = lineno;
                        p.body = String::new();
                    }
                    let gap = lineno - p.body_line - p.body.matches('\n').count();
                    for _ in 0..gap {
                        p.body.push('\n');
                    }
                    p.body.push_str(raw);
                }
            }
            continue;
        }

        match first {
            "vars" => {
                if names.is_some() {
                    return Err(syntax(lineno, 1, "duplicate 'vars' line"));
                }
                let vs: Vec<String> = rest.split_whitespace().map(|s| s.to_string()).collect();
                if vs.is_empty() {
                    return Err(syntax(lineno, 1, "'vars' needs at least one variable"));
                }
                for v in &vs {
                    if KEYWORDS.contains(&v.as_str()) {
                        return Err(syntax(lineno, 1, format!("{v:?} is a reserved word")));
                    }
                }
                names = Some(vs);
            }
            "conj" => {
                let mut it = rest.split_whitespace();
                match (it.next(), it.next(), it.next()) {
                    (Some(a), Some(b), None) => conj_pairs.push((a.to_string(), b.to_string())),
                    _ => return Err(syntax(lineno, 1, "usage: conj <var> <var>")),
                }
            }
            "weight" => {
                let mut it = rest.split_whitespace();
                match (it.next(), it.next(), it.next(), it.next()) {
                    (Some(v), Some(a), Some(b), None) => {
                        let a: u32 = a
                            .parse()
                            .map_err(|_| syntax(lineno, 1, "weight components are naturals"))?;
                        let b: u32 = b
                            .parse()
                            .map_err(|_| syntax(lineno, 1, "weight components are naturals"))?;
                        weights.insert(v.to_string(), (a, b));
                    }
                    _ => return Err(syntax(lineno, 1, "usage: weight <var> <w_pi> <w_pibar>")),
                }
            }
            "dehom" => {
                let mut it = rest.split_whitespace();
                match (it.next(), it.next(), it.next()) {
                    (Some(v), Some("!"), None) => {
                        dehoms.insert(v.to_string(), DehomTarget::Drop);
                    }
                    (Some(v), Some(t), None) => {
                        dehoms.insert(v.to_string(), DehomTarget::Rename(t.to_string()));
                    }
                    _ => return Err(syntax(lineno, 1, "usage: dehom <var> <target|!>")),
                }
            }
            "poly" => {
                if table.is_none() {
                    table = Some(finish_table(&names, &conj_pairs, &weights, &dehoms)?);
                }
                let mut it = rest.split_whitespace();
                let name = match (it.next(), it.next()) {
                    (Some(n), None) => n.to_string(),
                    _ => return Err(syntax(lineno, 1, "usage: poly <name>")),
                };
                pending = Some(Pending {
                    name,
                    name_line: lineno,
                    citation: None,
                    scale: None,
                    suspect: None,
                    flags: Vec::new(),
                    body: String::new(),
                    body_line: lineno,
                    body_started: false,
                });
            }
            other => {
                return Err(syntax(
                    lineno,
                    1,
                    format!("expected a header line or 'poly', found {other:?}"),
                ));
            }
        }
    }

    if let Some(p) = pending {
        return Err(syntax(p.name_line, 1, format!("entry {:?} not closed by 'end'", p.name)));
    }
    let table = match table {
        Some(t) => t,
        None => finish_table(&names, &conj_pairs, &weights, &dehoms)?,
    };
    Ok(SystemFile {
        table,
        entries,
        index,
    })
}

/// Load and fully validate a system file from disk.
pub fn load_system(path: impl AsRef<Path>) -> Result<SystemFile, ParseError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_system(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table4() -> Arc<VariableTable> {
        VariableTable::from_names(&["x1", "xc1", "x2", "xc2"]).unwrap()
    }

    #[test]
    fn parses_two_term_poly() {
        let t = table4();
        let f = parse_poly("66*x1 + 125", &t).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(print_poly(&f), "66*x1 + 125");
    }

    #[test]
    fn parses_product_terms() {
        let t = table4();
        let f = parse_poly("9108*x2*xc2 + 247", &t).unwrap();
        assert_eq!(print_poly(&f), "9108*x2*xc2 + 247");
    }

    #[test]
    fn rejects_double_sign() {
        let t = table4();
        let err = parse_poly("x1 + + 3", &t).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, col: 6, .. }), "{err:?}");
    }

    #[test]
    fn rejects_unknown_variable() {
        let t = table4();
        assert!(matches!(
            parse_poly("3*y", &t),
            Err(ParseError::UnknownVariable { .. })
        ));
    }

    #[test]
    fn rejects_zero_denominator() {
        let t = table4();
        assert!(matches!(
            parse_poly("1/0*x1", &t),
            Err(ParseError::ZeroDenominator { .. })
        ));
    }

    #[test]
    fn zero_literal_is_zero_poly() {
        let t = table4();
        assert!(parse_poly("0", &t).unwrap().is_zero());
        assert_eq!(print_poly(&parse_poly("0", &t).unwrap()), "0");
    }

    #[test]
    fn canonical_print_reorders() {
        let t = table4();
        let f = parse_poly("22 + 12*x1 - xc2", &t).unwrap();
        assert_eq!(print_poly(&f), "12*x1 - xc2 + 22");
    }

    #[test]
    fn rational_coefficients_roundtrip() {
        let t = table4();
        let f = parse_poly("1/2*x1 - 3/4", &t).unwrap();
        let printed = print_poly(&f);
        assert_eq!(printed, "1/2*x1 - 3/4");
        assert_eq!(parse_poly(&printed, &t).unwrap(), f);
    }

    #[test]
    fn empty_file_is_missing_header() {
        assert!(matches!(parse_system(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn duplicate_entry_rejected() {
        let text = "vars x\npoly p1\nx\nend\npoly p1\nx + 1\nend\n";
        assert!(matches!(
            parse_system(text),
            Err(ParseError::DuplicateName(n)) if n == "p1"
        ));
    }

    #[test]
    fn full_system_file() {
        let text = r#"
# demo
vars a ac p pc
conj a ac
conj p pc
weight a 1 0
weight ac 0 1
weight p 1 0
weight pc 0 1
dehom a x1
dehom ac xc1
dehom p !
dehom pc !

poly d
cite "demo eq"
scale -1/5
flag a*pc "printed coefficient in doubt"
  5*a*pc - 10*p*pc
end
"#;
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.entries.len(), 1);
        let e = sys.get("d").unwrap();
        assert_eq!(e.citation.as_deref(), Some("demo eq"));
        assert_eq!(e.flags.len(), 1);
        // scale applied: -1/5 * (5*a*pc - 10*p*pc) = -a*pc + 2*p*pc
        assert_eq!(print_poly(&e.poly), "-a*pc + 2*p*pc");
        // dehomogenization drops p, pc
        let d = e.poly.dehomogenize().unwrap();
        assert_eq!(print_poly(&d), "-x1 + 2");
    }

    #[test]
    fn error_positions_cross_lines() {
        let text = "vars x\npoly p\n  x + 1\n  + y\nend\n";
        match parse_system(text) {
            Err(ParseError::UnknownVariable { name, line, .. }) => {
                assert_eq!(name, "y");
                assert_eq!(line, 4);
            }
            other => panic!("expected unknown variable at line 4, got {other:?}"),
        }
    }
}
