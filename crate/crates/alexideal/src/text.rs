//! Text formats: Laurent polynomials (`t^2 - t + 1`, `2t^-1 + 1`), ideals
//! (`3; t+1`), and the presentation DSL for knot files:
//!
//! ```text
//! name: trefoil ;          # optional
//! genus: classical ;       # optional: "classical" or a nonnegative integer
//! gens: x y ;
//! weights: 1 1 ;           # optional, default all 1
//! rels: x y x y^-1 x^-1 y^-1 ;
//! ```
//!
//! Parse errors carry a line and column. Printing and parsing round-trip
//! bit-exactly on canonical forms.

use num_bigint::BigInt;

use std::fmt;

use crate::fox::{Presentation, Word};
use crate::knots::{Genus, SurfaceKnot};
use crate::laurent::LaurentPoly;
use crate::zideal::LaurentIdeal;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
    comments: bool,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str, comments: bool) -> Self {
        Scanner { src: src.as_bytes(), pos: 0, line: 1, col: 1, comments }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn skip_ws(&mut self) {
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_whitespace() => {
                    self.bump();
                }
                Some(b'#') if self.comments => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, msg: msg.into() }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(x) if x == b => {
                self.bump();
                Ok(())
            }
            Some(x) => Err(self.error(format!("expected '{}', found '{}'", b as char, x as char))),
            None => Err(self.error(format!("expected '{}', found end of input", b as char))),
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(b) = self.peek() {
            if b.is_ascii_digit() {
                s.push(b as char);
                self.bump();
            } else {
                break;
            }
        }
        if s.is_empty() {
            None
        } else {
            Some(s)
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.bump();
        } else if self.peek() == Some(b'+') {
            self.bump();
        }
        let d = self.digits().ok_or_else(|| self.error("expected an integer"))?;
        let v: i64 = d.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.peek()?;
        if !(start.is_ascii_alphabetic() || start == b'_') {
            return None;
        }
        let mut s = String::new();
        while let Some(b) = self.peek() {
            if b.is_ascii_alphanumeric() || b == b'_' {
                s.push(b as char);
                self.bump();
            } else {
                break;
            }
        }
        Some(s)
    }
}

/// Parse a single Laurent polynomial.
pub fn parse_poly(src: &str) -> Result<LaurentPoly, ParseError> {
    let mut sc = Scanner::new(src, false);
    let p = parse_poly_inner(&mut sc, &[])?;
    if !sc.at_end() {
        return Err(sc.error("trailing input after polynomial"));
    }
    Ok(p)
}

fn parse_poly_inner(sc: &mut Scanner, stops: &[u8]) -> Result<LaurentPoly, ParseError> {
    let mut acc = LaurentPoly::zero();
    let mut first = true;
    loop {
        sc.skip_ws();
        match sc.peek() {
            None => break,
            Some(b) if stops.contains(&b) => break,
            _ => {}
        }
        let mut sign = BigInt::from(1);
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
            }
            Some(b'-') => {
                sign = BigInt::from(-1);
                sc.bump();
            }
            _ if first => {}
            _ => return Err(sc.error("expected '+' or '-' between terms")),
        }
        sc.skip_ws();
        let coeff = sc.digits().map(|d| d.parse::<BigInt>().unwrap());
        sc.skip_ws();
        if sc.peek() == Some(b'*') {
            sc.bump();
            sc.skip_ws();
        }
        let mut exp: Option<i64> = None;
        if sc.peek() == Some(b't') {
            sc.bump();
            if sc.peek() == Some(b'^') {
                sc.bump();
                exp = Some(sc.signed_int()?);
            } else {
                exp = Some(1);
            }
        }
        let term = match (coeff, exp) {
            (Some(c), Some(k)) => LaurentPoly::monomial(k, c),
            (Some(c), None) => LaurentPoly::constant(c),
            (None, Some(k)) => LaurentPoly::monomial(k, 1),
            (None, None) => return Err(sc.error("expected a coefficient or 't'")),
        };
        acc = acc.add(&term.scale(&sign));
        first = false;
    }
    if first {
        return Err(sc.error("empty polynomial"));
    }
    Ok(acc)
}

/// Parse a semicolon-separated generator list, e.g. `3; t+1`.
pub fn parse_ideal_generators(src: &str) -> Result<Vec<LaurentPoly>, ParseError> {
    let mut sc = Scanner::new(src, false);
    let mut out = Vec::new();
    loop {
        let p = parse_poly_inner(&mut sc, &[b';'])?;
        out.push(p);
        sc.skip_ws();
        match sc.peek() {
            Some(b';') => {
                sc.bump();
                if sc.at_end() {
                    break;
                }
            }
            None => break,
            Some(b) => return Err(sc.error(format!("unexpected '{}'", b as char))),
        }
    }
    Ok(out)
}

/// Parse an ideal; all-zero generator lists are rejected here so the caller
/// sees a located diagnostic.
pub fn parse_ideal(src: &str) -> Result<LaurentIdeal, ParseError> {
    let gens = parse_ideal_generators(src)?;
    if gens.iter().all(LaurentPoly::is_zero) {
        return Err(ParseError { line: 1, col: 1, msg: "ideal needs a nonzero generator".into() });
    }
    Ok(LaurentIdeal::new(gens).expect("nonzero generators checked above"))
}

/// One relator word in source form, with the position of each syllable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceWord {
    pub syllables: Vec<(String, i64, u32, u32)>, // name, exponent, line, col
}

/// A parsed knot file: optional headers plus the presentation sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotFile {
    pub name: Option<String>,
    pub genus: Option<Genus>,
    pub gens: Vec<String>,
    pub weights: Option<Vec<i64>>,
    pub relators: Vec<SourceWord>,
}

pub fn parse_knot_file(src: &str) -> Result<KnotFile, ParseError> {
    let mut sc = Scanner::new(src, true);
    let mut file = KnotFile { name: None, genus: None, gens: Vec::new(), weights: None, relators: Vec::new() };
    let mut seen_gens = false;
    let mut seen_rels = false;

    loop {
        sc.skip_ws();
        if sc.peek().is_none() {
            break;
        }
        let (kline, kcol) = (sc.line, sc.col);
        let key = sc.ident().ok_or_else(|| sc.error("expected a section keyword"))?;
        sc.expect(b':')?;
        match key.as_str() {
            "name" => {
                if file.name.is_some() {
                    return Err(ParseError { line: kline, col: kcol, msg: "duplicate name section".into() });
                }
                sc.skip_ws();
                let mut value = String::new();
                while let Some(b) = sc.peek() {
                    if b == b';' {
                        break;
                    }
                    value.push(b as char);
                    sc.bump();
                }
                sc.expect(b';')?;
                file.name = Some(value.trim().to_string());
            }
            "genus" => {
                if file.genus.is_some() {
                    return Err(ParseError { line: kline, col: kcol, msg: "duplicate genus section".into() });
                }
                sc.skip_ws();
                let g = if sc.peek().map(|b| b.is_ascii_alphabetic()).unwrap_or(false) {
                    let word = sc.ident().unwrap();
                    if word != "classical" {
                        return Err(sc.error(format!("genus must be a nonnegative integer or 'classical', got '{word}'")));
                    }
                    Genus::Classical
                } else {
                    let v = sc.signed_int()?;
                    if v < 0 {
                        return Err(sc.error("genus cannot be negative"));
                    }
                    Genus::Surface(v as u32)
                };
                sc.expect(b';')?;
                file.genus = Some(g);
            }
            "gens" => {
                if seen_gens {
                    return Err(ParseError { line: kline, col: kcol, msg: "duplicate gens section".into() });
                }
                seen_gens = true;
                while let Some(g) = sc.ident() {
                    file.gens.push(g);
                }
                sc.expect(b';')?;
                if file.gens.is_empty() {
                    return Err(ParseError { line: kline, col: kcol, msg: "gens section is empty".into() });
                }
            }
            "weights" => {
                if file.weights.is_some() {
                    return Err(ParseError { line: kline, col: kcol, msg: "duplicate weights section".into() });
                }
                let mut ws = Vec::new();
                loop {
                    sc.skip_ws();
                    match sc.peek() {
                        Some(b) if b == b'-' || b == b'+' || b.is_ascii_digit() => {
                            ws.push(sc.signed_int()?)
                        }
                        _ => break,
                    }
                }
                sc.expect(b';')?;
                file.weights = Some(ws);
            }
            "rels" => {
                if seen_rels {
                    return Err(ParseError { line: kline, col: kcol, msg: "duplicate rels section".into() });
                }
                seen_rels = true;
                let mut current = SourceWord { syllables: Vec::new() };
                loop {
                    sc.skip_ws();
                    match sc.peek() {
                        Some(b';') => {
                            sc.bump();
                            if !current.syllables.is_empty() {
                                file.relators.push(current);
                            }
                            break;
                        }
                        Some(b',') => {
                            sc.bump();
                            if current.syllables.is_empty() {
                                return Err(sc.error("empty relator"));
                            }
                            file.relators.push(std::mem::replace(
                                &mut current,
                                SourceWord { syllables: Vec::new() },
                            ));
                        }
                        Some(_) => {
                            let (line, col) = (sc.line, sc.col);
                            let name = sc
                                .ident()
                                .ok_or_else(|| sc.error("expected a generator name"))?;
                            let exp = if sc.peek() == Some(b'^') {
                                sc.bump();
                                sc.signed_int()?
                            } else {
                                1
                            };
                            current.syllables.push((name, exp, line, col));
                        }
                        None => return Err(sc.error("unterminated rels section")),
                    }
                }
            }
            other => {
                return Err(ParseError {
                    line: kline,
                    col: kcol,
                    msg: format!("unknown section '{other}'"),
                })
            }
        }
    }
    if !seen_gens {
        return Err(ParseError { line: sc.line, col: sc.col, msg: "missing gens section".into() });
    }
    Ok(file)
}

impl KnotFile {
    pub fn to_presentation(&self) -> Result<Presentation, ParseError> {
        let weights = match &self.weights {
            Some(w) => {
                if w.len() != self.gens.len() {
                    return Err(ParseError {
                        line: 1,
                        col: 1,
                        msg: format!(
                            "{} weights for {} generators",
                            w.len(),
                            self.gens.len()
                        ),
                    });
                }
                w.clone()
            }
            None => vec![1; self.gens.len()],
        };
        let mut relators = Vec::new();
        let mut positions = Vec::new();
        for word in &self.relators {
            let mut syllables = Vec::new();
            for (name, exp, line, col) in &word.syllables {
                let idx = self.gens.iter().position(|g| g == name).ok_or(ParseError {
                    line: *line,
                    col: *col,
                    msg: format!("unknown generator '{name}'"),
                })?;
                syllables.push((idx, *exp));
            }
            let (l, c) = word.syllables.first().map(|s| (s.2, s.3)).unwrap_or((1, 1));
            positions.push((l, c));
            relators.push(Word::new(syllables));
        }
        Presentation::new(self.gens.clone(), weights, relators).map_err(|e| {
            // Attach the position of the offending relator when there is one.
            let (line, col) = match &e {
                crate::fox::FoxError::UnbalancedRelator { index, .. } => {
                    positions.get(*index).copied().unwrap_or((1, 1))
                }
                _ => (1, 1),
            };
            ParseError { line, col, msg: e.to_string() }
        })
    }

    /// Interpret as a knot. Files without a genus header default to
    /// classical knots, which keeps them usable as twist-spin input.
    pub fn to_knot(&self) -> Result<SurfaceKnot, ParseError> {
        let presentation = self.to_presentation()?;
        let genus = self.genus.unwrap_or(Genus::Classical);
        let name = self.name.clone().unwrap_or_else(|| "knot".to_string());
        SurfaceKnot::from_presentation(name, genus, presentation)
            .map_err(|e| ParseError { line: 1, col: 1, msg: e.to_string() })
    }
}

/// Print a knot as a DSL file that parses back to the same knot.
pub fn knot_to_dsl(k: &SurfaceKnot) -> String {
    let p = k.presentation();
    let mut out = String::new();
    out.push_str(&format!("name: {} ;\n", k.name));
    out.push_str(&format!("genus: {} ;\n", k.genus));
    out.push_str(&format!("gens: {} ;\n", p.gens().join(" ")));
    if !p.all_weights_one() {
        let ws: Vec<String> = p.weights().iter().map(|w| w.to_string()).collect();
        out.push_str(&format!("weights: {} ;\n", ws.join(" ")));
    }
    if !p.relators().is_empty() {
        let rels: Vec<String> = p.relators().iter().map(|r| word_to_text(r, p.gens())).collect();
        out.push_str(&format!("rels: {} ;\n", rels.join(" , ")));
    }
    out
}

fn word_to_text(w: &Word, gens: &[String]) -> String {
    let parts: Vec<String> = w
        .syllables()
        .iter()
        .map(|&(g, e)| {
            if e == 1 {
                gens[g].clone()
            } else {
                format!("{}^{}", gens[g], e)
            }
        })
        .collect();
    parts.join(" ")
}

/// Canonical ideal text: basis generators joined by `; `.
pub fn ideal_to_text(i: &LaurentIdeal) -> String {
    i.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(k, c)| (k, c)))
    }

    #[test]
    fn poly_round_trips() {
        // Bit-exact round trips on normalized (lowest exponent 0) forms.
        for s in ["t^2 - t + 1", "3", "2t^2 - 5t + 2", "-t^3 + 2", "5t"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
        // Parse/print/parse is the identity even off normal forms.
        for s in ["2t^-1 + 1", "t^-2 - t^3"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn poly_accepts_loose_forms() {
        assert_eq!(parse_poly("2*t^2+1").unwrap(), poly(&[(2, 2), (0, 1)]));
        assert_eq!(parse_poly(" - t ").unwrap(), poly(&[(1, -1)]));
        assert_eq!(parse_poly("t^-2").unwrap(), poly(&[(-2, 1)]));
        assert_eq!(parse_poly("1+t").unwrap(), parse_poly("t + 1").unwrap());
    }

    #[test]
    fn poly_errors_are_located() {
        let e = parse_poly("t^2 $ 1").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        assert!(parse_poly("").is_err());
        assert!(parse_poly("t^").is_err());
    }

    #[test]
    fn ideal_parses() {
        let i = parse_ideal("3; t+1").unwrap();
        assert_eq!(i.to_string(), "3; t + 1");
        assert!(parse_ideal("0; 0").is_err());
    }

    #[test]
    fn knot_file_round_trip() {
        let src = "gens: x y ;\nrels: x y x y^-1 x^-1 y^-1 , x^2 y x^-2 y^-1 ;\n";
        let f = parse_knot_file(src).unwrap();
        assert_eq!(f.gens, vec!["x", "y"]);
        assert_eq!(f.relators.len(), 2);
        let k = f.to_knot().unwrap();
        let printed = knot_to_dsl(&k);
        let f2 = parse_knot_file(&printed).unwrap();
        assert_eq!(f2.to_knot().unwrap().presentation(), k.presentation());
    }

    #[test]
    fn knot_file_headers_and_comments() {
        let src = "# twist spun trefoil\nname: tau2 trefoil ;\ngenus: 0 ;\ngens: x y ;\nrels: x y x y^-1 x^-1 y^-1 , x^2 y x^-2 y^-1 ;\n";
        let f = parse_knot_file(src).unwrap();
        assert_eq!(f.name.as_deref(), Some("tau2 trefoil"));
        assert_eq!(f.genus, Some(Genus::Surface(0)));
    }

    #[test]
    fn knot_file_errors_located() {
        let to_knot = |src: &str| parse_knot_file(src).and_then(|f| f.to_knot());
        let e = to_knot("gens: x ;\nrels: x z^-1 ;\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.msg.contains("unknown generator"));

        let e = to_knot("gens: x y ;\nrels: x y ;\n").unwrap_err();
        assert!(e.msg.contains("abelianize"));
        assert_eq!(e.line, 2);

        let e = parse_knot_file("genus: -1 ;\ngens: x ;").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn unknown_section_rejected() {
        let e = parse_knot_file("gens: x ;\nfoo: 1 ;").unwrap_err();
        assert!(e.msg.contains("unknown section"));
    }
}
