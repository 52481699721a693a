//! Expression parsing for the command line: tensor words, bracket symbols
//! and basis-sequence polynomials, with byte-position error reporting.
//!
//! Tensor grammar: sums of terms; a term is an optional coefficient
//! (`3`, `-2`, `1/2`) optionally followed by `*` and a word; words are
//! `|`-separated monomial slots like `x^2*y|1|z`; `()` is the scalar word
//! (only valid where a zero-slot word is legal). Bracket symbols are written
//! `u0.[u1,u2]`, basis sequences `e0 + 3*e2` or as a dense comma list `1,0,3`.

use std::fmt;

use num::BigInt;

use mixshuffle_core::baxter::{BaxElement, BaxWord};
use mixshuffle_core::cartier::{CartierElement, CartierSymbol};
use mixshuffle_core::hurwitz::HurwitzPolynomial;
use mixshuffle_core::monomial::{Alphabet, Monomial};
use mixshuffle_core::ring::{Coeff, RingDescriptor};
use mixshuffle_core::tensor::{PlusElement, PlusWord};

/// A parse failure with the byte offset it occurred at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    fn new(pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            pos,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Bar,
    Caret,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Dot,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(s) => format!("number {s:?}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Bar => "'|'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::LBrack => "'['".into(),
            Tok::RBrack => "']'".into(),
            Tok::Comma => "','".into(),
            Tok::Dot => "'.'".into(),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '|' => Some(Tok::Bar),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push((start, tok));
            i += 1;
            continue;
        }
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].to_string())));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => {
                return Err(ParseError::new(start, format!("unexpected character {c:?}")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
    ring: &'a RingDescriptor,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(
        src: &str,
        ring: &'a RingDescriptor,
        alphabet: &'a Alphabet,
    ) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(src)?,
            idx: 0,
            end: src.len(),
            ring,
            alphabet,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.idx + 1).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<usize, ParseError> {
        match self.bump() {
            Some((p, t)) if t == want => Ok(p),
            Some((p, t)) => Err(ParseError::new(
                p,
                format!("expected {}, found {}", want.describe(), t.describe()),
            )),
            None => Err(ParseError::new(
                self.end,
                format!("expected {}, found end of input", want.describe()),
            )),
        }
    }

    fn at_term_end(&self) -> bool {
        matches!(
            self.peek(),
            None | Some(Tok::Plus) | Some(Tok::Minus) | Some(Tok::RParen) | Some(Tok::RBrack)
                | Some(Tok::Comma)
        )
    }

    /// Finishes a coefficient whose integer part was already consumed.
    fn finish_coeff(&mut self, pos: usize, digits: &str) -> Result<Coeff, ParseError> {
        let numer: BigInt = digits
            .parse()
            .map_err(|_| ParseError::new(pos, "malformed integer"))?;
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.bump();
            let (dpos, dtok) = self
                .bump()
                .ok_or_else(|| ParseError::new(self.end, "expected denominator"))?;
            let Tok::Int(den) = dtok else {
                return Err(ParseError::new(dpos, "expected denominator digits"));
            };
            if *self.ring != RingDescriptor::Rat {
                return Err(ParseError::new(
                    pos,
                    format!("fractional coefficients are not elements of {}", self.ring),
                ));
            }
            let denom: BigInt = den
                .parse()
                .map_err(|_| ParseError::new(dpos, "malformed denominator"))?;
            if denom == BigInt::from(0) {
                return Err(ParseError::new(dpos, "denominator must be nonzero"));
            }
            return Ok(Coeff::Rat(num::BigRational::new(numer, denom)));
        }
        Ok(Coeff::from_bigint(self.ring, &numer))
    }

    fn parse_exponent(&mut self) -> Result<u32, ParseError> {
        match self.bump() {
            Some((p, Tok::Int(digits))) => digits
                .parse::<u32>()
                .map_err(|_| ParseError::new(p, "exponent out of range")),
            Some((p, t)) => Err(ParseError::new(
                p,
                format!("expected exponent digits, found {}", t.describe()),
            )),
            None => Err(ParseError::new(self.end, "expected exponent digits")),
        }
    }

    fn parse_atom(&mut self) -> Result<Monomial, ParseError> {
        match self.bump() {
            Some((_, Tok::Int(d))) if d == "1" => Ok(Monomial::one()),
            Some((p, Tok::Int(d))) => Err(ParseError::new(
                p,
                format!("only 1 may appear as a monomial factor, found {d}"),
            )),
            Some((p, Tok::Ident(name))) => {
                let index = self
                    .alphabet
                    .index_of(&name)
                    .ok_or_else(|| ParseError::new(p, format!("unknown generator {name:?}")))?;
                let exp = if matches!(self.peek(), Some(Tok::Caret)) {
                    self.bump();
                    self.parse_exponent()?
                } else {
                    1
                };
                Ok(Monomial::from_pairs([(index, exp)]))
            }
            Some((p, t)) => Err(ParseError::new(
                p,
                format!("expected a generator or 1, found {}", t.describe()),
            )),
            None => Err(ParseError::new(self.end, "expected a generator or 1")),
        }
    }

    fn parse_monomial(&mut self) -> Result<Monomial, ParseError> {
        let mut m = self.parse_atom()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            m = m.mul(&self.parse_atom()?);
        }
        Ok(m)
    }

    /// `slot ('|' slot)*`, with the first slot already parsed.
    fn continue_word(&mut self, first: Monomial) -> Result<Vec<Monomial>, ParseError> {
        let mut slots = vec![first];
        while matches!(self.peek(), Some(Tok::Bar)) {
            self.bump();
            slots.push(self.parse_monomial()?);
        }
        Ok(slots)
    }

    fn parse_word(&mut self) -> Result<Vec<Monomial>, ParseError> {
        let first = self.parse_monomial()?;
        self.continue_word(first)
    }

    /// A word, possibly parenthesized; `()` is the zero-slot word.
    fn parse_wordgroup(&mut self) -> Result<Vec<Monomial>, ParseError> {
        if matches!(self.peek(), Some(Tok::LParen)) {
            self.bump();
            if matches!(self.peek(), Some(Tok::RParen)) {
                self.bump();
                return Ok(Vec::new());
            }
            let word = self.parse_word()?;
            self.expect(Tok::RParen)?;
            return Ok(word);
        }
        self.parse_word()
    }

    /// One unsigned term of a tensor-word expression.
    fn parse_word_term(&mut self) -> Result<(Vec<Monomial>, Coeff), ParseError> {
        if let Some(Tok::Int(_)) = self.peek() {
            let (pos, tok) = self.bump().expect("peeked");
            let Tok::Int(digits) = tok else { unreachable!() };
            let followed_by_fraction = matches!(self.peek(), Some(Tok::Slash));
            // A bare `1` is the identity slot, not a coefficient.
            if digits == "1" && !followed_by_fraction {
                if matches!(self.peek(), Some(Tok::Bar)) {
                    let word = self.continue_word(Monomial::one())?;
                    return Ok((word, Coeff::one(self.ring)));
                }
                if matches!(self.peek(), Some(Tok::Star)) {
                    self.bump();
                    let word = self.parse_wordgroup()?;
                    return Ok((word, Coeff::one(self.ring)));
                }
                if self.at_term_end() {
                    return Ok((vec![Monomial::one()], Coeff::one(self.ring)));
                }
                return Err(ParseError::new(
                    self.pos(),
                    "expected '|', '*', '+', '-' or end of input after 1",
                ));
            }
            let coeff = self.finish_coeff(pos, &digits)?;
            if matches!(self.peek(), Some(Tok::Star)) {
                self.bump();
                let word = self.parse_wordgroup()?;
                return Ok((word, coeff));
            }
            if self.at_term_end() {
                // A bare coefficient scales the identity-slot word.
                return Ok((vec![Monomial::one()], coeff));
            }
            return Err(ParseError::new(
                self.pos(),
                "expected '*' or end of term after a coefficient",
            ));
        }
        let word = self.parse_wordgroup()?;
        Ok((word, Coeff::one(self.ring)))
    }

    /// `['-'] term (('+'|'-') term)*`, handing each signed term to `emit`.
    fn parse_sum<T>(
        &mut self,
        mut parse_term: impl FnMut(&mut Self) -> Result<T, ParseError>,
        mut emit: impl FnMut(T, bool) -> Result<(), ParseError>,
    ) -> Result<(), ParseError> {
        let mut negate = false;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            negate = true;
        }
        loop {
            let term = parse_term(self)?;
            emit(term, negate)?;
            match self.bump() {
                None => return Ok(()),
                Some((_, Tok::Plus)) => negate = false,
                Some((_, Tok::Minus)) => negate = true,
                Some((p, t)) => {
                    return Err(ParseError::new(
                        p,
                        format!("expected '+', '-' or end of input, found {}", t.describe()),
                    ));
                }
            }
        }
    }
}

fn signed(c: Coeff, negate: bool) -> Coeff {
    if negate {
        c.neg()
    } else {
        c
    }
}

/// Parses an element of the free Baxter algebra (every word has a head slot).
pub fn parse_bax(
    src: &str,
    ring: &RingDescriptor,
    alphabet: &Alphabet,
) -> Result<BaxElement, ParseError> {
    let mut parser = Parser::new(src, ring, alphabet)?;
    let mut terms: Vec<(BaxWord, Coeff)> = Vec::new();
    parser.parse_sum(
        |p| {
            let pos = p.pos();
            let (word, coeff) = p.parse_word_term()?;
            let word = BaxWord::new(word).map_err(|_| {
                ParseError::new(pos, "the zero-slot word '()' needs a head slot here")
            })?;
            Ok((word, coeff))
        },
        |(word, coeff), negate| {
            terms.push((word, signed(coeff, negate)));
            Ok(())
        },
    )?;
    BaxElement::from_terms(ring.clone(), alphabet.clone(), terms)
        .map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses an element of the head-less shuffle algebra (the scalar word `()`
/// is allowed).
pub fn parse_plus(
    src: &str,
    ring: &RingDescriptor,
    alphabet: &Alphabet,
) -> Result<PlusElement, ParseError> {
    let mut parser = Parser::new(src, ring, alphabet)?;
    let mut terms: Vec<(PlusWord, Coeff)> = Vec::new();
    parser.parse_sum(
        |p| p.parse_word_term(),
        |(word, coeff), negate| {
            terms.push((PlusWord::new(word), signed(coeff, negate)));
            Ok(())
        },
    )?;
    PlusElement::from_terms(ring.clone(), alphabet.clone(), terms)
        .map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses a sum of bracket symbols like `2*x.[y,1*z] - x*y.[]`.
pub fn parse_cartier(
    src: &str,
    ring: &RingDescriptor,
    alphabet: &Alphabet,
) -> Result<CartierElement, ParseError> {
    let mut parser = Parser::new(src, ring, alphabet)?;
    let mut terms: Vec<(CartierSymbol, Coeff)> = Vec::new();
    parser.parse_sum(
        |p| {
            // `1.[...]` keeps the 1 as the head monomial; any other leading
            // number is a coefficient and must be followed by `*`.
            let leading_identity_head =
                matches!(p.peek(), Some(Tok::Int(d)) if d == "1")
                    && matches!(p.peek2(), Some(Tok::Dot));
            let coeff = match p.peek() {
                Some(Tok::Int(_)) if !leading_identity_head => {
                    let (pos, tok) = p.bump().expect("peeked");
                    let Tok::Int(digits) = tok else { unreachable!() };
                    let c = p.finish_coeff(pos, &digits)?;
                    p.expect(Tok::Star)?;
                    c
                }
                _ => Coeff::one(p.ring),
            };
            let sym_pos = p.pos();
            let head = p.parse_monomial()?;
            p.expect(Tok::Dot)?;
            p.expect(Tok::LBrack)?;
            let mut bracket = Vec::new();
            if !matches!(p.peek(), Some(Tok::RBrack)) {
                bracket.push(p.parse_monomial()?);
                while matches!(p.peek(), Some(Tok::Comma)) {
                    p.bump();
                    bracket.push(p.parse_monomial()?);
                }
            }
            p.expect(Tok::RBrack)?;
            let symbol = CartierSymbol::new(head, bracket)
                .map_err(|e| ParseError::new(sym_pos, e.to_string()))?;
            Ok((symbol, coeff))
        },
        |(symbol, coeff), negate| {
            terms.push((symbol, signed(coeff, negate)));
            Ok(())
        },
    )?;
    CartierElement::from_terms(ring.clone(), alphabet.clone(), terms)
        .map_err(|e| ParseError::new(0, e.to_string()))
}

/// Parses a basis-sequence polynomial, either as `e0 + 3*e2` (with `3e2`
/// juxtaposition allowed) or as a dense comma list `1,0,3`.
pub fn parse_hurwitz(src: &str, ring: &RingDescriptor) -> Result<HurwitzPolynomial, ParseError> {
    let alphabet = Alphabet::empty();
    let mut parser = Parser::new(src, ring, &alphabet)?;
    let comma_form = parser.toks.iter().any(|(_, t)| *t == Tok::Comma);
    if comma_form {
        let mut coeffs = Vec::new();
        loop {
            let mut negate = false;
            if matches!(parser.peek(), Some(Tok::Minus)) {
                parser.bump();
                negate = true;
            }
            match parser.bump() {
                Some((pos, Tok::Int(digits))) => {
                    coeffs.push(signed(parser.finish_coeff(pos, &digits)?, negate));
                }
                Some((p, t)) => {
                    return Err(ParseError::new(
                        p,
                        format!("expected a coefficient, found {}", t.describe()),
                    ));
                }
                None => return Err(ParseError::new(parser.end, "expected a coefficient")),
            }
            match parser.bump() {
                None => break,
                Some((_, Tok::Comma)) => continue,
                Some((p, t)) => {
                    return Err(ParseError::new(
                        p,
                        format!("expected ',' or end of input, found {}", t.describe()),
                    ));
                }
            }
        }
        return HurwitzPolynomial::from_coeffs(ring.clone(), coeffs)
            .map_err(|e| ParseError::new(0, e.to_string()));
    }

    fn basis_index(pos: usize, name: &str) -> Result<usize, ParseError> {
        let bad = || {
            ParseError::new(
                pos,
                format!("expected a basis element like e2, found {name:?}"),
            )
        };
        let rest = name.strip_prefix('e').ok_or_else(bad)?;
        rest.parse::<usize>().map_err(|_| bad())
    }

    let mut pairs: Vec<(usize, Coeff)> = Vec::new();
    parser.parse_sum(
        |p| match p.bump() {
            Some((pos, Tok::Int(digits))) => {
                let coeff = p.finish_coeff(pos, &digits)?;
                match p.peek() {
                    Some(Tok::Star) => {
                        p.bump();
                        match p.bump() {
                            Some((ipos, Tok::Ident(name))) => Ok((basis_index(ipos, &name)?, coeff)),
                            Some((ipos, t)) => Err(ParseError::new(
                                ipos,
                                format!("expected a basis element, found {}", t.describe()),
                            )),
                            None => Err(ParseError::new(p.end, "expected a basis element")),
                        }
                    }
                    Some(Tok::Ident(_)) => {
                        let Some((ipos, Tok::Ident(name))) = p.bump() else {
                            unreachable!()
                        };
                        Ok((basis_index(ipos, &name)?, coeff))
                    }
                    _ => Ok((0, coeff)),
                }
            }
            Some((pos, Tok::Ident(name))) => Ok((basis_index(pos, &name)?, Coeff::one(p.ring))),
            Some((pos, t)) => Err(ParseError::new(
                pos,
                format!("expected a term, found {}", t.describe()),
            )),
            None => Err(ParseError::new(p.end, "expected a term")),
        },
        |(index, coeff), negate| {
            pairs.push((index, signed(coeff, negate)));
            Ok(())
        },
    )?;
    let len = pairs.iter().map(|(i, _)| i + 1).max().unwrap_or(0);
    let mut coeffs = vec![Coeff::zero(ring); len];
    for (i, c) in pairs {
        coeffs[i] = coeffs[i].add(&c);
    }
    HurwitzPolynomial::from_coeffs(ring.clone(), coeffs)
        .map_err(|e| ParseError::new(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mixshuffle_core::ring::Weight;

    fn int() -> RingDescriptor {
        RingDescriptor::Int
    }

    fn ab() -> Alphabet {
        Alphabet::new(["x", "y"]).unwrap()
    }

    #[test]
    fn parses_words_with_coefficients() {
        let alphabet = ab();
        let e = parse_bax("x|y + 2*(1|x*y)", &int(), &alphabet).unwrap();
        assert_eq!(e.term_count(), 2);
        assert_eq!(e.to_string(), "2*1|x*y + x|y");
        let reparsed = parse_bax(&e.to_string(), &int(), &alphabet).unwrap();
        assert_eq!(reparsed, e);
    }

    #[test]
    fn parses_identity_slots_and_bare_numbers() {
        let alphabet = ab();
        assert_eq!(parse_bax("1", &int(), &alphabet).unwrap().to_string(), "1");
        assert_eq!(
            parse_bax("1|x", &int(), &alphabet).unwrap().to_string(),
            "1|x"
        );
        assert_eq!(parse_bax("3", &int(), &alphabet).unwrap().to_string(), "3*1");
        assert_eq!(
            parse_bax("2*1 - 1", &int(), &alphabet).unwrap().to_string(),
            "1"
        );
    }

    #[test]
    fn scalar_word_only_in_plus_expressions() {
        let alphabet = ab();
        assert!(parse_bax("()", &int(), &alphabet).is_err());
        let scalar = parse_plus("2*()", &int(), &alphabet).unwrap();
        assert_eq!(scalar.to_string(), "2*()");
        let mixed = parse_plus("() + x|y", &int(), &alphabet).unwrap();
        assert_eq!(mixed.term_count(), 2);
    }

    #[test]
    fn exponents_and_powers() {
        let alphabet = ab();
        let e = parse_bax("x^2*y|x^0", &int(), &alphabet).unwrap();
        assert_eq!(e.to_string(), "x^2*y|1");
    }

    #[test]
    fn reports_unknown_generator_with_position() {
        let alphabet = ab();
        let err = parse_bax("x|z", &int(), &alphabet).unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(err.message.contains("unknown generator"));
    }

    #[test]
    fn rational_coefficients_only_in_rational_ring() {
        let alphabet = ab();
        assert!(parse_bax("1/2*x", &int(), &alphabet).is_err());
        let e = parse_bax("1/2*x + x", &RingDescriptor::Rat, &alphabet).unwrap();
        assert_eq!(e.to_string(), "3/2*x");
    }

    #[test]
    fn product_round_trip_at_weight_minus_one() {
        let alphabet = Alphabet::new(["u", "v"]).unwrap();
        let x = parse_bax("1|u", &int(), &alphabet).unwrap();
        let y = parse_bax("1|v", &int(), &alphabet).unwrap();
        let p =
            mixshuffle_core::baxter::augmented_product(&x, &y, &Weight::of_i64(&int(), -1))
                .unwrap();
        assert_eq!(p.to_string(), "1|u|v + 1|v|u - 1|u*v");
        assert_eq!(parse_bax(&p.to_string(), &int(), &alphabet).unwrap(), p);
    }

    #[test]
    fn parses_cartier_symbols() {
        let alphabet = Alphabet::new(["x", "y", "z"]).unwrap();
        let e = parse_cartier("x.[y,1*z]", &int(), &alphabet).unwrap();
        assert_eq!(e.to_string(), "x.[y,z]");
        let head_only = parse_cartier("x*y.[] - 2*y.[]", &int(), &alphabet).unwrap();
        assert_eq!(head_only.term_count(), 2);
        assert!(parse_cartier("1.[]", &int(), &alphabet).is_err());
        assert!(parse_cartier("x.[1]", &int(), &alphabet).is_err());
        assert!(parse_cartier("3", &int(), &alphabet).is_err());
    }

    #[test]
    fn parses_hurwitz_polynomials() {
        let e = parse_hurwitz("e0+3e2", &int()).unwrap();
        assert_eq!(e.to_string(), "e0 + 3*e2");
        assert_eq!(parse_hurwitz("1,0,3", &int()).unwrap(), e);
        assert_eq!(parse_hurwitz("e1 - e1", &int()).unwrap().to_string(), "0");
        assert_eq!(parse_hurwitz("5", &int()).unwrap().to_string(), "5*e0");
        assert_eq!(parse_hurwitz("2*e3", &int()).unwrap().to_string(), "2*e3");
        assert!(parse_hurwitz("f2", &int()).is_err());
        assert!(parse_hurwitz("e", &int()).is_err());
    }

    #[test]
    fn rejects_trailing_garbage() {
        let alphabet = ab();
        let err = parse_bax("x|y )", &int(), &alphabet).unwrap_err();
        assert_eq!(err.pos, 4);
    }
}
