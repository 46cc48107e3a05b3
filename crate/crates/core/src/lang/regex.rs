use std::fmt;

use crate::error::{Error, Result};
use crate::lang::Alphabet;

/// Rational expression over single-letter symbols.
///
/// Grammar (loosest to tightest): `e := e '+' e | e e | e '*' | '(' e ')' | letter | '1' | '0'`.
/// `1` is the empty word and `0` the empty set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Regex {
    Zero,
    One,
    Letter(char),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn union(a: Regex, b: Regex) -> Regex {
        Regex::Union(Box::new(a), Box::new(b))
    }

    pub fn concat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    /// Letters occurring in the expression, sorted.
    pub fn letters(&self) -> Vec<char> {
        fn walk(r: &Regex, out: &mut Vec<char>) {
            match r {
                Regex::Zero | Regex::One => {}
                Regex::Letter(c) => out.push(*c),
                Regex::Union(a, b) | Regex::Concat(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Regex::Star(a) => walk(a, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Parses `text`. When `alphabet` is `None`, every lowercase letter is accepted.
pub fn parse_regex(text: &str, alphabet: Option<&Alphabet>) -> Result<Regex> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, alphabet };
    let r = p.union()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(r)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    alphabet: Option<&'a Alphabet>,
}

impl Parser<'_> {
    fn error(&self, message: String) -> Error {
        Error::Syntax { offset: self.pos, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn union(&mut self) -> Result<Regex> {
        let mut left = self.concat()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let right = self.concat()?;
            left = Regex::union(left, right);
        }
        Ok(left)
    }

    fn concat(&mut self) -> Result<Regex> {
        let mut left = self.star()?;
        while matches!(self.peek(), Some(c) if c == '(' || c == '0' || c == '1' || c.is_ascii_lowercase())
        {
            let right = self.star()?;
            left = Regex::concat(left, right);
        }
        Ok(left)
    }

    fn star(&mut self) -> Result<Regex> {
        let mut r = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            r = Regex::star(r);
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex> {
        match self.peek() {
            None => Err(self.error("unexpected end of input".into())),
            Some('(') => {
                self.pos += 1;
                let r = self.union()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(r)
            }
            Some('0') => {
                self.pos += 1;
                Ok(Regex::Zero)
            }
            Some('1') => {
                self.pos += 1;
                Ok(Regex::One)
            }
            Some(c) if c.is_ascii_lowercase() => {
                if let Some(a) = self.alphabet {
                    if a.index_of(c).is_none() {
                        return Err(Error::UnknownSymbol(c));
                    }
                }
                self.pos += 1;
                Ok(Regex::Letter(c))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }
}

impl fmt::Display for Regex {
    /// Prints with the fewest parentheses that parse back to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(r: &Regex) -> u8 {
            match r {
                Regex::Union(..) => 0,
                Regex::Concat(..) => 1,
                _ => 2,
            }
        }
        fn wrap(r: &Regex, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if prec(r) < min {
                write!(f, "({r})")
            } else {
                write!(f, "{r}")
            }
        }
        match self {
            Regex::Zero => write!(f, "0"),
            Regex::One => write!(f, "1"),
            Regex::Letter(c) => write!(f, "{c}"),
            Regex::Union(a, b) => {
                wrap(a, 0, f)?;
                write!(f, "+")?;
                wrap(b, 1, f)
            }
            Regex::Concat(a, b) => {
                wrap(a, 1, f)?;
                wrap(b, 2, f)
            }
            Regex::Star(a) => {
                wrap(a, 2, f)?;
                write!(f, "*")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn l(c: char) -> Regex {
        Regex::Letter(c)
    }

    #[test]
    fn star_of_concat() {
        let r = parse_regex("(ab)*", None).unwrap();
        assert_eq!(r, Regex::star(Regex::concat(l('a'), l('b'))));
    }

    #[test]
    fn concat_binds_tighter_than_union() {
        let r = parse_regex("a+ba", None).unwrap();
        assert_eq!(r, Regex::union(l('a'), Regex::concat(l('b'), l('a'))));
    }

    #[test]
    fn unbalanced_parenthesis_offset() {
        match parse_regex("((a", None) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn symbol_outside_alphabet() {
        let a = Alphabet::parse("ab").unwrap();
        assert_eq!(parse_regex("abc", Some(&a)), Err(Error::UnknownSymbol('c')));
    }

    #[test]
    fn stray_characters() {
        assert!(matches!(parse_regex("a)", None), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_regex("+a", None), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_regex("", None), Err(Error::Syntax { .. })));
    }

    fn arb_regex() -> impl Strategy<Value = Regex> {
        let leaf = prop_oneof![
            Just(Regex::Zero),
            Just(Regex::One),
            Just(l('a')),
            Just(l('b')),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::union(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Regex::concat(a, b)),
                inner.prop_map(Regex::star),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(r in arb_regex()) {
            let text = r.to_string();
            prop_assert_eq!(parse_regex(&text, None).unwrap(), r);
        }
    }
}
